#!/usr/bin/env python3
"""Regenerate the exhaustive small-graph fixtures.

Writes connected_n{5..8}.g6: every connected simple graph on n vertices up to
isomorphism, one canonically labelled graph6 line each. Requires pynauty and
networkx. Graphs on n vertices are grown from all graphs on n-1 vertices by
attaching a new vertex to every neighbour subset, then deduplicated by nauty
certificate.
"""
import itertools
import sys
from pathlib import Path

import networkx as nx
import pynauty

EXPECTED_CONNECTED = {5: 21, 6: 112, 7: 853, 8: 11117}


def to_nauty(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.Graph(n, directed=False, adjacency_dict=adj)


def canonical(n, edges):
    g = to_nauty(n, edges)
    lab = pynauty.canon_label(g)
    pos = {old: new for new, old in enumerate(lab)}
    relabelled = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges)
    return pynauty.certificate(g), tuple(relabelled)


def grow(n, graphs):
    seen = {}
    for edges in graphs:
        for r in range(n):
            for nbrs in itertools.combinations(range(n - 1), r):
                cand = list(edges) + [(u, n - 1) for u in nbrs]
                cert, canon = canonical(n, cand)
                seen.setdefault(cert, canon)
    return [seen[c] for c in sorted(seen)]


def main(out_dir):
    graphs = [()]
    out = Path(out_dir)
    for n in range(2, 9):
        graphs = grow(n, graphs)
        if n < 5:
            continue
        lines = []
        for edges in graphs:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        assert len(lines) == EXPECTED_CONNECTED[n], (n, len(lines))
        lines.sort()
        (out / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(graphs)} graphs, {len(lines)} connected")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
