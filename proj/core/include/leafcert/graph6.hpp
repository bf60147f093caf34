#pragma once

#include <string>
#include <string_view>

#include "leafcert/graph.hpp"

namespace leafcert {

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted; sparse6 and digraph6 are rejected. Throws
/// ParseError carrying the offending byte offset.
Graph from_graph6(std::string_view line);

/// Canonical graph6 encoding (no header, no newline). Requires order >= 1.
std::string to_graph6(const Graph& g);

}  // namespace leafcert
