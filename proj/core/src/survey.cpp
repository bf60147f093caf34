#include "leafcert/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <set>
#include <string_view>
#include <thread>

#include "leafcert/errors.hpp"
#include "leafcert/graph6.hpp"
#include "leafcert/oracle.hpp"
#include "leafcert/structure.hpp"

namespace leafcert {
namespace {

enum class Outcome { Skipped, Certified, Inconclusive, Exceptional };

struct KOutcome {
  Outcome outcome = Outcome::Skipped;
  bool oracle_checked = false;
  bool oracle_value = false;
  std::vector<CheckKind> certified_by;  // non-advisory Certified checks
};

struct LineResult {
  bool connected = false;
  std::vector<KOutcome> per_k;
  std::vector<std::string> property_failures;
};

LineResult survey_line(const Graph& g, const SurveyOptions& options) {
  LineResult out;
  out.connected = is_connected(g);
  out.per_k.resize(options.k_max - options.k_min + 1);
  if (!out.connected) return out;
  out.property_failures = index_property_failures(g);

  const std::size_t n = g.order();
  for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
    KOutcome& slot = out.per_k[k - options.k_min];
    if (k < 2 || k + 1 > n) continue;
    const CertificateReport report = certify(g, k);
    for (const auto& c : report.checks) {
      if (c.verdict == Verdict::Certified && !c.advisory) {
        slot.certified_by.push_back(c.kind);
      }
    }
    slot.outcome = report.overall == Verdict::Certified     ? Outcome::Certified
                   : report.overall == Verdict::Exceptional ? Outcome::Exceptional
                                                            : Outcome::Inconclusive;
    if (n <= options.oracle_limit) {
      OracleOptions oracle;
      oracle.max_order = options.oracle_limit;
      slot.oracle_checked = true;
      slot.oracle_value = is_k_leaf_connected(g, k, oracle).value;
      // A k-leaf-connected graph with k <= n-2 is (k+1)-connected.
      if (slot.oracle_value && k + 2 <= n && n <= kDefaultConnectivityLimit &&
          vertex_connectivity(g) < k + 1) {
        out.property_failures.push_back("leaf-connected-implies-(k+1)-connected k=" +
                                        std::to_string(k));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> index_property_failures(const Graph& g) {
  std::vector<std::string> failures;
  const std::size_t n = g.order();
  const IndexReport idx = compute_indices(g);
  const Integer e = idx.e;
  const Integer span = n - 1;

  Integer cubes = 0;
  bool regular = true;
  for (Vertex v = 0; v < n; ++v) {
    const Integer d = g.degree(v);
    cubes += d * d * d;
    regular = regular && g.degree(v) == g.degree(0);
  }
  if (idx.hm1 > 2 * cubes || ((idx.hm1 == 2 * cubes) != regular)) {
    failures.emplace_back("hm1-cubic-bound");
  }
  if (4 * e > idx.hm1 || idx.hm1 > 4 * e * span * span) {
    failures.emplace_back("hm1-edge-sandwich");
  }
  if (e > idx.hm2 || idx.hm2 > e * span * span * span * span) {
    failures.emplace_back("hm2-edge-sandwich");
  }

  const DistanceMatrix dist = all_pairs_distances(g);
  Rational weighted = 0;
  for (Vertex v = 0; v < n; ++v) {
    const long d = static_cast<long>(g.degree(v));
    const Rational bound = Rational(d) + Rational(static_cast<long>(n) - 1 - d, 2);
    const Rational& dhat = (*idx.dhat)[v];
    std::uint32_t eccentricity = 0;
    for (Vertex u = 0; u < n; ++u) eccentricity = std::max(eccentricity, dist(v, u));
    if (dhat > bound || ((dhat == bound) != (eccentricity <= 2))) {
      failures.emplace_back("dhat-bound v=" + std::to_string(v));
    }
    weighted += Rational(d) * dhat;
  }
  if (weighted != *idx.rdd) failures.emplace_back("rdd-vertex-identity");
  return failures;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("LEAFCERT_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> read_corpus(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    lines.push_back(line);
  }
  return lines;
}

SurveyReport run_survey(std::istream& corpus, const SurveyOptions& options) {
  return run_survey(read_corpus(corpus), options);
}

SurveyReport run_survey(const std::vector<std::string>& corpus,
                        const SurveyOptions& options) {
  if (options.k_min < 2 || options.k_max < options.k_min) {
    throw ArgumentError("k range must satisfy 2 <= k_min <= k_max");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<Graph> graphs;
  std::vector<std::size_t> line_numbers;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string_view text = corpus[i];
    if (text.empty() || text == ">>graph6<<") continue;
    try {
      graphs.push_back(from_graph6(text));
    } catch (const ParseError& err) {
      throw ParseError("corpus line " + std::to_string(i + 1) + ": " + err.what(),
                       err.offset());
    }
    line_numbers.push_back(i + 1);
  }

  std::vector<LineResult> results(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      try {
        results[i] = survey_line(graphs[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::max(1u, options.threads ? options.threads : default_thread_count());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SurveyReport report;
  report.corpus_size = graphs.size();
  for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
    report.per_k.push_back(KStats{.k = k});
  }
  std::set<std::size_t> orders;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const LineResult& r = results[i];
    if (!r.connected) ++report.disconnected;
    orders.insert(graphs[i].order());
    const std::string g6 = to_graph6(graphs[i]);
    for (const auto& p : r.property_failures) {
      report.property_failures.push_back({line_numbers[i], g6, p});
    }
    for (std::size_t j = 0; j < r.per_k.size(); ++j) {
      const KOutcome& o = r.per_k[j];
      KStats& stats = report.per_k[j];
      switch (o.outcome) {
        case Outcome::Skipped: ++stats.skipped; continue;
        case Outcome::Certified: ++stats.certified; break;
        case Outcome::Inconclusive: ++stats.inconclusive; break;
        case Outcome::Exceptional: ++stats.exceptional; break;
      }
      ++stats.evaluated;
      for (CheckKind kind : o.certified_by) ++report.check_firings[kind];
      if (!o.oracle_checked) continue;
      ++stats.oracle_checked;
      if (o.oracle_value) ++stats.oracle_true;
      if (o.outcome == Outcome::Certified) {
        ++stats.certified_and_oracle_checked;
        if (!o.oracle_value) {
          report.violations.push_back({line_numbers[i], g6, stats.k, o.certified_by});
        }
      }
    }
  }

  for (std::size_t n : orders) {
    for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
      for (auto& entry : complement_value_audit(static_cast<long>(n),
                                                static_cast<long>(k))) {
        if (k == options.k_min || entry.family == Family::EdgeException) {
          report.audit.push_back(std::move(entry));
        }
      }
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace leafcert
