#pragma once

#include <chrono>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "leafcert/certifier.hpp"

namespace leafcert {

struct SurveyOptions {
  std::size_t k_min = 2;
  std::size_t k_max = 2;
  std::size_t oracle_limit = 9;
  // 0 means "LEAFCERT_THREADS, else hardware concurrency".
  unsigned threads = 0;
};

struct KStats {
  std::size_t k = 0;
  std::size_t evaluated = 0;  // (graph, k) pairs certified
  std::size_t skipped = 0;    // disconnected, or k outside 2..n-1
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  std::size_t exceptional = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_true = 0;
  std::size_t certified_and_oracle_checked = 0;
};

struct SoundnessViolation {
  std::size_t line = 0;  // 1-based
  std::string graph6;
  std::size_t k = 0;
  std::vector<CheckKind> certified_by;
};

struct PropertyFailure {
  std::size_t line = 0;
  std::string graph6;
  std::string property;
};

struct SurveyReport {
  std::size_t corpus_size = 0;
  std::size_t disconnected = 0;
  std::vector<KStats> per_k;
  std::vector<SoundnessViolation> violations;
  std::map<CheckKind, std::size_t> check_firings;  // Certified verdicts
  std::vector<PropertyFailure> property_failures;
  std::vector<AuditEntry> audit;
  std::chrono::milliseconds elapsed{0};
};

/// Names of the index bounds that g violates: the hyper-Zagreb cubic bound
/// (tight exactly for regular graphs), the HM1 and HM2 edge sandwiches, the
/// reciprocal transmission bound (tight exactly at eccentricity <= 2) and
/// RDD = sum d(v) * dhat(v). Empty for every graph if the bounds hold.
/// g must be connected.
std::vector<std::string> index_property_failures(const Graph& g);

/// Worker count from LEAFCERT_THREADS, falling back to the hardware.
unsigned default_thread_count();

/// Certifies every corpus graph for every k in range, runs the oracle where
/// n <= oracle_limit and records Certified-but-false instances, and checks
/// the index sandwich bounds on every connected graph. Results do not depend
/// on the worker count. Throws ParseError naming the corpus line.
SurveyReport run_survey(const std::vector<std::string>& corpus,
                        const SurveyOptions& options);
SurveyReport run_survey(std::istream& corpus, const SurveyOptions& options);

/// Lines of a graph6 stream with trailing whitespace trimmed. Blank and header
/// lines are kept so positions match the file; run_survey skips them.
std::vector<std::string> read_corpus(std::istream& in);

}  // namespace leafcert
