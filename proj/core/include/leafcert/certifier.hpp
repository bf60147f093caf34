#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leafcert/families.hpp"
#include "leafcert/graph.hpp"
#include "leafcert/indices.hpp"
#include "leafcert/numbers.hpp"

namespace leafcert {

enum class CheckKind {
  Dirac,
  DegreeSequence,
  EdgeCount,
  M1Bound,
  RDDBound,
  HM1Bound,
  M2Bound,
  HM1Weak,
  HM2Weak,
  HM1WeakConservative,
  HM2WeakConservative,
  ComplementM1,
  ComplementHM1,
  ClosureComplete,
};

// Evaluation order used by certify().
inline constexpr std::array<CheckKind, 14> kAllChecks = {
    CheckKind::Dirac,               CheckKind::DegreeSequence,
    CheckKind::EdgeCount,           CheckKind::M1Bound,
    CheckKind::RDDBound,            CheckKind::HM1Bound,
    CheckKind::M2Bound,             CheckKind::HM1Weak,
    CheckKind::HM2Weak,             CheckKind::HM1WeakConservative,
    CheckKind::HM2WeakConservative, CheckKind::ComplementM1,
    CheckKind::ComplementHM1,       CheckKind::ClosureComplete,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);

/// Advisory checks are reported but never make a certificate.
bool is_advisory(CheckKind kind);
bool has_threshold(CheckKind kind);

enum class Verdict { Certified, Inconclusive, Exceptional, NotApplicable };

std::string_view verdict_name(Verdict v);

/// Exact right-hand side of the kind's inequality at (n, k). Throws
/// ArgumentError for DegreeSequence and ClosureComplete.
Rational threshold(CheckKind kind, long n, long k);

/// Whether (n, k, minimum degree) lies inside the kind's hypothesis window.
bool is_applicable(CheckKind kind, long n, long k, long min_degree);

struct CheckResult {
  CheckKind kind{};
  bool applicable = false;
  std::optional<Rational> threshold;
  std::optional<Rational> measured;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Family> family;  // set iff verdict == Exceptional
  bool advisory = false;
};

/// Shared per-graph state so that several checks reuse one index report
/// and one closure.
class CheckContext {
 public:
  /// Throws ArgumentError when g is disconnected or k is outside 2..n-1.
  CheckContext(const Graph& g, std::size_t k);

  const Graph& graph() const { return graph_; }
  std::size_t k() const { return k_; }
  const IndexReport& indices() const { return indices_; }
  /// M1 and HM1 of the complement graph.
  const Integer& complement_m1();
  const Integer& complement_hm1();
  /// The (n+k-1)-closure.
  const Graph& closure();
  /// First listed family (of those given) isomorphic to the closure.
  std::optional<Family> exceptional_family(std::span<const Family> families);

 private:
  Graph graph_;
  std::size_t k_;
  IndexReport indices_;
  std::optional<Graph> complement_;
  std::optional<Integer> complement_m1_;
  std::optional<Integer> complement_hm1_;
  std::optional<Graph> closure_;
};

CheckResult check(CheckKind kind, const Graph& g, std::size_t k);
CheckResult check(CheckKind kind, CheckContext& context);

/// Degree-sequence test. Returns the smallest window index i at
/// which the obstruction holds, or nullopt when none does (certified).
std::optional<long> degree_sequence_obstruction(
    std::span<const std::size_t> sorted_degrees, long k);

struct CertificateReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t k = 0;
  IndexReport indices;
  std::vector<CheckResult> checks;
  Verdict overall = Verdict::Inconclusive;
};

/// Runs every check in kAllChecks order. Overall is Certified iff some
/// non-advisory check certified, Exceptional iff none did and some check was
/// Exceptional, Inconclusive otherwise.
CertificateReport certify(const Graph& g, std::size_t k);

/// Recomputes one closed form from the complement-index proofs and compares
/// it with the value obtained from the actual construction.
struct AuditEntry {
  Family family;
  long n = 0;
  long k = 0;
  IndexKind index{};  // of the complement
  std::string printed_formula;
  Integer printed;
  Integer computed;
  bool matches = false;
};

/// Audit entries for every family with n in range; k is used by the
/// EdgeException family only.
std::vector<AuditEntry> complement_value_audit(long n, long k);

}  // namespace leafcert
