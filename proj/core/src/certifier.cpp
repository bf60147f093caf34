#include "leafcert/certifier.hpp"

#include <utility>

#include "leafcert/closure.hpp"
#include "leafcert/errors.hpp"
#include "leafcert/graph6.hpp"
#include "leafcert/structure.hpp"

namespace leafcert {
namespace {

struct CheckInfo {
  CheckKind kind;
  std::string_view name;
  bool advisory;
};

constexpr std::array<CheckInfo, 14> kInfo = {{
    {CheckKind::Dirac, "Dirac", false},
    {CheckKind::DegreeSequence, "DegreeSequence", false},
    {CheckKind::EdgeCount, "EdgeCount", false},
    {CheckKind::M1Bound, "M1Bound", false},
    {CheckKind::RDDBound, "RDDBound", false},
    {CheckKind::HM1Bound, "HM1Bound", false},
    {CheckKind::M2Bound, "M2Bound", false},
    {CheckKind::HM1Weak, "HM1Weak", true},
    {CheckKind::HM2Weak, "HM2Weak", true},
    {CheckKind::HM1WeakConservative, "HM1WeakConservative", false},
    {CheckKind::HM2WeakConservative, "HM2WeakConservative", false},
    {CheckKind::ComplementM1, "ComplementM1", false},
    {CheckKind::ComplementHM1, "ComplementHM1", false},
    {CheckKind::ClosureComplete, "ClosureComplete", false},
}};

constexpr std::array<Family, 3> kClosureFamilies = {
    Family::EdgeException, Family::ThreeFiveException,
    Family::FourSevenException};

enum class Relation { Greater, AtLeast, AtMost };

bool holds(Relation rel, const Rational& measured, const Rational& bound) {
  switch (rel) {
    case Relation::Greater: return measured > bound;
    case Relation::AtLeast: return measured >= bound;
    case Relation::AtMost: return measured <= bound;
  }
  return false;
}

// C(n-3, 2) + 3k + 5: the edge-count threshold shared by the n >= k+17 checks.
Integer edge_threshold(const Integer& n, const Integer& k) {
  return (n - 3) * (n - 4) / 2 + 3 * k + 5;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  for (const auto& info : kInfo) {
    if (info.kind == kind) return info.name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (const auto& info : kInfo) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

bool is_advisory(CheckKind kind) {
  for (const auto& info : kInfo) {
    if (info.kind == kind) return info.advisory;
  }
  return false;
}

bool has_threshold(CheckKind kind) {
  return kind != CheckKind::DegreeSequence && kind != CheckKind::ClosureComplete;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Exceptional: return "Exceptional";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "unknown";
}

Rational threshold(CheckKind kind, long n_value, long k_value) {
  const Integer n = n_value;
  const Integer k = k_value;
  const Integer n2 = n * n;
  const Integer n3 = n2 * n;
  const Integer n4 = n3 * n;
  switch (kind) {
    case CheckKind::Dirac:
      return Rational(n + k - 1, 2);
    case CheckKind::EdgeCount:
    case CheckKind::HM2Weak:  // 1/2 (n^2 - 7n + 6k + 22), the same number
      return Rational(edge_threshold(n, k));
    case CheckKind::M1Bound:
      return Rational(n3 - 5 * n2 + (2 * k + 8) * n + k * k - 3 * k - 4);
    case CheckKind::RDDBound:
      return Rational((n - 2) * (n - 1) * (2 * n - 3) + k * (4 * n - 5) + k * k,
                      2);
    case CheckKind::HM1Bound:
      return Rational(2 * n4 - 14 * n3 + 6 * k * n2 + 36 * n2 - 18 * k * n -
                      40 * n + 2 * k * k * k + 14 * k + 16);
    case CheckKind::M2Bound:
      return Rational(n4 - 7 * n3 + 3 * k * n2 + 18 * n2 - 9 * k * n - 20 * n +
                      k * k * k + 7 * k + 8);
    case CheckKind::HM1Weak:
      return Rational(2 * n2 - 14 * n + 12 * k + 44);
    case CheckKind::HM1WeakConservative:
      return Rational(4 * (n - 1) * (n - 1) * edge_threshold(n, k));
    case CheckKind::HM2WeakConservative: {
      const Integer m = (n - 1) * (n - 1);
      return Rational(m * m * edge_threshold(n, k));
    }
    case CheckKind::ComplementM1:
      return Rational((n - k) * (3 * (n - k) - 11));
    case CheckKind::ComplementHM1:
      return Rational((n - k) * (n - k) * (3 * (n - k) - 11));
    case CheckKind::DegreeSequence:
    case CheckKind::ClosureComplete:
      break;
  }
  throw ArgumentError(std::string(check_name(kind)) +
                      " has no closed-form threshold");
}

bool is_applicable(CheckKind kind, long n, long k, long min_degree) {
  const bool delta_ok = min_degree >= k + 1;
  switch (kind) {
    case CheckKind::Dirac:
    case CheckKind::ClosureComplete:
      return 2 <= k && k <= n - 1;
    case CheckKind::DegreeSequence:
      return 2 <= k && k <= n - 3;
    case CheckKind::M1Bound:
    case CheckKind::RDDBound:
      return 2 <= k && k <= n - 4 && delta_ok;
    case CheckKind::HM1Bound:
    case CheckKind::M2Bound:
      return 2 <= k && k <= n - 5 && delta_ok;
    case CheckKind::EdgeCount:
    case CheckKind::HM1Weak:
    case CheckKind::HM2Weak:
    case CheckKind::HM1WeakConservative:
    case CheckKind::HM2WeakConservative:
    case CheckKind::ComplementM1:
    case CheckKind::ComplementHM1:
      return 2 <= k && k <= n - 17 && delta_ok;
  }
  return false;
}

std::optional<long> degree_sequence_obstruction(
    std::span<const std::size_t> sorted_degrees, long k) {
  const long n = static_cast<long>(sorted_degrees.size());
  // 1-based position into the nondecreasing sequence.
  auto d = [&](long position) {
    return static_cast<long>(sorted_degrees[static_cast<std::size_t>(position - 1)]);
  };
  for (long i = k; 2 * i <= n + k - 2; ++i) {
    if (d(i - k + 1) <= i && d(n - i) <= n - i + k - 2) return i;
  }
  return std::nullopt;
}

CheckContext::CheckContext(const Graph& g, std::size_t k)
    : graph_(g), k_(k) {
  if (k < 2 || k + 1 > g.order()) throw ArgumentError("k must lie in 2..n-1");
  if (!is_connected(g)) throw ArgumentError("certification needs a connected graph");
  indices_ = compute_indices(g);
}

const Integer& CheckContext::complement_m1() {
  if (!complement_) complement_ = complement(graph_);
  if (!complement_m1_) complement_m1_ = first_zagreb(*complement_);
  return *complement_m1_;
}

const Integer& CheckContext::complement_hm1() {
  if (!complement_) complement_ = complement(graph_);
  if (!complement_hm1_) complement_hm1_ = first_hyper_zagreb(*complement_);
  return *complement_hm1_;
}

const Graph& CheckContext::closure() {
  if (!closure_) {
    const long l = static_cast<long>(graph_.order() + k_) - 1;
    closure_ = l_closure(graph_, l).result;
  }
  return *closure_;
}

std::optional<Family> CheckContext::exceptional_family(
    std::span<const Family> families) {
  const Graph& h = closure();
  const auto h_degrees = degree_sequence(h);
  for (Family f : families) {
    const FamilySpec spec{f, graph_.order(), k_};
    if (!is_valid(spec)) continue;
    const Graph candidate = build(spec);
    if (degree_sequence(candidate) != h_degrees) continue;
    if (are_isomorphic(h, candidate)) return f;
  }
  return std::nullopt;
}

CheckResult check(CheckKind kind, const Graph& g, std::size_t k) {
  CheckContext context(g, k);
  return check(kind, context);
}

CheckResult check(CheckKind kind, CheckContext& context) {
  const Graph& g = context.graph();
  const long n = static_cast<long>(g.order());
  const long k = static_cast<long>(context.k());
  const long delta = static_cast<long>(g.min_degree());
  const IndexReport& idx = context.indices();

  CheckResult result;
  result.kind = kind;
  result.advisory = is_advisory(kind);
  result.applicable = is_applicable(kind, n, k, delta);

  Relation relation = Relation::AtLeast;
  std::span<const Family> exceptions;
  switch (kind) {
    case CheckKind::Dirac:
      result.measured = Rational(delta);
      break;
    case CheckKind::EdgeCount:
      result.measured = Rational(idx.e);
      exceptions = kClosureFamilies;
      break;
    case CheckKind::M1Bound:
      result.measured = Rational(idx.m1);
      relation = Relation::Greater;
      break;
    case CheckKind::RDDBound:
      result.measured = *idx.rdd;
      relation = Relation::Greater;
      break;
    case CheckKind::HM1Bound:
      result.measured = Rational(idx.hm1);
      break;
    case CheckKind::M2Bound:
      result.measured = Rational(idx.m2);
      break;
    case CheckKind::HM1Weak:
    case CheckKind::HM1WeakConservative:
      result.measured = Rational(idx.hm1);
      exceptions = kClosureFamilies;
      break;
    case CheckKind::HM2Weak:
    case CheckKind::HM2WeakConservative:
      result.measured = Rational(idx.hm2);
      exceptions = kClosureFamilies;
      break;
    case CheckKind::ComplementM1:
      result.measured = Rational(context.complement_m1());
      relation = Relation::AtMost;
      exceptions = kClosureFamilies;
      break;
    case CheckKind::ComplementHM1:
      result.measured = Rational(context.complement_hm1());
      relation = Relation::AtMost;
      // The complement of K_3 v (K_{n-5} + 2K_1) has HM1 well below the
      // bound (see complement_value_audit) although the graph is not
      // 2-leaf-connected, so all three closure families stay excluded here.
      exceptions = kClosureFamilies;
      break;
    case CheckKind::DegreeSequence:
    case CheckKind::ClosureComplete:
      break;
  }
  if (has_threshold(kind)) result.threshold = threshold(kind, n, k);

  if (!result.applicable) {
    result.verdict = Verdict::NotApplicable;
    return result;
  }

  bool satisfied = false;
  if (kind == CheckKind::DegreeSequence) {
    const auto degrees = degree_sequence(g);
    satisfied = !degree_sequence_obstruction(degrees, k).has_value();
  } else if (kind == CheckKind::ClosureComplete) {
    satisfied = context.closure().edge_count() ==
                static_cast<std::size_t>(n * (n - 1) / 2);
  } else {
    satisfied = holds(relation, *result.measured, *result.threshold);
  }

  if (!satisfied) {
    result.verdict = Verdict::Inconclusive;
  } else if (auto family = exceptions.empty()
                               ? std::nullopt
                               : context.exceptional_family(exceptions)) {
    result.verdict = Verdict::Exceptional;
    result.family = family;
  } else {
    result.verdict = Verdict::Certified;
  }
  return result;
}

CertificateReport certify(const Graph& g, std::size_t k) {
  CheckContext context(g, k);
  CertificateReport report;
  report.graph6 = to_graph6(g);
  report.n = g.order();
  report.k = k;
  report.indices = context.indices();
  bool certified = false;
  bool exceptional = false;
  for (CheckKind kind : kAllChecks) {
    CheckResult r = check(kind, context);
    if (r.verdict == Verdict::Certified && !r.advisory) certified = true;
    if (r.verdict == Verdict::Exceptional) exceptional = true;
    report.checks.push_back(std::move(r));
  }
  report.overall = certified     ? Verdict::Certified
                   : exceptional ? Verdict::Exceptional
                                 : Verdict::Inconclusive;
  return report;
}

std::vector<AuditEntry> complement_value_audit(long n_value, long k_value) {
  std::vector<AuditEntry> out;
  const Integer n = n_value;
  const Integer k = k_value;
  auto add = [&](Family family, IndexKind index, std::string formula,
                 Integer printed) {
    const FamilySpec spec{family, static_cast<std::size_t>(n_value),
                          static_cast<std::size_t>(k_value)};
    if (!is_valid(spec)) return;
    const Graph comp = complement(build(spec));
    AuditEntry entry{family, n_value, k_value, index, std::move(formula),
                     std::move(printed), 0, false};
    entry.computed = index == IndexKind::M1 ? first_zagreb(comp)
                                            : first_hyper_zagreb(comp);
    entry.matches = entry.computed == entry.printed;
    out.push_back(std::move(entry));
  };
  add(Family::EdgeException, IndexKind::M1, "2(n-k)(n-k-2)",
      2 * (n - k) * (n - k - 2));
  add(Family::ThreeFiveException, IndexKind::M1, "2(n^2-6n+6)",
      2 * (n * n - 6 * n + 6));
  add(Family::FourSevenException, IndexKind::M1, "3(n^2-7n+4)",
      3 * (n * n - 7 * n + 4));
  add(Family::ThreeFiveException, IndexKind::HM1, "4(n-4)^2(2n-9)",
      4 * (n - 4) * (n - 4) * (2 * n - 9));
  add(Family::FourSevenException, IndexKind::HM1, "4(n-5)^2(3n-18)",
      4 * (n - 5) * (n - 5) * (3 * n - 18));
  return out;
}

}  // namespace leafcert
