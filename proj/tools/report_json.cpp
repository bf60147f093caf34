#include "report_json.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "leafcert/graph6.hpp"

namespace leafcert {
namespace {

Json edge_list(std::span<const Edge> edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

Json optional_number(const std::optional<Rational>& value) {
  if (!value) return nullptr;
  return to_compact_string(*value);
}

}  // namespace

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Json to_json(const IndexReport& r) {
  Json out;
  out["n"] = r.n;
  out["e"] = r.e;
  out["m1"] = to_json(r.m1);
  out["m2"] = to_json(r.m2);
  out["hm1"] = to_json(r.hm1);
  out["hm2"] = to_json(r.hm2);
  out["rdd"] = r.rdd ? Json(to_fraction_string(*r.rdd)) : Json(nullptr);
  if (r.dhat) {
    Json dhat = Json::array();
    for (const auto& d : *r.dhat) dhat.push_back(to_fraction_string(d));
    out["dhat"] = std::move(dhat);
  } else {
    out["dhat"] = nullptr;
  }
  return out;
}

Json to_json(const ClosureTrace& trace) {
  Json out;
  out["l"] = trace.l;
  out["added"] = edge_list(trace.added);
  out["result"] = to_graph6(trace.result);
  return out;
}

Json to_json(const CheckResult& c) {
  Json out;
  out["kind"] = check_name(c.kind);
  out["applicable"] = c.applicable;
  out["threshold"] = optional_number(c.threshold);
  out["measured"] = optional_number(c.measured);
  out["verdict"] = verdict_name(c.verdict);
  out["advisory"] = c.advisory;
  if (c.family) out["family"] = family_name(*c.family);
  return out;
}

Json to_json(const CertificateReport& r) {
  Json out;
  out["graph"] = r.graph6;
  out["n"] = r.n;
  out["k"] = r.k;
  out["indices"] = to_json(r.indices);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  out["overall"] = verdict_name(r.overall);
  return out;
}

Json to_json(const AuditEntry& a) {
  Json out;
  out["family"] = family_name(a.family);
  out["n"] = a.n;
  out["k"] = a.k;
  out["index"] = std::string("complement-") + std::string(index_name(a.index));
  out["printed_formula"] = a.printed_formula;
  out["printed"] = to_json(a.printed);
  out["computed"] = to_json(a.computed);
  out["matches"] = a.matches;
  return out;
}

Json oracle_json(const Graph& g, std::size_t k, const LeafDecision& d,
                 long elapsed_ms) {
  Json out;
  out["graph"] = to_graph6(g);
  out["k"] = k;
  out["value"] = d.value;
  if (d.counterexample) out["counterexample"] = *d.counterexample;
  if (!d.witnesses.empty()) {
    Json witnesses = Json::array();
    for (const auto& w : d.witnesses) {
      witnesses.push_back({{"leaves", w.leaves}, {"tree", edge_list(w.tree)}});
    }
    out["witnesses"] = std::move(witnesses);
  }
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

Json to_json(const SurveyReport& r, const SurveyOptions& options,
             bool reproducible) {
  Json out;
  out["corpus_size"] = r.corpus_size;
  out["disconnected"] = r.disconnected;
  out["k_min"] = options.k_min;
  out["k_max"] = options.k_max;
  out["oracle_limit"] = options.oracle_limit;
  Json per_k = Json::array();
  for (const auto& s : r.per_k) {
    std::size_t violations = 0;
    for (const auto& v : r.violations) violations += v.k == s.k;
    per_k.push_back({{"k", s.k},
                     {"evaluated", s.evaluated},
                     {"skipped", s.skipped},
                     {"certified", s.certified},
                     {"inconclusive", s.inconclusive},
                     {"exceptional", s.exceptional},
                     {"oracle_checked", s.oracle_checked},
                     {"oracle_true", s.oracle_true},
                     {"violations", violations}});
  }
  out["per_k"] = std::move(per_k);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json kinds = Json::array();
    for (auto kind : v.certified_by) kinds.push_back(check_name(kind));
    violations.push_back({{"line", v.line},
                          {"graph", v.graph6},
                          {"k", v.k},
                          {"certified_by", std::move(kinds)}});
  }
  out["violations"] = std::move(violations);
  Json firings = Json::object();
  for (CheckKind kind : kAllChecks) {
    auto it = r.check_firings.find(kind);
    firings[std::string(check_name(kind))] =
        it == r.check_firings.end() ? 0 : it->second;
  }
  out["check_firings"] = std::move(firings);
  Json failures = Json::array();
  for (const auto& f : r.property_failures) {
    failures.push_back({{"line", f.line}, {"graph", f.graph6}, {"property", f.property}});
  }
  out["property_failures"] = std::move(failures);
  Json audit = Json::array();
  for (const auto& a : r.audit) audit.push_back(to_json(a));
  out["audit"] = std::move(audit);
  if (!reproducible) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

std::string survey_csv(const SurveyReport& r) {
  std::ostringstream out;
  out << "k,evaluated,skipped,certified,inconclusive,exceptional,"
         "oracle_checked,oracle_true,violations\n";
  for (const auto& s : r.per_k) {
    std::size_t violations = 0;
    for (const auto& v : r.violations) violations += v.k == s.k;
    out << s.k << ',' << s.evaluated << ',' << s.skipped << ',' << s.certified
        << ',' << s.inconclusive << ',' << s.exceptional << ','
        << s.oracle_checked << ',' << s.oracle_true << ',' << violations << '\n';
  }
  return out.str();
}

}  // namespace leafcert
