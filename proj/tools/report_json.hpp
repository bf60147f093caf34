#pragma once

#include <string>

#include <json.hpp>

#include "leafcert/certifier.hpp"
#include "leafcert/closure.hpp"
#include "leafcert/indices.hpp"
#include "leafcert/oracle.hpp"
#include "leafcert/survey.hpp"

namespace leafcert {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits, decimal strings
// otherwise.
Json to_json(const Integer& value);
Json to_json(const IndexReport& report);
Json to_json(const ClosureTrace& trace);
Json to_json(const CheckResult& result);
Json to_json(const CertificateReport& report);
Json to_json(const AuditEntry& entry);
Json oracle_json(const Graph& g, std::size_t k, const LeafDecision& decision,
                 long elapsed_ms);
Json to_json(const SurveyReport& report, const SurveyOptions& options,
             bool reproducible);

std::string survey_csv(const SurveyReport& report);

}  // namespace leafcert
