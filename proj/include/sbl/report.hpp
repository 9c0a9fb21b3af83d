#pragma once

#include <json.hpp>

#include <string>

#include "sbl/evaluator.hpp"
#include "sbl/feasibility.hpp"

namespace sbl {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_format(const std::string& s);

nlohmann::ordered_json feasibility_to_json(const FeasibilityReport& rep);
std::string feasibility_to_text(const FeasibilityReport& rep);

nlohmann::ordered_json form_result_to_json(const FormResult& r);

/// CSV contract: header "T,value,ratio".
std::string sweep_to_csv(const SweepResult& r);
nlohmann::ordered_json sweep_to_json(const SweepResult& r);

/// CSV contract: header "parameter,value,std_error,ratio".
std::string blowup_to_csv(const BlowupResult& r);
nlohmann::ordered_json blowup_to_json(const BlowupResult& r);

/// 17 significant digits, locale-independent.
std::string format_double(double v);

} // namespace sbl
