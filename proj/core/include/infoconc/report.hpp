#pragma once

#include <string>

#include <infoconc/montecarlo.hpp>

namespace infoconc {

// Versioned JSON document (schema version 1).  Key order and number
// rendering are fixed, so identical reports serialize to identical bytes;
// numbers are emitted unrounded (shortest round-trip form).
std::string report_to_json(const SampleReport& report);
SampleReport report_from_json(const std::string& text);

// Grid values as CSV: kind,param,side,value,se
std::string report_csv(const SampleReport& report);

std::string verdicts_to_text(const VerdictTable& table);
std::string verdicts_to_json(const VerdictTable& table);

}  // namespace infoconc
