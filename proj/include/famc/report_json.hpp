#pragma once

#include <string>

#include "famc/constants.hpp"

namespace famc {

// "1^9 3^2": degree^multiplicity, ascending degree
std::string spectrum_str(const DegreeSpectrum& spec);

// RFC-4180 quoting: wraps in double quotes when the value contains a comma,
// quote or newline (group names like Hr(2,1) do).
std::string csv_field(const std::string& value);

// 6-significant-digit decimal rendering for human-facing output
std::string approx6(const Rational& r);

std::string report_to_json(const AmenabilityReport& r, int indent = 2);
std::string report_csv_header();
std::string report_csv_row(const AmenabilityReport& r);
std::string report_to_text(const AmenabilityReport& r);

}  // namespace famc
