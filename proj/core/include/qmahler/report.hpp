#pragma once

#include <string>
#include <vector>

#include "qmahler/runner.hpp"

namespace qm::verify {

enum class Format { table, json, csv };

// Throws std::invalid_argument for anything but table, json, csv.
Format parse_format(const std::string& name);

// Decimal text with 15 significant digits.
std::string format_number(double x);

std::string render_report(const std::vector<CheckResult>& results, Format format);

}  // namespace qm::verify
