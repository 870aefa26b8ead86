#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "trirep/verify.hpp"

namespace trirep::verify {

/// {"suite", "range": [lo, hi], "status", "counterexamples": [{"input",
/// "oracle", "formula"}], "findings": [{"id", "detail"}], "cases", "elapsed_ms"}
std::string to_json(const Report& report);

/// Rows of kind,suite,input,oracle,formula,detail: one summary row, one row
/// per counterexample and finding, and a closing elapsed_ms row.
std::string to_csv(const Report& report);

/// label,argument,oracle,formula for every recorded case.
void write_cases_csv(const Report& report, std::ostream& out);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace trirep::verify
