#pragma once

#include <string>

namespace qcorr {

// All numeric output (JSON and CSV) goes through this: %.12g, so reruns with
// identical inputs produce identical bytes.
std::string format_number(double x);

} // namespace qcorr
