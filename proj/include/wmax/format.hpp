#pragma once

#include <string>

namespace wmax {

// 12 significant digits, shortest round-trip within that precision,
// '.' decimal separator, no locale dependence. Shared by the CSV writer and
// the CLI so printed numbers are comparable across outputs.
std::string fmt12(double x);

}  // namespace wmax
