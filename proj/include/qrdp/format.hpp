#pragma once

#include <string>

namespace qrdp {

// Full-precision rendering for CSV cells (17 significant digits); infinities
// come out as the literal token "inf" so downstream plotting stays sane.
std::string format_full(double v);

// Console rendering with 6 decimal places.
std::string format_fixed6(double v);

}  // namespace qrdp
