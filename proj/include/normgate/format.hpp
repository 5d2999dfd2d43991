#pragma once

#include <string>
#include <string_view>

#include "normgate/numkit.hpp"

namespace normgate {

/// Shortest round-trip-safe form with 17 significant digits.
std::string format_double(double x);

/// "re" for real values, otherwise "re+imi" / "re-imi".
std::string format_complex(Complex z);

/// Parses "re", "re+imi", "re-imi", "imi". Throws InvalidInput.
Complex parse_complex(std::string_view s);

double parse_real(std::string_view s);

}  // namespace normgate
