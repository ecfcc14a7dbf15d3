#pragma once

#include <string>
#include <string_view>

namespace winding {

// Shortest decimal form that round-trips to the same double. All file and
// stream output goes through this so identical runs emit identical bytes.
std::string format_double(double v);

// Strict double parse of an entire field ("1e-3", "-0.5", "inf").
double parse_double(std::string_view field, const std::string& context);

// Strict integer parse of an entire field.
long long parse_long(std::string_view field, const std::string& context);

}  // namespace winding
