#include "core/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "core/error.hpp"

namespace winding {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) fail(errc::internal, "number formatting failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view field, const std::string& context) {
  // from_chars does not accept "inf"/"nan" spellings everywhere; strtod does.
  std::string tmp(field);
  if (tmp.empty()) fail(errc::parse, context + ": empty numeric field");
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size()) fail(errc::parse, context + ": malformed number '" + tmp + "'");
  return v;
}

long long parse_long(std::string_view field, const std::string& context) {
  long long v = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    fail(errc::parse, context + ": malformed integer '" + std::string(field) + "'");
  return v;
}

}  // namespace winding
