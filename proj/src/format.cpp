#include "insa/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace insa {

namespace {

template <typename... Args>
std::string to_chars_string(double value, Args... args) {
  std::array<char, 128> buf{};
  if (value == 0.0) value = 0.0;  // no "-0"
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, args...);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace

std::string format_shortest(double value) { return to_chars_string(value); }

std::string format_fixed(double value, int decimals) {
  return to_chars_string(value, std::chars_format::fixed, decimals);
}

std::string format_significant(double value, int digits) {
  return to_chars_string(value, std::chars_format::general, digits);
}

}  // namespace insa
