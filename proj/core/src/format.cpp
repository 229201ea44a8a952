#include "hardy/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cctype>
#include <cstdlib>

namespace hardy {

std::string format_shortest(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 32> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), result.ptr);
}

std::string format_exact(double x) {
  std::array<char, 40> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

bool parse_real(const std::string& token, double& out) {
  if (token.empty() || std::isspace(static_cast<unsigned char>(token.front()))) return false;
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size()) return false;
  out = value;
  return true;
}

}  // namespace hardy
