#pragma once

#include <string>

namespace hardy {

/// Shortest decimal that parses back to exactly `x`. Used in description strings.
std::string format_shortest(double x);

/// `x` with 17 significant digits ("%.17g"). Lossless for doubles; used in CSV.
std::string format_exact(double x);

/// Parses a full decimal token. Returns false on trailing garbage or empty input.
bool parse_real(const std::string& token, double& out);

}  // namespace hardy
