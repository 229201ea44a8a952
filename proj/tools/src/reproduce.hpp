#pragma once

#include <string>
#include <vector>

namespace hardy::cli {

struct ReproduceItem {
  std::string name;
  bool passed = false;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
};

/// Names accepted by --only, in run order.
const std::vector<std::string>& reproduce_item_names();

/// Runs every reproduction item, or only `only` when it is non-empty.
/// `n_scale` multiplies the sequence lengths and sample counts of the heavy
/// items; 1 gives the full-size run. Throws ParameterError for an unknown
/// item name or a scale outside (0, 1].
std::vector<ReproduceItem> reproduce_all(const std::string& only, double n_scale);

}  // namespace hardy::cli
