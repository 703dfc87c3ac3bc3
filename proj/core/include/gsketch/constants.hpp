// constants.hpp - tuning constants hidden by the asymptotic statements.
//
// Defaults can be overridden by environment variables GSKETCH_C_DETECT,
// GSKETCH_C_LARGE, GSKETCH_C_SAMPLE, GSKETCH_C_ERR, GSKETCH_C_CHOKE and
// GSKETCH_C_HEAVY, and then by an explicit "key=value,..." list using the
// lowercase names (c_detect, ...).

#pragma once

#include <string>
#include <string_view>

namespace gsketch {

struct Constants {
  double c_detect = 1.0;
  double c_large = 1.0;
  double c_sample = 2.0;
  double c_err = 8.0;
  double c_choke = 1.0;
  double c_heavy = 1.0;

  /// Defaults overlaid with any GSKETCH_C_* variables. A malformed or
  /// nonpositive value throws std::invalid_argument naming the variable.
  static Constants from_env();

  /// Applies "c_err=4,c_sample=3". Unknown keys or bad values throw
  /// std::invalid_argument.
  void apply_overrides(std::string_view spec);

  /// "c_detect=1,c_large=1,..." in a fixed order.
  std::string describe() const;
};

}  // namespace gsketch
