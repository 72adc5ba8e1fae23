#ifndef HSCS_CORE_MATH_HPP
#define HSCS_CORE_MATH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hscs {

inline constexpr double kDivEps = 1e-10;

// Min-max rescale to [0,1] in place. A degenerate (constant) range maps to
// the constant 0.5 so downstream top-K selection stays well-defined.
inline void normalize_min_max(std::vector<double>& values) {
  if (values.empty()) return;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi - lo < 1e-12) {
    std::fill(values.begin(), values.end(), 0.5);
    return;
  }
  for (double& v : values) v = (v - lo) / (hi - lo);
}

// ceil(ratio * count) with a guard against values like 0.8*100 landing an
// ulp above the exact integer.
inline std::size_t ceil_fraction(double ratio, std::size_t count) {
  const double scaled = ratio * static_cast<double>(count);
  return static_cast<std::size_t>(std::ceil(scaled - 1e-9));
}

// Decorrelates per-stage RNG streams drawn from one pipeline seed
// (splitmix64 step).
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stage) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stage + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hscs

#endif
