#pragma once

// Deterministic countable enumerations (dyadics, reduced rationals, rational
// pairs) and a portable uniform-double helper so seeded output is identical
// across standard libraries.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setconv/core.hpp"

namespace setconv {

/// Dyadic rationals in [-range, range], level by level: integers first, then
/// odd multiples of 2^-j for j = 1..maxLevel, ascending within each level.
/// Level j has spacing 2^-j once merged with all earlier levels.
inline std::vector<double> dyadicEnumeration(int maxLevel, int range) {
  if (maxLevel < 0 || range < 1) throw std::invalid_argument("dyadicEnumeration: bad parameters");
  std::vector<double> out;
  for (int k = -range; k <= range; ++k) out.push_back(static_cast<double>(k));
  for (int j = 1; j <= maxLevel; ++j) {
    const double step = std::ldexp(1.0, -j);
    const long long top = static_cast<long long>(range) << j;
    for (long long k = -top + 1; k < top; k += 2) out.push_back(static_cast<double>(k) * step);
  }
  return out;
}

/// Reduced rationals p/q ordered by height |p| + q: 0, -1, 1, -2, 2, -1/2,
/// 1/2, ...  Within a height, denominators ascend and the negative numerator
/// comes first.
inline std::vector<double> rationalEnumeration(std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(0.0);
  for (long long h = 2; out.size() < count; ++h) {
    for (long long q = 1; q < h && out.size() < count; ++q) {
      const long long p = h - q;
      if (std::gcd(p, q) != 1) continue;
      out.push_back(static_cast<double>(-p) / static_cast<double>(q));
      if (out.size() < count) out.push_back(static_cast<double>(p) / static_cast<double>(q));
    }
  }
  return out;
}

/// Pairs of rationals by Cantor diagonal over the 1-D enumeration, as plane
/// points: (r0,r0), (r0,r1), (r1,r0), (r0,r2), (r1,r1), (r2,r0), ...
inline std::vector<Point> rationalPairEnumeration(std::size_t count) {
  std::vector<Point> out;
  out.reserve(count);
  // Diagonal s needs 1-D entries up to index s; s grows like sqrt(2*count).
  std::size_t need = 2;
  while (need * (need + 1) / 2 < count) ++need;
  const std::vector<double> r = rationalEnumeration(need + 1);
  for (std::size_t s = 0; out.size() < count; ++s)
    for (std::size_t i = 0; i <= s && out.size() < count; ++i)
      out.push_back(pointVec(r[i], r[s - i]));
  return out;
}

// --- portable randomness ----------------------------------------------------

/// Uniform double in [0, 1) from the generator's raw bits; identical output
/// for a given seed on every platform, unlike uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniformIn(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline int uniformInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace setconv
