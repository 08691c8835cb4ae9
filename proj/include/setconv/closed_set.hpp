#pragma once

// Closed subsets of a ground space, with exact membership tests and exact
// distance evaluation for every supported (metric rule, set shape) pair.
// Unsupported pairs throw instead of approximating.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "setconv/core.hpp"

namespace setconv {

struct ClosedSet;

/// Explicit finite set; construction drops exact duplicates, keeping first
/// occurrences so witness order stays the declared order.
struct FinitePoints {
  std::vector<Point> points;
};

/// Closed interval of the real line; lo/hi may be -inf/+inf for rays.
struct Interval {
  double lo{0.0};
  double hi{0.0};
};

/// {(t, slope*t) : t real} in the plane.
struct LineThroughOrigin {
  double slope{0.0};
};

/// {(k, 0) : k = 1, 2, 3, ...} in the plane.
struct AxisLattice {};

struct WholeSpace {};

struct UnionOf {
  std::vector<ClosedSet> parts;
};

using ClosedSetRepr =
    std::variant<FinitePoints, Interval, LineThroughOrigin, AxisLattice, WholeSpace, UnionOf>;

struct ClosedSet {
  ClosedSetRepr repr;
};

inline ClosedSet finitePoints(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("finitePoints: set must be nonempty");
  std::vector<Point> unique;
  unique.reserve(pts.size());
  for (auto& p : pts)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  return {FinitePoints{std::move(unique)}};
}

inline ClosedSet singleton(Point p) { return {FinitePoints{{std::move(p)}}}; }

inline ClosedSet interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw std::invalid_argument("interval: need lo <= hi");
  return {Interval{lo, hi}};
}

inline ClosedSet lineThroughOrigin(double slope) {
  if (!std::isfinite(slope)) throw std::invalid_argument("lineThroughOrigin: slope must be finite");
  return {LineThroughOrigin{slope}};
}

inline ClosedSet axisLattice() { return {AxisLattice{}}; }
inline ClosedSet wholeSpace() { return {WholeSpace{}}; }

inline ClosedSet unionOf(std::vector<ClosedSet> parts) {
  if (parts.empty()) throw std::invalid_argument("unionOf: union must be nonempty");
  return {UnionOf{std::move(parts)}};
}

// --- membership -------------------------------------------------------------

namespace detail {

inline bool isNaturalScalar(double v) { return v >= 1.0 && v == std::floor(v); }

}  // namespace detail

/// Exact membership; metric-independent but kind-checked against the space.
inline bool memberOf(const GroundSpace& space, const Point& x, const ClosedSet& A) {
  detail::requireKind(space, x, "memberOf");
  return std::visit(
      [&](const auto& repr) -> bool {
        using T = std::decay_t<decltype(repr)>;
        if constexpr (std::is_same_v<T, FinitePoints>) {
          return std::find(repr.points.begin(), repr.points.end(), x) != repr.points.end();
        } else if constexpr (std::is_same_v<T, Interval>) {
          const double v = scalarOf(x);
          return repr.lo <= v && v <= repr.hi;
        } else if constexpr (std::is_same_v<T, LineThroughOrigin>) {
          const auto& c = coordsOf(x);
          if (c.size() != 2) throw std::invalid_argument("memberOf: line needs dimension 2");
          return c[1] == repr.slope * c[0];
        } else if constexpr (std::is_same_v<T, AxisLattice>) {
          const auto& c = coordsOf(x);
          if (c.size() != 2) throw std::invalid_argument("memberOf: lattice needs dimension 2");
          return c[1] == 0.0 && detail::isNaturalScalar(c[0]);
        } else if constexpr (std::is_same_v<T, WholeSpace>) {
          return true;
        } else {
          for (const auto& part : repr.parts)
            if (memberOf(space, x, part)) return true;
          return false;
        }
      },
      A.repr);
}

// --- distance functional ----------------------------------------------------

namespace detail {

[[noreturn]] inline void unsupportedPair(MetricRule rule, const char* shape) {
  throw std::invalid_argument(std::string("distanceToSet: no exact rule for shape '") + shape +
                              "' under metric '" + ruleName(rule) + "'");
}

inline double distScalarInterval(double v, const Interval& iv) {
  if (v < iv.lo) return iv.lo - v;
  if (v > iv.hi) return v - iv.hi;
  return 0.0;
}

/// Euclidean distance from a plane point to the line y = slope*x.
inline double distPointLine(const std::vector<double>& c, double slope) {
  return std::abs(c[1] - slope * c[0]) / std::sqrt(1.0 + slope * slope);
}

/// Euclidean distance from a plane point to {(k,0) : k >= 1}.
inline double distPointLattice(const std::vector<double>& c) {
  const double k = std::max(1.0, std::round(c[0]));
  return std::hypot(c[0] - k, c[1]);
}

}  // namespace detail

/// d(x, A) = inf over a in A of d(x, a); exact for every supported pair.
inline double distanceToSet(const GroundSpace& space, const Point& x, const ClosedSet& A) {
  detail::requireKind(space, x, "distanceToSet");

  // The 0-1 metric reduces every distance to an exact membership question.
  if (space.rule == MetricRule::ZeroOne) return memberOf(space, x, A) ? 0.0 : 1.0;

  return std::visit(
      [&](const auto& repr) -> double {
        using T = std::decay_t<decltype(repr)>;
        if constexpr (std::is_same_v<T, FinitePoints>) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& p : repr.points) best = std::min(best, evalMetric(space, x, p));
          return best;
        } else if constexpr (std::is_same_v<T, Interval>) {
          if (space.rule != MetricRule::UsualLine) detail::unsupportedPair(space.rule, "interval");
          return detail::distScalarInterval(scalarOf(x), repr);
        } else if constexpr (std::is_same_v<T, LineThroughOrigin>) {
          const auto& c = coordsOf(x);
          if (c.size() != 2)
            throw std::invalid_argument("distanceToSet: line needs dimension 2");
          if (space.rule == MetricRule::EuclideanNorm) return detail::distPointLine(c, repr.slope);
          if (space.rule == MetricRule::FrenchMetro) {
            // Radial metric: a point off the line's rays reaches the line only
            // through the origin, which the closed line contains.
            const std::vector<double> dir{1.0, repr.slope};
            return detail::collinear2(c, dir) ? 0.0 : detail::norm2(c);
          }
          detail::unsupportedPair(space.rule, "line-through-origin");
        } else if constexpr (std::is_same_v<T, AxisLattice>) {
          const auto& c = coordsOf(x);
          if (c.size() != 2)
            throw std::invalid_argument("distanceToSet: lattice needs dimension 2");
          if (space.rule == MetricRule::EuclideanNorm) return detail::distPointLattice(c);
          if (space.rule == MetricRule::FrenchMetro) {
            // Lattice points sit on the positive x-ray; other directions pay
            // both radii, the nearest lattice point having radius 1.
            if (c[1] == 0.0) {
              const double k = std::max(1.0, std::round(c[0]));
              return std::abs(c[0] - k);
            }
            return detail::norm2(c) + 1.0;
          }
          detail::unsupportedPair(space.rule, "axis-lattice");
        } else if constexpr (std::is_same_v<T, WholeSpace>) {
          return 0.0;
        } else {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& part : repr.parts)
            best = std::min(best, distanceToSet(space, x, part));
          return best;
        }
      },
      A.repr);
}

}  // namespace setconv
