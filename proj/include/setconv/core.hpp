#pragma once

// Ground spaces and the metrics evaluated on them.  Points are immutable
// values; every metric rule is a pure function of two points.

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace setconv {

// --- points -----------------------------------------------------------------

struct RealScalar {
  double value{0.0};
  friend bool operator==(const RealScalar&, const RealScalar&) = default;
};

struct RealVector {
  std::vector<double> coords;
  friend bool operator==(const RealVector&, const RealVector&) = default;
};

/// Sequence with finitely many nonzero entries; zero entries are never stored.
struct FiniteSupportSeq {
  std::map<std::size_t, double> entries;
  friend bool operator==(const FiniteSupportSeq&, const FiniteSupportSeq&) = default;
};

using Point = std::variant<RealScalar, RealVector, FiniteSupportSeq>;

enum class PointKind { Scalar, Vector, Seq };

inline PointKind kindOf(const Point& p) {
  switch (p.index()) {
    case 0: return PointKind::Scalar;
    case 1: return PointKind::Vector;
    default: return PointKind::Seq;
  }
}

inline const char* kindName(PointKind k) {
  switch (k) {
    case PointKind::Scalar: return "scalar";
    case PointKind::Vector: return "vector";
    default: return "seq";
  }
}

inline bool isFiniteReal(double v) { return std::isfinite(v); }

inline Point pointScalar(double v) {
  if (!isFiniteReal(v)) throw std::invalid_argument("pointScalar: non-finite coordinate");
  return RealScalar{v};
}

inline Point pointVec(double x, double y) {
  if (!isFiniteReal(x) || !isFiniteReal(y))
    throw std::invalid_argument("pointVec: non-finite coordinate");
  return RealVector{{x, y}};
}

inline Point pointVector(std::vector<double> coords) {
  if (coords.empty()) throw std::invalid_argument("pointVector: dimension must be >= 1");
  for (double c : coords)
    if (!isFiniteReal(c)) throw std::invalid_argument("pointVector: non-finite coordinate");
  return RealVector{std::move(coords)};
}

/// Builds a finite-support sequence; zero entries are dropped so equality is
/// well defined on the stored representation.
inline Point pointSeq(const std::vector<std::pair<std::size_t, double>>& entries) {
  FiniteSupportSeq s;
  for (const auto& [idx, v] : entries) {
    if (!isFiniteReal(v)) throw std::invalid_argument("pointSeq: non-finite entry");
    if (v != 0.0) s.entries[idx] = v;
  }
  return s;
}

inline double scalarOf(const Point& p) {
  if (const auto* s = std::get_if<RealScalar>(&p)) return s->value;
  throw std::invalid_argument("expected a scalar point, got " + std::string(kindName(kindOf(p))));
}

inline const std::vector<double>& coordsOf(const Point& p) {
  if (const auto* v = std::get_if<RealVector>(&p)) return v->coords;
  throw std::invalid_argument("expected a vector point, got " + std::string(kindName(kindOf(p))));
}

// --- ground spaces ----------------------------------------------------------

enum class MetricRule { EuclideanNorm, UsualLine, ZeroOne, FrenchMetro, SupSeq };

inline const char* ruleName(MetricRule r) {
  switch (r) {
    case MetricRule::EuclideanNorm: return "euclidean";
    case MetricRule::UsualLine: return "usual-line";
    case MetricRule::ZeroOne: return "zero-one";
    case MetricRule::FrenchMetro: return "french-metro";
    default: return "sup-seq";
  }
}

struct GroundSpace {
  PointKind kind{PointKind::Scalar};
  MetricRule rule{MetricRule::UsualLine};
};

inline GroundSpace usualLine() { return {PointKind::Scalar, MetricRule::UsualLine}; }
inline GroundSpace euclideanPlane() { return {PointKind::Vector, MetricRule::EuclideanNorm}; }
inline GroundSpace frenchMetroPlane() { return {PointKind::Vector, MetricRule::FrenchMetro}; }
inline GroundSpace supSeqSpace() { return {PointKind::Seq, MetricRule::SupSeq}; }
inline GroundSpace zeroOneSpace(PointKind kind = PointKind::Scalar) {
  return {kind, MetricRule::ZeroOne};
}

namespace detail {

inline void requireKind(const GroundSpace& space, const Point& p, const char* who) {
  if (kindOf(p) != space.kind)
    throw std::invalid_argument(std::string(who) + ": point kind " + kindName(kindOf(p)) +
                                " does not match space kind " + kindName(space.kind));
}

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("euclidean: dimension mismatch " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

inline double norm2(const std::vector<double>& a) {
  double sum = 0.0;
  for (double c : a) sum += c * c;
  return std::sqrt(sum);
}

/// Exact collinearity-through-origin test for the plane.  Zero cross product
/// means one point is a scalar multiple of the other (the origin is collinear
/// with everything); the test is exact by design, so callers that want the
/// radial branch must construct exactly collinear coordinates.
inline bool collinear2(const std::vector<double>& a, const std::vector<double>& b) {
  return a[0] * b[1] - a[1] * b[0] == 0.0;
}

inline double frenchMetro(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != 2 || b.size() != 2)
    throw std::invalid_argument("french-metro: points must have dimension 2");
  if (collinear2(a, b)) return euclidean(a, b);
  return norm2(a) + norm2(b);
}

inline double supSeq(const FiniteSupportSeq& a, const FiniteSupportSeq& b) {
  double sup = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    double diff = 0.0;
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      diff = std::abs(ia->second);
      ++ia;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      diff = std::abs(ib->second);
      ++ib;
    } else {
      diff = std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
    if (diff > sup) sup = diff;
  }
  return sup;
}

}  // namespace detail

/// d(x, y) under the space's metric rule.  Throws on point-kind or dimension
/// mismatches; never returns NaN for valid inputs.
inline double evalMetric(const GroundSpace& space, const Point& x, const Point& y) {
  detail::requireKind(space, x, "evalMetric");
  detail::requireKind(space, y, "evalMetric");
  switch (space.rule) {
    case MetricRule::UsualLine:
      return std::abs(scalarOf(x) - scalarOf(y));
    case MetricRule::EuclideanNorm:
      return detail::euclidean(coordsOf(x), coordsOf(y));
    case MetricRule::ZeroOne:
      return x == y ? 0.0 : 1.0;
    case MetricRule::FrenchMetro:
      return detail::frenchMetro(coordsOf(x), coordsOf(y));
    case MetricRule::SupSeq:
      return detail::supSeq(std::get<FiniteSupportSeq>(x), std::get<FiniteSupportSeq>(y));
  }
  throw std::logic_error("evalMetric: unhandled metric rule");
}

}  // namespace setconv
