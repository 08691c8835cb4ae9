#pragma once

// Probe sets: finite samples standing in for (possibly infinite) sets, plus
// optional exact-sup oracles that certify suprema over the full set they
// stand for.  Sampled values are honest lower bounds; oracle or exhaustive
// values are exact.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "setconv/closed_set.hpp"
#include "setconv/core.hpp"
#include "setconv/verdict.hpp"

namespace setconv {

struct NoOracle {};

/// The sample stands for the lattice {(k, k*slope) : k = 1, 2, ...}; suprema
/// against line-through-origin or whole-space targets use the point-to-line
/// closed form over every lattice index.
struct PointToLine {
  double slope{0.0};
};

/// The sample stands for the interval [lo, hi]; under the 0-1 metric,
/// deviation suprema are decided exactly by whether the symmetric difference
/// of the targets meets the interval.
struct DiscreteIndicator {
  double lo{0.0};
  double hi{0.0};
};

using SupOracle = std::variant<NoOracle, PointToLine, DiscreteIndicator>;

struct ProbeSet {
  std::string label;
  std::vector<Point> sample;
  SupOracle oracle{NoOracle{}};
  bool exhaustive{false};           // sample IS the whole set it stands for
  std::vector<double> sortedScalars;  // cache for nearest-sample queries
};

namespace detail {

inline void finalizeProbe(ProbeSet& p) {
  if (p.sample.empty()) throw std::invalid_argument("probe '" + p.label + "': sample is empty");
  const PointKind kind = kindOf(p.sample.front());
  for (const auto& pt : p.sample)
    if (kindOf(pt) != kind)
      throw std::invalid_argument("probe '" + p.label + "': mixed point kinds in sample");
  if (kind == PointKind::Scalar) {
    p.sortedScalars.reserve(p.sample.size());
    for (const auto& pt : p.sample) p.sortedScalars.push_back(scalarOf(pt));
    std::sort(p.sortedScalars.begin(), p.sortedScalars.end());
  }
}

}  // namespace detail

inline ProbeSet makeProbe(std::string label, std::vector<Point> sample,
                          SupOracle oracle = NoOracle{}, bool exhaustive = false) {
  ProbeSet p;
  p.label = std::move(label);
  p.sample = std::move(sample);
  p.oracle = oracle;
  p.exhaustive = exhaustive;
  detail::finalizeProbe(p);
  return p;
}

inline ProbeSet scalarProbe(std::string label, const std::vector<double>& values,
                            SupOracle oracle = NoOracle{}, bool exhaustive = false) {
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (double v : values) pts.push_back(pointScalar(v));
  return makeProbe(std::move(label), std::move(pts), oracle, exhaustive);
}

/// Evenly spaced scalar sample covering [lo, hi] with the exact endpoints.
inline ProbeSet gridProbe(std::string label, double lo, double hi, double step,
                          SupOracle oracle = NoOracle{}) {
  if (!(step > 0.0)) throw std::invalid_argument("gridProbe: step must be positive");
  if (lo > hi) throw std::invalid_argument("gridProbe: need lo <= hi");
  const long long count = std::llround((hi - lo) / step);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count) + 1);
  for (long long i = 0; i < count; ++i) values.push_back(lo + static_cast<double>(i) * step);
  values.push_back(hi);
  return scalarProbe(std::move(label), values, oracle);
}

// --- distance from a point to a probe ---------------------------------------

namespace detail {

inline double distToLatticeOnLine(const GroundSpace& space, const Point& x, double slope) {
  const auto& c = coordsOf(x);
  if (c.size() != 2) throw std::invalid_argument("lattice probe needs dimension 2");
  if (space.rule != MetricRule::EuclideanNorm)
    throw std::invalid_argument("lattice probe distance needs the euclidean metric");
  const double len2 = 1.0 + slope * slope;
  const double t = (c[0] + slope * c[1]) / len2;
  const double k = std::max(1.0, std::round(t));
  return std::hypot(c[0] - k, c[1] - k * slope);
}

inline double distToSortedScalars(const std::vector<double>& sorted, double v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  double best = std::numeric_limits<double>::infinity();
  if (it != sorted.end()) best = std::min(best, *it - v);
  if (it != sorted.begin()) best = std::min(best, v - *(it - 1));
  return best;
}

}  // namespace detail

/// d(x, S) where S is the set the probe stands for: exact via the oracle tag
/// when one is declared, otherwise the distance to the finite sample (an
/// upper bound on the true distance, exact when the probe is exhaustive).
inline double distanceToProbe(const GroundSpace& space, const Point& x, const ProbeSet& P) {
  detail::requireKind(space, x, "distanceToProbe");
  if (const auto* ind = std::get_if<DiscreteIndicator>(&P.oracle))
    return distanceToSet(space, x, interval(ind->lo, ind->hi));
  if (const auto* lat = std::get_if<PointToLine>(&P.oracle)) {
    if (space.rule == MetricRule::ZeroOne) {
      const auto& c = coordsOf(x);
      if (c.size() != 2) throw std::invalid_argument("lattice probe needs dimension 2");
      const bool member = detail::isNaturalScalar(c[0]) && c[1] == lat->slope * c[0];
      return member ? 0.0 : 1.0;
    }
    return detail::distToLatticeOnLine(space, x, lat->slope);
  }
  if (!P.sortedScalars.empty() && space.rule == MetricRule::UsualLine)
    return detail::distToSortedScalars(P.sortedScalars, scalarOf(x));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : P.sample) best = std::min(best, evalMetric(space, x, p));
  return best;
}

// --- suprema over a probe ---------------------------------------------------

// A supremum together with its certification: exact means the value is the
// true sup over the set the probe stands for; otherwise it is the sampled
// lower bound.  A value saturated at the cap is exact regardless of sampling,
// because any sampled witness already forces the capped true value.
struct SupResult {
  double value{0.0};
  bool exact{false};
};

namespace detail {

constexpr double kNoCap = std::numeric_limits<double>::infinity();

inline SupResult cappedSup(double value, double cap, bool exact) {
  if (value >= cap) return {cap, true};
  return {value, exact};
}

// Closed-form deviation coefficient for a lattice point (k, k*s) against a
// target: distance is coeff * k for the supported target shapes.
inline std::optional<double> latticeCoeff(const ClosedSet& T, double slope) {
  if (std::holds_alternative<WholeSpace>(T.repr)) return 0.0;
  if (const auto* line = std::get_if<LineThroughOrigin>(&T.repr))
    return std::abs(slope - line->slope) / std::sqrt(1.0 + line->slope * line->slope);
  return std::nullopt;
}

// --- canonical scalar pieces for the 0-1 indicator oracle -------------------

struct ScalarPiece {
  double lo, hi;
};

// The part of A inside [clipLo, clipHi] as a sorted union of disjoint closed
// intervals (points are degenerate intervals).  Returns nullopt for shapes
// the indicator oracle does not cover.
inline bool collectScalarPieces(const ClosedSet& A, double clipLo, double clipHi,
                                std::vector<ScalarPiece>& out) {
  return std::visit(
      [&](const auto& repr) -> bool {
        using T = std::decay_t<decltype(repr)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          out.push_back({clipLo, clipHi});
          return true;
        } else if constexpr (std::is_same_v<T, Interval>) {
          const double lo = std::max(repr.lo, clipLo);
          const double hi = std::min(repr.hi, clipHi);
          if (lo <= hi) out.push_back({lo, hi});
          return true;
        } else if constexpr (std::is_same_v<T, FinitePoints>) {
          for (const auto& p : repr.points) {
            const auto* s = std::get_if<RealScalar>(&p);
            if (!s) return false;
            if (clipLo <= s->value && s->value <= clipHi) out.push_back({s->value, s->value});
          }
          return true;
        } else if constexpr (std::is_same_v<T, UnionOf>) {
          for (const auto& part : repr.parts)
            if (!collectScalarPieces(part, clipLo, clipHi, out)) return false;
          return true;
        } else {
          return false;
        }
      },
      A.repr);
}

inline std::optional<std::vector<ScalarPiece>> canonicalScalarPieces(const ClosedSet& A,
                                                                     double clipLo,
                                                                     double clipHi) {
  std::vector<ScalarPiece> raw;
  if (!collectScalarPieces(A, clipLo, clipHi, raw)) return std::nullopt;
  std::sort(raw.begin(), raw.end(),
            [](const ScalarPiece& a, const ScalarPiece& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<ScalarPiece> merged;
  for (const auto& piece : raw) {
    if (!merged.empty() && piece.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, piece.hi);
    else
      merged.push_back(piece);
  }
  return merged;
}

inline bool samePieces(const std::vector<ScalarPiece>& a, const std::vector<ScalarPiece>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi) return false;
  return true;
}

// Exact sup over the probe's true set of |d(x,A) - d(x,C)|, when the oracle
// covers the shapes involved.
inline std::optional<double> oracleDeviationSup(const GroundSpace& space, const ProbeSet& P,
                                                const ClosedSet& A, const ClosedSet& C) {
  if (const auto* lat = std::get_if<PointToLine>(&P.oracle)) {
    if (space.rule != MetricRule::EuclideanNorm) return std::nullopt;
    const auto ca = latticeCoeff(A, lat->slope);
    const auto cc = latticeCoeff(C, lat->slope);
    if (!ca || !cc) return std::nullopt;
    const double gap = std::abs(*ca - *cc);
    return gap == 0.0 ? 0.0 : kNoCap;
  }
  if (const auto* ind = std::get_if<DiscreteIndicator>(&P.oracle)) {
    if (space.rule != MetricRule::ZeroOne) return std::nullopt;
    const auto pa = canonicalScalarPieces(A, ind->lo, ind->hi);
    const auto pc = canonicalScalarPieces(C, ind->lo, ind->hi);
    if (!pa || !pc) return std::nullopt;
    return samePieces(*pa, *pc) ? 0.0 : 1.0;
  }
  return std::nullopt;
}

// Exact sup over the probe's true set of d(x, A), when the oracle covers A.
inline std::optional<double> oracleExcessSup(const GroundSpace& space, const ProbeSet& P,
                                             const ClosedSet& A) {
  if (const auto* lat = std::get_if<PointToLine>(&P.oracle)) {
    if (space.rule != MetricRule::EuclideanNorm) return std::nullopt;
    const auto ca = latticeCoeff(A, lat->slope);
    if (!ca) return std::nullopt;
    return *ca == 0.0 ? 0.0 : kNoCap;
  }
  if (const auto* ind = std::get_if<DiscreteIndicator>(&P.oracle)) {
    if (space.rule != MetricRule::ZeroOne) return std::nullopt;
    const auto pa = canonicalScalarPieces(A, ind->lo, ind->hi);
    if (!pa) return std::nullopt;
    const bool covered =
        pa->size() == 1 && pa->front().lo == ind->lo && pa->front().hi == ind->hi;
    return covered ? 0.0 : 1.0;
  }
  return std::nullopt;
}

inline SupResult deviationDetail(const GroundSpace& space, const ProbeSet& P, const ClosedSet& A,
                                 const ClosedSet& C, double cap) {
  if (auto oracle = oracleDeviationSup(space, P, A, C)) return cappedSup(*oracle, cap, true);
  double running = 0.0;
  for (const auto& x : P.sample) {
    const double dev = std::abs(distanceToSet(space, x, A) - distanceToSet(space, x, C));
    if (dev > running) running = dev;
    if (running >= cap) return {cap, true};
  }
  return {running, P.exhaustive};
}

inline SupResult excessDetail(const GroundSpace& space, const ProbeSet& P, const ClosedSet& A,
                              double cap) {
  if (auto oracle = oracleExcessSup(space, P, A)) return cappedSup(*oracle, cap, true);
  double running = 0.0;
  for (const auto& x : P.sample) {
    const double d = distanceToSet(space, x, A);
    if (d > running) running = d;
    if (running >= cap) return {cap, true};
  }
  return {running, P.exhaustive};
}

}  // namespace detail

/// sup over x in P of d(x, A): the oracle value when the oracle covers A
/// (always dominating the sampled max), otherwise the max over the sample.
inline double excess(const GroundSpace& space, const ProbeSet& P, const ClosedSet& A) {
  return detail::excessDetail(space, P, A, detail::kNoCap).value;
}

/// Pass iff every sampled x lands strictly inside the eps-enlargement of C
/// (d(x, C) < eps); the first violation becomes the witness.
inline Verdict inclusionInEnlargement(const GroundSpace& space, const ProbeSet& P,
                                      const ClosedSet& C, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("inclusionInEnlargement: eps must be positive");
  Resolution res;
  res.epsilon = eps;
  for (const auto& x : P.sample) {
    const double d = distanceToSet(space, x, C);
    if (!(d < eps)) {
      Witness w;
      w.point = x;
      w.value = d;
      w.label = P.label;
      return failVerdict(res, w, "point outside enlargement");
    }
  }
  return passVerdict(res, "all sampled points inside enlargement");
}

/// Consistency of a declared oracle with its own sample: the oracle sup must
/// dominate every sampled value.  Used by property tests.
inline bool oracleDominatesSample(const GroundSpace& space, const ProbeSet& P,
                                  const ClosedSet& A) {
  const auto oracle = detail::oracleExcessSup(space, P, A);
  if (!oracle) return true;
  double sampled = 0.0;
  for (const auto& x : P.sample) sampled = std::max(sampled, distanceToSet(space, x, A));
  return *oracle >= sampled;
}

}  // namespace setconv
