#pragma once

// Convergence checkers at a declared resolution (epsilon, horizon, depth).
// Each scans indices 1..horizon and decides by the suffix: pass when a good
// suffix reaches the horizon, fail when the horizon index is definitely bad,
// and (for interval-valued checks) undecided when the horizon index cannot
// be classified at the given depth.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setconv/hyperdist.hpp"
#include "setconv/sequence.hpp"

namespace setconv {

namespace detail {

inline void requireResolution(double eps, int horizon) {
  if (!(eps > 0.0)) throw std::invalid_argument("convergence check: eps must be positive");
  if (horizon < 1) throw std::invalid_argument("convergence check: horizon must be >= 1");
}

inline bool inPieces(const std::vector<ScalarPiece>& ps, double x) {
  for (const auto& p : ps)
    if (p.lo <= x && x <= p.hi) return true;
  return false;
}

// A concrete point witnessing a saturated oracle deviation, when one can be
// synthesized in closed form.
inline std::optional<Point> oracleDeviationWitness(const GroundSpace& space, const ProbeSet& P,
                                                   const ClosedSet& A, const ClosedSet& C,
                                                   double eps) {
  if (const auto* lat = std::get_if<PointToLine>(&P.oracle)) {
    if (space.rule != MetricRule::EuclideanNorm) return std::nullopt;
    const auto ca = latticeCoeff(A, lat->slope);
    const auto cc = latticeCoeff(C, lat->slope);
    if (!ca || !cc) return std::nullopt;
    const double gap = std::abs(*ca - *cc);
    if (gap == 0.0) return std::nullopt;
    const double k = std::max(1.0, std::ceil(eps / gap));
    return pointVec(k, k * lat->slope);
  }
  if (const auto* ind = std::get_if<DiscreteIndicator>(&P.oracle)) {
    if (space.rule != MetricRule::ZeroOne) return std::nullopt;
    const auto pa = canonicalScalarPieces(A, ind->lo, ind->hi);
    const auto pc = canonicalScalarPieces(C, ind->lo, ind->hi);
    if (!pa || !pc) return std::nullopt;
    std::vector<double> candidates{ind->lo, ind->hi};
    for (const auto& p : *pa) {
      candidates.push_back(p.lo);
      candidates.push_back(p.hi);
    }
    for (const auto& p : *pc) {
      candidates.push_back(p.lo);
      candidates.push_back(p.hi);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<double> probes = candidates;
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
      probes.push_back(0.5 * (candidates[i] + candidates[i + 1]));
    for (double x : probes)
      if (ind->lo <= x && x <= ind->hi && inPieces(*pa, x) != inPieces(*pc, x))
        return pointScalar(x);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

// --- Wijsman-style pointwise check ------------------------------------------

struct DeviationAtPoint {
  double value{0.0};
  std::optional<Point> argmax;
};

/// max over the test points of |d(x, A_n) - d(x, A)| with the maximizer.
inline DeviationAtPoint wijsmanIndexDeviation(const GroundSpace& space, const ClosedSet& An,
                                              const ClosedSet& A, const ProbeSet& testPoints) {
  DeviationAtPoint out;
  for (const auto& x : testPoints.sample) {
    const double dev = std::abs(distanceToSet(space, x, An) - distanceToSet(space, x, A));
    if (!out.argmax || dev > out.value) {
      out.value = dev;
      out.argmax = x;
    }
  }
  return out;
}

/// Pointwise convergence of distance functionals on the given test points:
/// eventually every test point's deviation stays below eps.
inline Verdict wijsmanCheck(const GroundSpace& space, const SetSequence& seq, const ClosedSet& A,
                            const ProbeSet& testPoints, double eps, int horizon) {
  detail::requireResolution(eps, horizon);
  const int h = sequenceHorizon(seq, horizon);
  Resolution res;
  res.epsilon = eps;
  res.horizon = h;
  int lastBad = 0;
  int runStart = 0;  // first index of the current bad run; witness comes from here
  Witness runWitness;
  for (int n = 1; n <= h; ++n) {
    const auto dev = wijsmanIndexDeviation(space, sequenceAt(seq, n), A, testPoints);
    if (!(dev.value < eps)) {
      lastBad = n;
      if (runStart == 0) {
        runStart = n;
        runWitness.index = n;
        runWitness.point = dev.argmax;
        runWitness.value = dev.value;
        runWitness.label = testPoints.label;
      }
    } else {
      runStart = 0;
    }
  }
  if (lastBad == h)
    return failVerdict(res, runWitness, "deviation >= eps from index " +
                                            std::to_string(runStart) + " through the horizon");
  Verdict v = passVerdict(res, lastBad == 0 ? "deviation below eps at every index"
                                            : "deviation below eps from index " +
                                                  std::to_string(lastBad + 1) + " on");
  v.passIndex = lastBad + 1;
  return v;
}

// --- uniform-deviation check over a family ----------------------------------

/// Uniform convergence of distance functionals on every family member:
/// eventually sup over each member of |d(x,A_n) - d(x,A)| stays below eps.
inline Verdict tauSdCheck(const GroundSpace& space, const SetSequence& seq, const ClosedSet& A,
                          const ProbeFamily& F, double eps, int horizon) {
  detail::requireResolution(eps, horizon);
  const int h = sequenceHorizon(seq, horizon);
  Resolution res;
  res.epsilon = eps;
  res.horizon = h;
  int lastBad = 0;
  int runStart = 0;  // first index of the current bad run; witness comes from here
  Witness runWitness;
  for (int n = 1; n <= h; ++n) {
    const ClosedSet An = sequenceAt(seq, n);
    bool badHere = false;
    for (const auto& S : F.members) {
      const double dev = uniformDeviation(space, S, An, A, eps);
      if (!(dev < eps)) {
        badHere = true;
        lastBad = n;
        if (runStart == 0) {
          runStart = n;
          runWitness = Witness{};
          runWitness.index = n;
          runWitness.value = dev;
          runWitness.label = S.label;
          for (const auto& x : S.sample) {
            const double pointDev =
                std::abs(distanceToSet(space, x, An) - distanceToSet(space, x, A));
            if (!(pointDev < eps)) {
              runWitness.point = x;
              runWitness.value = pointDev;
              break;
            }
          }
          if (!runWitness.point)
            runWitness.point = detail::oracleDeviationWitness(space, S, An, A, eps);
        }
        break;
      }
    }
    if (!badHere) runStart = 0;
  }
  if (lastBad == h)
    return failVerdict(res, runWitness, "uniform deviation on member '" + runWitness.label +
                                            "' >= eps from index " + std::to_string(runStart) +
                                            " through the horizon");
  Verdict v = passVerdict(res, lastBad == 0 ? "uniform deviation below eps at every index"
                                            : "uniform deviation below eps from index " +
                                                  std::to_string(lastBad + 1) + " on");
  v.passIndex = lastBad + 1;
  return v;
}

// --- two-sided enlargement check --------------------------------------------

struct SideWitness {
  Witness witness;
  std::string side;
};

/// One index of the two-sided enlargement condition: within each member S,
/// sampled points of A_n∩S must sit inside the eps-enlargement of A, and
/// sampled points of A∩S inside the eps-enlargement of A_n.  Membership is
/// decided exactly; empty intersections hold vacuously.
inline std::optional<SideWitness> sConvergenceIndexWitness(const GroundSpace& space,
                                                           const ClosedSet& An, const ClosedSet& A,
                                                           const ProbeFamily& F, double eps) {
  for (const auto& S : F.members) {
    for (const auto& x : S.sample) {
      if (memberOf(space, x, An)) {
        const double d = distanceToSet(space, x, A);
        if (!(d < eps)) {
          Witness w;
          w.point = x;
          w.value = d;
          w.label = S.label;
          return SideWitness{w, "A_n cap S outside enlargement of A"};
        }
      }
      if (memberOf(space, x, A)) {
        const double d = distanceToSet(space, x, An);
        if (!(d < eps)) {
          Witness w;
          w.point = x;
          w.value = d;
          w.label = S.label;
          return SideWitness{w, "A cap S outside enlargement of A_n"};
        }
      }
    }
  }
  return std::nullopt;
}

inline Verdict sConvergenceCheck(const GroundSpace& space, const SetSequence& seq,
                                 const ClosedSet& A, const ProbeFamily& F, double eps,
                                 int horizon) {
  detail::requireResolution(eps, horizon);
  const int h = sequenceHorizon(seq, horizon);
  Resolution res;
  res.epsilon = eps;
  res.horizon = h;
  int lastBad = 0;
  int runStart = 0;  // first index of the current bad run; witness comes from here
  std::optional<SideWitness> runWitness;
  for (int n = 1; n <= h; ++n) {
    auto bad = sConvergenceIndexWitness(space, sequenceAt(seq, n), A, F, eps);
    if (bad) {
      lastBad = n;
      if (runStart == 0) {
        runStart = n;
        bad->witness.index = n;
        runWitness = std::move(bad);
      }
    } else {
      runStart = 0;
    }
  }
  if (lastBad == h)
    return failVerdict(res, runWitness->witness,
                       runWitness->side + " (from index " + std::to_string(runStart) +
                           " through the horizon)");
  Verdict v = passVerdict(res, lastBad == 0 ? "both inclusions hold at every index"
                                            : "both inclusions hold from index " +
                                                  std::to_string(lastBad + 1) + " on");
  v.passIndex = lastBad + 1;
  return v;
}

// --- series-distance check --------------------------------------------------

/// Convergence in the weighted-series distance: eventually the enclosure for
/// d(A_n, A) sits definitely below eps.  Fails only when the enclosure sits
/// definitely at or above eps through the horizon; an unclassifiable horizon
/// index yields undecided, never a guess.
inline Verdict dSAConvergenceCheck(const GroundSpace& space, const SetSequence& seq,
                                   const ClosedSet& A, const ProbeFamily& F, double eps,
                                   int horizon, int depth) {
  detail::requireResolution(eps, horizon);
  const int h = sequenceHorizon(seq, horizon);
  Resolution res;
  res.epsilon = eps;
  res.horizon = h;
  res.depth = depth;
  int lastNotGood = 0;
  int lastNotBad = 0;
  bool sampled = false;
  IntervalValue atHorizon;
  for (int n = 1; n <= h; ++n) {
    const IntervalValue v = dSA(space, F, sequenceAt(seq, n), A, depth);
    sampled = sampled || v.cert == Certification::LowerOnly;
    const Cmp3 cmp = compareAgainst(v, eps);
    if (cmp != Cmp3::DefinitelyLess) lastNotGood = n;
    if (cmp != Cmp3::DefinitelyGreaterEqual) lastNotBad = n;
    if (n == h) atHorizon = v;
  }
  const Cmp3 horizonState = compareAgainst(atHorizon, eps);
  if (horizonState == Cmp3::DefinitelyLess) {
    Verdict v = passVerdict(res, lastNotGood == 0
                                     ? "enclosure definitely below eps at every index"
                                     : "enclosure definitely below eps from index " +
                                           std::to_string(lastNotGood + 1) + " on");
    v.passIndex = lastNotGood + 1;
    v.sampled = sampled;
    return v;
  }
  Witness w;
  w.label = F.label;
  w.value = atHorizon.lo;
  if (horizonState == Cmp3::DefinitelyGreaterEqual) {
    w.index = lastNotBad + 1;
    Verdict v = failVerdict(res, w, "enclosure definitely >= eps from index " +
                                        std::to_string(lastNotBad + 1) + " through the horizon");
    v.sampled = sampled;
    return v;
  }
  w.index = h;
  Verdict v = undecidedVerdict(res, w, "enclosure [" + formatDouble(atHorizon.lo) + ", " +
                                           formatDouble(atHorizon.hi) +
                                           "] straddles eps at the horizon; deepen the "
                                           "truncation or extend the family");
  v.sampled = sampled;
  return v;
}

// --- embedding of point convergence -----------------------------------------

/// Agreement check: plain metric convergence of x_n to the limit, versus
/// series-distance convergence of the singleton sets {x_n} to {limit}.  Pass
/// means the two sub-verdicts agree; the sub-verdicts ride along.
inline Verdict singletonEmbeddingCheck(const GroundSpace& space, const std::vector<Point>& points,
                                       const Point& limit, const ProbeFamily& F, double eps,
                                       int horizon, int depth) {
  detail::requireResolution(eps, horizon);
  if (points.empty()) throw std::invalid_argument("singletonEmbeddingCheck: empty sequence");
  const int h = std::min(horizon, static_cast<int>(points.size()));
  Resolution res;
  res.epsilon = eps;
  res.horizon = h;
  res.depth = depth;

  int lastBad = 0;
  int runStart = 0;
  Witness metricWitness;
  for (int n = 1; n <= h; ++n) {
    const double d = evalMetric(space, points[static_cast<std::size_t>(n - 1)], limit);
    if (!(d < eps)) {
      lastBad = n;
      if (runStart == 0) {
        runStart = n;
        metricWitness.index = n;
        metricWitness.point = points[static_cast<std::size_t>(n - 1)];
        metricWitness.value = d;
      }
    } else {
      runStart = 0;
    }
  }
  Verdict metricSide;
  if (lastBad == h) {
    metricSide = failVerdict(res, metricWitness,
                             "metric distance to the limit >= eps from index " +
                                 std::to_string(runStart) + " through the horizon");
  } else {
    metricSide = passVerdict(res, "metric distance below eps from index " +
                                      std::to_string(lastBad + 1) + " on");
    metricSide.passIndex = lastBad + 1;
  }

  const Verdict seriesSide = dSAConvergenceCheck(
      space, singletonSeq(points), singleton(limit), F, eps, h, depth);

  Verdict out;
  out.resolution = res;
  out.subVerdicts = {metricSide, seriesSide};
  out.sampled = seriesSide.sampled;
  if (seriesSide.outcome == Outcome::Undecided) {
    Witness w;
    w.label = F.label;
    out.outcome = Outcome::Undecided;
    out.witness = seriesSide.witness;
    out.detail = "series side undecided at this depth";
  } else if (metricSide.outcome == seriesSide.outcome) {
    out.outcome = Outcome::Pass;
    out.detail = std::string("sub-verdicts agree: both ") + outcomeName(metricSide.outcome);
  } else {
    out.outcome = Outcome::Fail;
    out.witness = metricSide.outcome == Outcome::Fail ? metricSide.witness : seriesSide.witness;
    out.detail = std::string("sub-verdicts disagree: metric side ") +
                 outcomeName(metricSide.outcome) + ", series side " +
                 outcomeName(seriesSide.outcome);
  }
  return out;
}

}  // namespace setconv
