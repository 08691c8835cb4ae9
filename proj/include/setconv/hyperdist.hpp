#pragma once

// Uniform deviation of distance functionals over a probe, the entourage test
// it induces, and the weighted-series set distance with certified truncation.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "setconv/family.hpp"
#include "setconv/interval.hpp"
#include "setconv/probe.hpp"

namespace setconv {

/// sup over x in P of |d(x,A) - d(x,C)|, optionally saturated at cap: once
/// the running max reaches cap the result is cap itself, so early exit never
/// changes the value and raising the cap never lowers it.
inline double uniformDeviation(const GroundSpace& space, const ProbeSet& P, const ClosedSet& A,
                               const ClosedSet& C,
                               std::optional<double> cap = std::nullopt) {
  if (cap && !(*cap > 0.0)) throw std::invalid_argument("uniformDeviation: cap must be positive");
  return detail::deviationDetail(space, P, A, C, cap.value_or(detail::kNoCap)).value;
}

/// Membership of (A, C) in the entourage indexed by (P, eps): deviation
/// strictly below eps.
inline bool entourageTest(const GroundSpace& space, const ProbeSet& P, const ClosedSet& A,
                          const ClosedSet& C, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("entourageTest: eps must be positive");
  return uniformDeviation(space, P, A, C, eps) < eps;
}

/// sup over x in P of |d(x,A) - d(x,C)| with no cap; the probe is expected to
/// stand for the whole space when this is read as the Hausdorff distance.
inline double hausdorffDistance(const GroundSpace& space, const ClosedSet& A, const ClosedSet& C,
                                const ProbeSet& probe) {
  return detail::deviationDetail(space, probe, A, C, detail::kNoCap).value;
}

// The series  sum over i of 2^-i * min(1, sup over S_i of |d(x,A)-d(x,C)|)
// truncated after min(depth, members) terms.  lo sums the evaluated terms;
// hi adds the worst-case tail: 2^-min(depth,N) for a prefix of an infinite
// collection, zero (or the depth..N remainder) when the family is complete.
// Certification is Exact only when every evaluated term was certified.
inline IntervalValue dSA(const GroundSpace& space, const ProbeFamily& F, const ClosedSet& A,
                         const ClosedSet& C, int depth) {
  if (depth < 1) throw std::invalid_argument("dSA: depth must be >= 1");
  const int N = static_cast<int>(F.members.size());
  const int evaluated = std::min(depth, N);
  double lo = 0.0;
  bool exact = true;
  for (int i = 1; i <= evaluated; ++i) {
    const SupResult term = detail::deviationDetail(space, F.members[static_cast<std::size_t>(i - 1)],
                                                   A, C, 1.0);
    lo += std::ldexp(term.value, -i);
    exact = exact && term.exact;
  }
  double tail = 0.0;
  if (F.complete) {
    if (depth < N) tail = std::ldexp(1.0, -depth) - std::ldexp(1.0, -N);
  } else {
    tail = std::ldexp(1.0, -evaluated);
  }
  IntervalValue out;
  out.lo = lo;
  out.hi = lo + tail;
  out.cert = exact ? Certification::Exact : Certification::LowerOnly;
  return out;
}

/// The series distance over a family of ball probes about x0 (member n
/// standing for the open ball of radius n+1).  Validates that every sampled
/// point actually lies strictly inside its ball.
inline IntervalValue awDistance(const GroundSpace& space, const Point& x0, const ClosedSet& A,
                                const ClosedSet& C, int depth, const ProbeFamily& ballProbes) {
  for (std::size_t n = 0; n < ballProbes.members.size(); ++n) {
    const double radius = static_cast<double>(n) + 1.0;
    for (const auto& p : ballProbes.members[n].sample)
      if (!(evalMetric(space, x0, p) < radius))
        throw std::invalid_argument("awDistance: member " + std::to_string(n + 1) +
                                    " samples outside the open ball of radius " +
                                    formatDouble(radius));
  }
  return dSA(space, ballProbes, A, C, depth);
}

}  // namespace setconv
