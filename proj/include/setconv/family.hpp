#pragma once

// Countable families of probe sets (finite prefixes with declared structure)
// and the three coverage predicates decided at a declared resolution.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "setconv/probe.hpp"

namespace setconv {

struct ProbeFamily {
  std::string label;
  std::vector<ProbeSet> members;
  bool increasing{false};  // each member's sample contains its predecessor's
  bool complete{false};    // the members ARE the whole collection (no tail)
};

inline ProbeFamily makeFamily(std::string label, std::vector<ProbeSet> members,
                              bool increasing = false, bool complete = false) {
  if (members.empty()) throw std::invalid_argument("family '" + label + "': no members");
  ProbeFamily f;
  f.label = std::move(label);
  f.members = std::move(members);
  f.increasing = increasing;
  f.complete = complete;
  return f;
}

namespace detail {

// A cumulative member keeps its own oracle only if the oracle's set already
// contains every earlier member's declared set; otherwise the tag would
// misdescribe the union.
inline bool oracleAbsorbsPrefix(const std::vector<ProbeSet>& members, std::size_t k) {
  const SupOracle& cur = members[k].oracle;
  if (std::holds_alternative<NoOracle>(cur)) return false;
  for (std::size_t j = 0; j < k; ++j) {
    const SupOracle& prev = members[j].oracle;
    if (const auto* ci = std::get_if<DiscreteIndicator>(&cur)) {
      const auto* pi = std::get_if<DiscreteIndicator>(&prev);
      if (!pi || pi->lo < ci->lo || pi->hi > ci->hi) return false;
    } else if (const auto* cl = std::get_if<PointToLine>(&cur)) {
      const auto* pl = std::get_if<PointToLine>(&prev);
      if (!pl || pl->slope != cl->slope) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Replaces each member by the union of the first k members (exact dedupe,
/// first occurrences kept).  Idempotent; coverage verdicts are unchanged
/// because covering by one cumulative member is covering by a finite union.
inline ProbeFamily normalizeIncreasing(const ProbeFamily& F) {
  ProbeFamily out;
  out.label = F.label;
  out.increasing = true;
  out.complete = F.complete;
  std::vector<Point> running;
  bool allExhaustive = true;
  for (std::size_t k = 0; k < F.members.size(); ++k) {
    const ProbeSet& m = F.members[k];
    for (const auto& p : m.sample)
      if (std::find(running.begin(), running.end(), p) == running.end()) running.push_back(p);
    allExhaustive = allExhaustive && m.exhaustive;
    const bool keepOracle = detail::oracleAbsorbsPrefix(F.members, k);
    out.members.push_back(makeProbe(m.label, running,
                                    keepOracle ? m.oracle : SupOracle{NoOracle{}},
                                    allExhaustive && !keepOracle));
  }
  return out;
}

namespace detail {

inline bool memberCertifiable(const ProbeSet& m) {
  return m.exhaustive || !std::holds_alternative<NoOracle>(m.oracle);
}

}  // namespace detail

/// Is A swallowed by the eps-enlargement of a SINGLE family member?  Pass
/// reports the first covering member's index; fail reports, per member, the
/// first sampled point of A left outside.
inline Verdict weaklySTotallyBounded(const GroundSpace& space, const ProbeSet& A,
                                     const ProbeFamily& F, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("weaklySTotallyBounded: eps must be positive");
  Resolution res;
  res.epsilon = eps;
  std::vector<Witness> perMember;
  bool anySampled = false;
  for (std::size_t n = 0; n < F.members.size(); ++n) {
    const ProbeSet& S = F.members[n];
    std::optional<Witness> bad;
    for (const auto& a : A.sample) {
      const double d = distanceToProbe(space, a, S);
      if (!(d < eps)) {
        Witness w;
        w.index = static_cast<int>(n) + 1;
        w.point = a;
        w.value = d;
        w.label = S.label;
        bad = std::move(w);
        break;
      }
    }
    if (!bad) {
      Verdict v = passVerdict(res, "covered by member " + std::to_string(n + 1) + " ('" +
                                       S.label + "')");
      v.passIndex = static_cast<int>(n) + 1;
      return v;
    }
    anySampled = anySampled || !detail::memberCertifiable(S);
    perMember.push_back(std::move(*bad));
  }
  Verdict v = failVerdict(res, perMember.front(), "no member's enlargement covers the set");
  v.perMember = std::move(perMember);
  v.sampled = anySampled;
  return v;
}

/// Every test point must land inside SOME candidate's eps-enlargement, for
/// every eps in the grid.  On cumulative (normalized-increasing) candidates
/// this coincides with weaklySTotallyBounded holding for every pair, and on
/// raw candidates it is the finite-union reading, so normalization never
/// changes the verdict.
inline Verdict totallyBoundedFamilyCheck(const GroundSpace& space, const ProbeFamily& candidates,
                                         const std::vector<ProbeSet>& testSets,
                                         const std::vector<double>& epsGrid) {
  if (testSets.empty()) throw std::invalid_argument("totallyBoundedFamilyCheck: no test sets");
  if (epsGrid.empty()) throw std::invalid_argument("totallyBoundedFamilyCheck: empty eps grid");
  for (double eps : epsGrid)
    if (!(eps > 0.0))
      throw std::invalid_argument("totallyBoundedFamilyCheck: eps must be positive");
  bool anySampled = false;
  for (const auto& m : candidates.members)
    anySampled = anySampled || !detail::memberCertifiable(m);
  Resolution res;
  res.epsilon = epsGrid.front();
  for (const auto& ts : testSets) {
    for (double eps : epsGrid) {
      for (const auto& a : ts.sample) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& m : candidates.members) {
          best = std::min(best, distanceToProbe(space, a, m));
          if (best < eps) break;
        }
        if (!(best < eps)) {
          Resolution failedRes;
          failedRes.epsilon = eps;
          Witness w;
          w.point = a;
          w.value = best;
          w.label = ts.label;
          Verdict v = failVerdict(failedRes, w,
                                  "test set '" + ts.label + "' not covered at eps " +
                                      formatDouble(eps));
          v.sampled = anySampled;
          return v;
        }
      }
    }
  }
  return passVerdict(res, "every test set covered at every eps in the grid");
}

namespace detail {

// Distance from a point to a member's raw sample, ignoring any oracle: the
// separability check is defined over the union of family SAMPLES.
inline double distanceToSampleOnly(const GroundSpace& space, const Point& x, const ProbeSet& P) {
  if (!P.sortedScalars.empty() && space.rule == MetricRule::UsualLine)
    return distToSortedScalars(P.sortedScalars, scalarOf(x));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : P.sample) best = std::min(best, evalMetric(space, x, p));
  return best;
}

}  // namespace detail

/// Pass iff every grid point is within eps of the union of the family's
/// samples; the first uncovered grid point is the witness.
inline Verdict sSeparableCheck(const GroundSpace& space, const ProbeFamily& F,
                               const ProbeSet& probeGrid, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sSeparableCheck: eps must be positive");
  Resolution res;
  res.epsilon = eps;
  for (const auto& g : probeGrid.sample) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : F.members) {
      best = std::min(best, detail::distanceToSampleOnly(space, g, m));
      if (best < eps) break;
    }
    if (!(best < eps)) {
      Witness w;
      w.point = g;
      w.value = best;
      w.label = probeGrid.label;
      return failVerdict(res, w, "grid point not reached by the family's samples");
    }
  }
  return passVerdict(res, "grid covered by the union of family samples");
}

}  // namespace setconv
