#pragma once

// Declarative scenarios: named definitions bound to checks with expected
// outcomes, a deterministic runner producing report rows, and the built-in
// scenario catalog.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setconv/convergence.hpp"
#include "setconv/enumerate.hpp"
#include "setconv/expr.hpp"
#include "setconv/format.hpp"

namespace setconv {

// --- scenario model ----------------------------------------------------------

struct ScenarioResolution {
  double epsilon{1e-2};
  int horizon{1000};
  int depth{40};
  double gridStep{1e-2};
  std::uint64_t seed{0};
};

enum class ExpectKind { Pass, Fail, ValueInterval, Unchecked };

struct Expect {
  ExpectKind kind{ExpectKind::Unchecked};
  double lo{0.0};  // value-interval bounds; unused otherwise
  double hi{0.0};
};

struct CheckSpec {
  std::string id;
  std::string op;
  std::vector<std::pair<std::string, std::string>> args;  // declaration order kept
  Expect expect;
};

struct Scenario {
  std::string name;
  GroundSpace space{usualLine()};
  std::map<std::string, ClosedSet> sets;
  std::map<std::string, ProbeSet> probes;
  std::map<std::string, ProbeFamily> families;
  std::map<std::string, SetSequence> sequences;
  std::vector<CheckSpec> checks;
  ScenarioResolution res;
};

struct ScenarioRow {
  std::string checkId;
  std::string outcome;  // pass | fail | undecided | value | error
  std::optional<double> lo;
  std::optional<double> hi;
  std::string witness;
  long long ms{0};
  bool met{false};
  std::string detail;
};

struct Report {
  std::string scenario;
  std::vector<ScenarioRow> rows;
  bool allMet{true};
};

// Pinned tolerances for the batch property checks.
constexpr double kTriangleTolerance = 1e-12;

// --- internals ---------------------------------------------------------------

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::mt19937_64 checkRng(const ScenarioResolution& res, const std::string& checkId) {
  return std::mt19937_64(res.seed ^ fnv1a(checkId));
}

inline const std::string* findArg(const CheckSpec& c, const std::string& key) {
  for (const auto& [k, v] : c.args)
    if (k == key) return &v;
  return nullptr;
}

inline std::string requireArg(const CheckSpec& c, const std::string& key) {
  const std::string* v = findArg(c, key);
  if (!v) throw std::invalid_argument("check '" + c.id + "': missing argument '" + key + "'");
  return *v;
}

inline double argNum(const CheckSpec& c, const std::string& key, double fallback) {
  const std::string* v = findArg(c, key);
  return v ? evalExpr(*v) : fallback;
}

inline int argInt(const CheckSpec& c, const std::string& key, int fallback) {
  const std::string* v = findArg(c, key);
  if (!v) return fallback;
  const double d = evalExpr(*v);
  return static_cast<int>(d);
}

template <typename T>
const T& named(const std::map<std::string, T>& table, const std::string& name,
               const std::string& what, const std::string& checkId) {
  const auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("check '" + checkId + "': no " + what + " named '" + name + "'");
  return it->second;
}

inline std::vector<std::string> splitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trimCopy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// "(x, y)" as a plane point, otherwise a scalar expression.
inline Point parsePointLiteral(const std::string& text) {
  const std::string t = trimCopy(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw std::invalid_argument("point literal '" + text + "': missing ')'");
    const std::string inner = t.substr(1, t.size() - 2);
    int depthParen = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depthParen;
      if (inner[i] == ')') --depthParen;
      if (inner[i] == ',' && depthParen == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      throw std::invalid_argument("point literal '" + text + "': expected two coordinates");
    return pointVec(evalExpr(inner.substr(0, split)), evalExpr(inner.substr(split + 1)));
  }
  return pointScalar(evalExpr(t));
}

// --- built-in family builders ------------------------------------------------

/// Nested indicator intervals [-m, m], decided exactly by their oracle tags.
inline ProbeFamily nestedIndicatorFamily(int count) {
  std::vector<ProbeSet> members;
  for (int m = 1; m <= count; ++m) {
    const double mm = static_cast<double>(m);
    members.push_back(scalarProbe("S" + std::to_string(m), {-mm, 0.0, mm},
                                  DiscreteIndicator{-mm, mm}));
  }
  return makeFamily("nested-intervals", std::move(members), /*increasing=*/true);
}

/// Singleton probes over the rational-pair enumeration (plane).
inline ProbeFamily rationalPairSingletons(int count) {
  const auto pairs = rationalPairEnumeration(static_cast<std::size_t>(count));
  std::vector<ProbeSet> members;
  for (int i = 0; i < count; ++i)
    members.push_back(makeProbe("q" + std::to_string(i + 1), {pairs[static_cast<std::size_t>(i)]},
                                NoOracle{}, /*exhaustive=*/true));
  return makeFamily("rational-singletons", std::move(members));
}

/// Singleton probes over the scalar rational enumeration.
inline ProbeFamily rationalScalarSingletons(int count) {
  const auto rs = rationalEnumeration(static_cast<std::size_t>(count));
  std::vector<ProbeSet> members;
  for (int i = 0; i < count; ++i)
    members.push_back(scalarProbe("q" + std::to_string(i + 1), {rs[static_cast<std::size_t>(i)]},
                                  NoOracle{}, /*exhaustive=*/true));
  return makeFamily("rational-singletons", std::move(members));
}

/// Cumulative blocks of the dyadic enumeration, normalized increasing.
inline ProbeFamily dyadicBlockFamily(int maxLevel, int range, std::size_t blockSize) {
  const std::vector<double> dy = dyadicEnumeration(maxLevel, range);
  std::vector<ProbeSet> members;
  for (std::size_t start = 0; start < dy.size(); start += blockSize) {
    const std::size_t stop = std::min(start + blockSize, dy.size());
    members.push_back(scalarProbe("block-" + std::to_string(members.size() + 1),
                                  {dy.begin() + static_cast<long>(start),
                                   dy.begin() + static_cast<long>(stop)},
                                  NoOracle{}, true));
  }
  return normalizeIncreasing(makeFamily("dyadic-singletons", std::move(members)));
}

/// Grid probes over [-n, n] for n = 1..count.
inline ProbeFamily intervalGridFamily(int count, double step) {
  std::vector<ProbeSet> members;
  for (int n = 1; n <= count; ++n)
    members.push_back(gridProbe("I" + std::to_string(n), -n, n, step));
  return makeFamily("interval-grids", std::move(members), /*increasing=*/true);
}

/// Ring probes strictly inside the origin-centered open balls of radius i.
inline ProbeFamily ringBallFamily(int count, int angleSteps) {
  std::vector<ProbeSet> members;
  const double pi = std::acos(-1.0);
  for (int i = 1; i <= count; ++i) {
    const double rho = static_cast<double>(i) * (1.0 - 1.0 / 64.0);
    std::vector<Point> pts{pointVec(0.0, 0.0)};
    for (int k = 0; k < angleSteps; ++k) {
      const double phi = 2.0 * pi * static_cast<double>(k) / static_cast<double>(angleSteps);
      pts.push_back(pointVec(rho * std::cos(phi), rho * std::sin(phi)));
    }
    members.push_back(makeProbe("ball" + std::to_string(i), std::move(pts)));
  }
  return makeFamily("origin-balls", std::move(members));
}

/// Escape-prone sampled family under the 0-1 metric: member n holds a
/// half-integer grid on [-n, n], the irrational escape points of height <= n,
/// and decoys above n.
inline ProbeFamily escapeProneFamily(int count) {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  std::vector<ProbeSet> members;
  for (int n = 1; n <= count; ++n) {
    std::vector<double> pts;
    for (int k = -2 * n; k <= 2 * n; ++k) pts.push_back(static_cast<double>(k) / 2.0);
    for (int m = 1; m <= n; ++m) {
      pts.push_back(static_cast<double>(m) + s2 / 2.0);
      pts.push_back(-(static_cast<double>(m) + s2 / 2.0));
    }
    for (int m = 1; m <= 4; ++m) pts.push_back(static_cast<double>(n) + m * s3);
    members.push_back(scalarProbe("B" + std::to_string(n), pts));
  }
  return makeFamily("intervals-with-decoys", std::move(members));
}

inline ProbeSet escapeWitnessProbe(int count) {
  const double s2 = std::sqrt(2.0);
  std::vector<double> pts;
  for (int m = 1; m <= count; ++m) {
    pts.push_back(static_cast<double>(m) + s2 / 2.0);
    pts.push_back(-(static_cast<double>(m) + s2 / 2.0));
  }
  return scalarProbe("escape-witnesses", pts);
}

/// Sup-metric grid over coordinates {0, 1}: values -radius..radius in the
/// given step (canonical zero entries dropped by the point factory).
inline ProbeSet supSeqGridProbe(const std::string& label, double radius, double step) {
  std::vector<Point> pts;
  const int count = static_cast<int>(std::llround(radius / step));
  for (int i = -count; i <= count; ++i)
    for (int j = -count; j <= count; ++j)
      pts.push_back(pointSeq({{0, static_cast<double>(i) * step},
                              {1, static_cast<double>(j) * step}}));
  return makeProbe(label, std::move(pts), NoOracle{}, true);
}

// --- seeded generators for batch checks --------------------------------------

inline Point randomPointFor(const GroundSpace& space, std::mt19937_64& rng) {
  switch (space.kind) {
    case PointKind::Scalar:
      // Half-integer grid: equal draws occur, exercising the identity axiom.
      return pointScalar(static_cast<double>(uniformInt(rng, -12, 12)) / 2.0);
    case PointKind::Vector:
      if (space.rule == MetricRule::FrenchMetro) {
        // Mix exact-dyadic rays through the origin with free points so the
        // collinearity branch of the metric is exercised without rounding.
        const int mode = uniformInt(rng, 0, 3);
        const double x0 = std::ldexp(static_cast<double>(uniformInt(rng, -1024, 1024)), -10);
        const double x1 = std::ldexp(static_cast<double>(uniformInt(rng, -1024, 1024)), -10);
        if (mode == 0) return pointVec(0.0, 0.0);
        if (mode == 1) {
          const double alpha = std::ldexp(static_cast<double>(uniformInt(rng, -64, 64)), -4);
          return pointVec(alpha * x0, alpha * x1);  // exact products: scaled dyadics
        }
        return pointVec(x0, x1);
      }
      return pointVec(uniformIn(rng, -3.0, 3.0), uniformIn(rng, -3.0, 3.0));
    case PointKind::Seq: {
      std::vector<std::pair<std::size_t, double>> entries;
      for (std::size_t dim = 0; dim < 4; ++dim)
        if (uniformInt(rng, 0, 1) == 1)
          entries.push_back({dim, static_cast<double>(uniformInt(rng, -10, 10)) / 2.0});
      return pointSeq(entries);
    }
  }
  throw std::logic_error("randomPointFor: unhandled point kind");
}

struct AxiomViolation {
  double worst{0.0};
  std::string what;  // empty when all axioms held
  int trial{0};
};

/// Ground-metric axioms on seeded random triples: identity and symmetry must
/// be exact, the triangle inequality within the pinned tolerance.
inline AxiomViolation metricAxiomSweep(const GroundSpace& space, std::mt19937_64& rng,
                                       int trials) {
  AxiomViolation out;
  for (int t = 1; t <= trials; ++t) {
    const Point x = randomPointFor(space, rng);
    const Point y = randomPointFor(space, rng);
    const Point z = randomPointFor(space, rng);
    const double dxy = evalMetric(space, x, y);
    const double dyx = evalMetric(space, y, x);
    const double dxz = evalMetric(space, x, z);
    const double dyz = evalMetric(space, y, z);
    if (evalMetric(space, x, x) != 0.0) return {0.0, "identity", t};
    if (dxy != dyx) return {0.0, "symmetry", t};
    if (!(dxy >= 0.0)) return {0.0, "nonnegativity", t};
    if (space.rule == MetricRule::ZeroOne && dxy != 0.0 && dxy != 1.0)
      return {0.0, "zero-one range", t};
    const double violation = dxz - (dxy + dyz);
    if (violation > out.worst) {
      out.worst = violation;
      out.trial = t;
    }
    if (violation > kTriangleTolerance) {
      out.what = "triangle";
      return out;
    }
  }
  return out;
}

inline std::vector<Point> randomUniverse(const GroundSpace& space, std::mt19937_64& rng, int n) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(randomPointFor(space, rng));
  return out;
}

inline ClosedSet randomSubsetOf(const std::vector<Point>& universe, std::mt19937_64& rng,
                                int maxSize) {
  const int size = uniformInt(rng, 1, maxSize);
  std::vector<Point> pts;
  for (int i = 0; i < size; ++i)
    pts.push_back(universe[static_cast<std::size_t>(
        uniformInt(rng, 0, static_cast<int>(universe.size()) - 1))]);
  return finitePoints(std::move(pts));
}

}  // namespace detail

// --- running -----------------------------------------------------------------

namespace detail {

inline ScenarioRow verdictRow(const CheckSpec& spec, const Verdict& v) {
  ScenarioRow row;
  row.checkId = spec.id;
  row.outcome = outcomeName(v.outcome);
  if (v.witness) {
    row.witness = formatWitness(*v.witness);
  } else if (v.passIndex) {
    row.witness = "passIndex=" + std::to_string(*v.passIndex);
  }
  row.detail = v.detail;
  return row;
}

inline ScenarioRow valueRow(const CheckSpec& spec, double lo, double hi,
                            const std::string& witness = "") {
  ScenarioRow row;
  row.checkId = spec.id;
  row.outcome = "value";
  row.lo = lo;
  row.hi = hi;
  row.witness = witness;
  return row;
}

inline ScenarioRow intervalRow(const CheckSpec& spec, const IntervalValue& v) {
  return valueRow(spec, v.lo, v.hi, std::string("cert=") + certificationName(v.cert));
}

inline ScenarioRow dispatchCheck(const Scenario& s, const CheckSpec& spec) {
  const auto& space = s.space;
  const ScenarioResolution& res = s.res;
  const double eps = argNum(spec, "eps", res.epsilon);
  const int horizon = argInt(spec, "horizon", res.horizon);
  const int depth = argInt(spec, "depth", res.depth);

  auto set = [&](const std::string& key) -> const ClosedSet& {
    return named(s.sets, requireArg(spec, key), "set", spec.id);
  };
  auto probe = [&](const std::string& key) -> const ProbeSet& {
    return named(s.probes, requireArg(spec, key), "probe", spec.id);
  };
  auto family = [&](const std::string& key) -> const ProbeFamily& {
    return named(s.families, requireArg(spec, key), "family", spec.id);
  };
  auto sequence = [&](const std::string& key) -> const SetSequence& {
    return named(s.sequences, requireArg(spec, key), "sequence", spec.id);
  };

  if (spec.op == "distance") {
    const Point x = parsePointLiteral(requireArg(spec, "point"));
    const double d = distanceToSet(space, x, set("set"));
    return valueRow(spec, d, d);
  }
  if (spec.op == "excess") {
    const double v = excess(space, probe("probe"), set("set"));
    return valueRow(spec, v, v);
  }
  if (spec.op == "uniform-deviation") {
    std::optional<double> cap;
    if (findArg(spec, "cap")) cap = argNum(spec, "cap", 0.0);
    const double v = uniformDeviation(space, probe("probe"), set("left"), set("right"), cap);
    return valueRow(spec, v, v);
  }
  if (spec.op == "hausdorff") {
    const double v = hausdorffDistance(space, set("left"), set("right"), probe("probe"));
    return valueRow(spec, v, v);
  }
  if (spec.op == "dsa") {
    return intervalRow(spec, dSA(space, family("family"), set("moving"), set("limit"), depth));
  }
  if (spec.op == "aw") {
    const Point center = parsePointLiteral(requireArg(spec, "center"));
    return intervalRow(spec, awDistance(space, center, set("moving"), set("limit"), depth,
                                        family("family")));
  }
  if (spec.op == "inclusion") {
    return verdictRow(spec, inclusionInEnlargement(space, probe("probe"), set("set"), eps));
  }
  if (spec.op == "entourage") {
    const bool in = entourageTest(space, probe("probe"), set("left"), set("right"), eps);
    ScenarioRow row;
    row.checkId = spec.id;
    row.outcome = in ? "pass" : "fail";
    row.detail = in ? "pair inside the entourage" : "pair outside the entourage";
    return row;
  }
  if (spec.op == "weakly-bounded") {
    return verdictRow(spec, weaklySTotallyBounded(space, probe("target"), family("family"), eps));
  }
  if (spec.op == "totally-bounded") {
    std::vector<ProbeSet> tests;
    const std::string testsArg = requireArg(spec, "tests");
    if (testsArg.rfind("seeded:", 0) == 0) {
      const int count = static_cast<int>(evalExpr(testsArg.substr(7)));
      auto rng = checkRng(res, spec.id);
      for (int i = 0; i < count; ++i) {
        std::vector<double> pts;
        const int size = uniformInt(rng, 1, 5);
        for (int j = 0; j < size; ++j) pts.push_back(uniformIn(rng, -5.0, 5.0));
        tests.push_back(scalarProbe("seeded-" + std::to_string(i + 1), pts));
      }
    } else {
      for (const std::string& name : splitList(testsArg, ';'))
        tests.push_back(named(s.probes, trimCopy(name), "probe", spec.id));
    }
    std::vector<double> epsGrid;
    const std::string* grid = findArg(spec, "eps-grid");
    if (grid) {
      for (const std::string& part : splitList(*grid, ';')) epsGrid.push_back(evalExpr(part));
    } else {
      epsGrid.push_back(eps);
    }
    return verdictRow(spec, totallyBoundedFamilyCheck(space, family("family"), tests, epsGrid));
  }
  if (spec.op == "s-separable") {
    return verdictRow(spec, sSeparableCheck(space, family("family"), probe("grid"), eps));
  }
  if (spec.op == "wijsman") {
    return verdictRow(spec, wijsmanCheck(space, sequence("seq"), set("limit"), probe("points"),
                                         eps, horizon));
  }
  if (spec.op == "tau-sd") {
    return verdictRow(spec, tauSdCheck(space, sequence("seq"), set("limit"), family("family"),
                                       eps, horizon));
  }
  if (spec.op == "s-convergence") {
    return verdictRow(spec, sConvergenceCheck(space, sequence("seq"), set("limit"),
                                              family("family"), eps, horizon));
  }
  if (spec.op == "dsa-convergence") {
    return verdictRow(spec, dSAConvergenceCheck(space, sequence("seq"), set("limit"),
                                                family("family"), eps, horizon, depth));
  }
  if (spec.op == "metric-axioms") {
    const int trials = argInt(spec, "trials", 1000);
    auto rng = checkRng(res, spec.id);
    const AxiomViolation v = metricAxiomSweep(space, rng, trials);
    ScenarioRow row;
    row.checkId = spec.id;
    row.lo = v.worst;
    row.hi = v.worst;
    if (!v.what.empty()) {
      row.outcome = "fail";
      row.witness = "trial=" + std::to_string(v.trial) + ";axiom=" + v.what;
      row.detail = "axiom '" + v.what + "' violated";
    } else {
      row.outcome = "pass";
      row.detail = std::to_string(trials) + " seeded triples; worst triangle slack " +
                   formatDouble(v.worst);
    }
    return row;
  }
  if (spec.op == "hausdorff-identity-batch") {
    const int pairs = argInt(spec, "pairs", 200);
    const int universeSize = argInt(spec, "universe", 30);
    auto rng = checkRng(res, spec.id);
    const std::vector<Point> universe = randomUniverse(space, rng, universeSize);
    const ProbeSet U = makeProbe("universe", universe, NoOracle{}, true);
    const ProbeFamily F = makeFamily("whole-space", {U}, true, /*complete=*/true);
    double worst = 0.0;
    for (int t = 1; t <= pairs; ++t) {
      const ClosedSet A = randomSubsetOf(universe, rng, 6);
      const ClosedSet C = randomSubsetOf(universe, rng, 6);
      const double lhs = dSA(space, F, A, C, 1).lo;
      const double rhs = 0.5 * std::min(1.0, hausdorffDistance(space, A, C, U));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    ScenarioRow row;
    row.checkId = spec.id;
    row.lo = worst;
    row.hi = worst;
    row.outcome = worst == 0.0 ? "pass" : "fail";
    row.detail = std::to_string(pairs) + " seeded pairs; half of min(1, Hausdorff) " +
                 (worst == 0.0 ? "matched exactly" : "missed by " + formatDouble(worst));
    return row;
  }
  if (spec.op == "dsa-metric-axioms") {
    const int triples = argInt(spec, "triples", 200);
    const int universeSize = argInt(spec, "universe", 50);
    auto rng = checkRng(res, spec.id);
    const std::vector<Point> universe = randomUniverse(space, rng, universeSize);
    const ProbeSet U = makeProbe("universe", universe, NoOracle{}, true);
    const ProbeFamily F = makeFamily("whole-space", {U}, true, /*complete=*/true);
    double worst = 0.0;
    int worstTrial = 0;
    for (int t = 1; t <= triples; ++t) {
      const ClosedSet A = randomSubsetOf(universe, rng, 6);
      const ClosedSet B = randomSubsetOf(universe, rng, 6);
      const ClosedSet C = randomSubsetOf(universe, rng, 6);
      if (dSA(space, F, A, A, depth).lo != 0.0) {
        ScenarioRow row;
        row.checkId = spec.id;
        row.outcome = "fail";
        row.witness = "trial=" + std::to_string(t) + ";axiom=identity";
        return row;
      }
      if (dSA(space, F, A, C, depth).lo != dSA(space, F, C, A, depth).lo) {
        ScenarioRow row;
        row.checkId = spec.id;
        row.outcome = "fail";
        row.witness = "trial=" + std::to_string(t) + ";axiom=symmetry";
        return row;
      }
      const double violation = dSA(space, F, A, C, depth).lo -
                               (dSA(space, F, A, B, depth).lo + dSA(space, F, B, C, depth).lo);
      if (violation > worst) {
        worst = violation;
        worstTrial = t;
      }
    }
    ScenarioRow row;
    row.checkId = spec.id;
    row.lo = worst;
    row.hi = worst;
    if (worst > kTriangleTolerance) {
      row.outcome = "fail";
      row.witness = "trial=" + std::to_string(worstTrial) + ";axiom=triangle";
    } else {
      row.outcome = "pass";
      row.detail = std::to_string(triples) +
                   " seeded set triples; identity and symmetry exact, worst triangle slack " +
                   formatDouble(worst);
    }
    return row;
  }
  throw std::invalid_argument("check '" + spec.id + "': unknown operation '" + spec.op + "'");
}

inline bool expectationMet(const Expect& e, const ScenarioRow& row) {
  switch (e.kind) {
    case ExpectKind::Unchecked:
      return true;
    case ExpectKind::Pass:
      return row.outcome == "pass";
    case ExpectKind::Fail:
      return row.outcome == "fail";
    case ExpectKind::ValueInterval:
      return row.outcome == "value" && row.lo && row.hi && e.lo <= *row.lo && *row.hi <= e.hi;
  }
  return false;
}

}  // namespace detail

/// Executes every check in order; a throwing check yields an "error" row and
/// later checks still run.  Rows are deterministic given the seed except for
/// the wall-time field.
inline Report runScenario(const Scenario& s) {
  Report report;
  report.scenario = s.name;
  for (const CheckSpec& spec : s.checks) {
    const auto start = std::chrono::steady_clock::now();
    ScenarioRow row;
    try {
      row = detail::dispatchCheck(s, spec);
    } catch (const std::exception& ex) {
      row = ScenarioRow{};
      row.checkId = spec.id;
      row.outcome = "error";
      row.witness = ex.what();
    }
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    row.met = detail::expectationMet(spec.expect, row);
    report.allMet = report.allMet && row.met;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// --- built-in scenarios ------------------------------------------------------

inline std::vector<std::string> listBuiltins() {
  return {"ex-3-4", "ex-3-5", "ex-3-6", "ex-3-7",
          "ex-4-6", "ex-4-11", "hausdorff-identity", "aw-lines"};
}

namespace detail {

inline CheckSpec check(std::string id, std::string op,
                       std::vector<std::pair<std::string, std::string>> args, Expect expect) {
  CheckSpec c;
  c.id = std::move(id);
  c.op = std::move(op);
  c.args = std::move(args);
  c.expect = expect;
  return c;
}

constexpr Expect kExpectPass{ExpectKind::Pass, 0.0, 0.0};
constexpr Expect kExpectFail{ExpectKind::Fail, 0.0, 0.0};
constexpr Expect kUnchecked{ExpectKind::Unchecked, 0.0, 0.0};

inline Expect expectValue(double lo, double hi) { return {ExpectKind::ValueInterval, lo, hi}; }

/// Rational singletons on the line cover transcendentals; cumulated dyadic
/// blocks form a totally bounded family and separate a coarse grid.
inline Scenario buildEx34() {
  Scenario s;
  s.name = "ex-3-4";
  s.space = usualLine();
  s.res.horizon = 100;
  s.probes.emplace("pi-e", scalarProbe("pi-e", {std::acos(-1.0), std::exp(1.0)}));
  s.probes.emplace("coarse-grid", gridProbe("coarse-grid", -10.0, 10.0, 0.1));
  s.families.emplace("dyadic-blocks", dyadicBlockFamily(7, 8, 128));
  s.families.emplace("interval-grids", intervalGridFamily(10, 0.05));
  s.checks = {
      check("cover-transcendentals", "weakly-bounded",
            {{"target", "pi-e"}, {"family", "dyadic-blocks"}, {"eps", "1/10"}}, kExpectPass),
      check("totally-bounded-seeded", "totally-bounded",
            {{"family", "dyadic-blocks"}, {"tests", "seeded:100"}, {"eps-grid", "1/10;1/100"}},
            kExpectPass),
      check("separates-grid", "s-separable",
            {{"family", "interval-grids"}, {"grid", "coarse-grid"}, {"eps", "1/10"}},
            kExpectPass),
  };
  return s;
}

/// Under the 0-1 metric, irrational escape points defeat interval-plus-decoy
/// members at every height: no single member, and no finite union, covers.
inline Scenario buildEx35() {
  Scenario s;
  s.name = "ex-3-5";
  s.space = zeroOneSpace();
  s.probes.emplace("escape-witnesses", escapeWitnessProbe(7));
  s.sets.emplace("third-member",
                 unionOf({interval(-3.0, 3.0),
                          finitePoints({pointScalar(3.0 + std::sqrt(3.0)),
                                        pointScalar(3.0 + 2.0 * std::sqrt(3.0))})}));
  s.families.emplace("decoy-family", escapeProneFamily(6));
  s.checks = {
      check("escape-one-member", "inclusion",
            {{"probe", "escape-witnesses"}, {"set", "third-member"}, {"eps", "1/2"}},
            kExpectFail),
      check("no-single-member-covers", "weakly-bounded",
            {{"target", "escape-witnesses"}, {"family", "decoy-family"}, {"eps", "1/2"}},
            kExpectFail),
      check("no-finite-union-covers", "totally-bounded",
            {{"family", "decoy-family"}, {"tests", "escape-witnesses"}, {"eps-grid", "1/2"}},
            kExpectFail),
  };
  return s;
}

/// Ray-or-detour plane metric: axioms on seeded triples with exact collinear
/// cases, two worked distances, and singleton convergence along the diagonal.
inline Scenario buildEx36() {
  Scenario s;
  s.name = "ex-3-6";
  s.space = frenchMetroPlane();
  s.res.horizon = 1000;
  s.sets.emplace("origin", singleton(pointVec(0.0, 0.0)));
  {
    std::vector<Point> diag;
    for (int n = 1; n <= 1000; ++n)
      diag.push_back(pointVec(1.0 / static_cast<double>(n), 1.0 / static_cast<double>(n)));
    s.sequences.emplace("diagonal-steps", singletonSeq(std::move(diag)));
  }
  s.probes.emplace("watchers",
                   makeProbe("watchers", {pointVec(1.0, 1.0), pointVec(2.0, 0.0),
                                          pointVec(0.0, 0.0)}));
  s.checks = {
      check("axioms", "metric-axioms", {{"trials", "10000"}}, kExpectPass),
      check("detour-distance", "distance",
            {{"point", "(1, 0)"}, {"set", "unit-up"}}, expectValue(2.0, 2.0)),
      check("ray-distance", "distance",
            {{"point", "(1, 1)"}, {"set", "twice-diagonal"}},
            expectValue(std::sqrt(2.0) - 1e-12, std::sqrt(2.0) + 1e-12)),
      check("diagonal-converges", "wijsman",
            {{"seq", "diagonal-steps"}, {"limit", "origin"}, {"points", "watchers"},
             {"eps", "1/100"}},
            kExpectPass),
  };
  s.sets.emplace("unit-up", singleton(pointVec(0.0, 1.0)));
  s.sets.emplace("twice-diagonal", singleton(pointVec(2.0, 2.0)));
  return s;
}

/// Sup-metric sequence space: coordinate-grid balls about zero cover bounded
/// sets supported on the sampled coordinates, and miss other coordinates by
/// a full unit.
inline Scenario buildEx37() {
  Scenario s;
  s.name = "ex-3-7";
  s.space = supSeqSpace();
  {
    std::vector<ProbeSet> balls;
    for (int n = 1; n <= 3; ++n)
      balls.push_back(supSeqGridProbe("ball-" + std::to_string(n), static_cast<double>(n),
                                      1.0 / 16.0));
    s.families.emplace("grid-balls", makeFamily("grid-balls", std::move(balls),
                                                /*increasing=*/true));
  }
  {
    auto rng = std::mt19937_64(20260822);
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i)
      pts.push_back(pointSeq({{0, uniformIn(rng, -2.0, 2.0)}, {1, uniformIn(rng, -2.0, 2.0)}}));
    s.probes.emplace("bounded-cloud", makeProbe("bounded-cloud", std::move(pts)));
  }
  s.probes.emplace("off-axis", makeProbe("off-axis", {pointSeq({{2, 1.0}})}));
  s.sets.emplace("zero", singleton(pointSeq({})));
  s.checks = {
      check("balls-cover-cloud", "weakly-bounded",
            {{"target", "bounded-cloud"}, {"family", "grid-balls"}, {"eps", "1/10"}},
            kExpectPass),
      check("cloud-totally-bounded", "totally-bounded",
            {{"family", "grid-balls"}, {"tests", "bounded-cloud"}, {"eps-grid", "1/10"}},
            kExpectPass),
      check("unsampled-coordinate-escapes", "weakly-bounded",
            {{"target", "off-axis"}, {"family", "grid-balls"}, {"eps", "1/2"}}, kExpectFail),
  };
  return s;
}

/// Tilting lines against the horizontal axis: dense singleton probes see the
/// tilt vanish, one unbounded lattice probe keeps the series distance pinned
/// at one half forever.
inline Scenario buildEx46() {
  Scenario s;
  s.name = "ex-4-6";
  s.space = euclideanPlane();
  s.res.epsilon = 1e-2;
  s.res.horizon = 10000;
  s.sets.emplace("x-axis", lineThroughOrigin(0.0));
  s.sets.emplace("first-tilt", lineThroughOrigin(1.0));
  s.sequences.emplace("tilting-lines", linesThroughOriginSeq());
  s.families.emplace("dense-singletons", rationalPairSingletons(20));
  {
    ProbeFamily withLattice = rationalPairSingletons(20);
    withLattice.members[0] =
        makeProbe("lattice", {pointVec(1.0, 0.0), pointVec(2.0, 0.0)}, PointToLine{0.0});
    withLattice.label = "lattice-then-rationals";
    s.families.emplace("lattice-family", std::move(withLattice));
  }
  s.probes.emplace("axis-segment", makeProbe("axis-segment",
                                             {pointVec(-3.0, 0.0), pointVec(-1.5, 0.0),
                                              pointVec(0.0, 0.0), pointVec(1.5, 0.0),
                                              pointVec(3.0, 0.0)}));
  s.families.emplace("segment-family",
                     makeFamily("segment-family",
                                {named(s.probes, "axis-segment", "probe", "setup")}));
  s.checks = {
      check("dense-family-converges", "dsa-convergence",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "dense-singletons"}},
            kExpectPass),
      check("lattice-family-diverges", "dsa-convergence",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "lattice-family"},
             {"eps", "1/4"}, {"horizon", "200"}},
            kExpectFail),
      check("pinned-above-half", "dsa",
            {{"family", "lattice-family"}, {"moving", "first-tilt"}, {"limit", "x-axis"}},
            expectValue(0.5, 1.0)),
      check("uniform-on-segment", "tau-sd",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "segment-family"},
             {"eps", "1/100"}},
            kExpectPass),
      check("two-sided-on-segment", "s-convergence",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "segment-family"},
             {"eps", "1/100"}},
            kExpectPass),
  };
  return s;
}

/// Growing intervals against the whole line under the 0-1 metric: the series
/// distance halves forever while the two-sided inclusion never starts.
inline Scenario buildEx411() {
  Scenario s;
  s.name = "ex-4-11";
  s.space = zeroOneSpace();
  s.res.epsilon = std::ldexp(1.0, -3);
  s.res.horizon = 20;
  s.sets.emplace("whole-line", wholeSpace());
  s.sets.emplace("third-interval", interval(-3.0, 3.0));
  s.sequences.emplace("growing-intervals", growingIntervalsSeq());
  s.families.emplace("nested-intervals", nestedIndicatorFamily(40));
  {
    const double s2 = std::sqrt(2.0);
    std::vector<double> esc;
    for (int k = 1; k <= 15; ++k) esc.push_back(static_cast<double>(k) * s2);
    s.families.emplace("escape-probe",
                       makeFamily("escape-probe", {scalarProbe("S", esc)}));
  }
  s.checks = {
      check("series-converges", "dsa-convergence",
            {{"seq", "growing-intervals"}, {"limit", "whole-line"},
             {"family", "nested-intervals"}},
            kExpectPass),
      check("two-sided-fails", "s-convergence",
            {{"seq", "growing-intervals"}, {"limit", "whole-line"}, {"family", "escape-probe"},
             {"eps", "1/2"}},
            kExpectFail),
      check("third-step-value", "dsa",
            {{"family", "nested-intervals"}, {"moving", "third-interval"},
             {"limit", "whole-line"}},
            expectValue(std::ldexp(1.0, -3) - std::ldexp(1.0, -40), std::ldexp(1.0, -3))),
      check("pointwise-on-early-members", "wijsman",
            {{"seq", "growing-intervals"}, {"limit", "whole-line"}, {"points", "early-samples"},
             {"eps", "1/2"}},
            kExpectPass),
  };
  s.probes.emplace("early-samples",
                   scalarProbe("early-samples", {-2.0, -1.0, 0.0, 1.0, 2.0}));
  return s;
}

/// Seeded finite plane spaces: the one-member complete series distance equals
/// half of min(1, Hausdorff) exactly, and the series distance satisfies the
/// metric axioms.
inline Scenario buildHausdorffIdentity() {
  Scenario s;
  s.name = "hausdorff-identity";
  s.space = euclideanPlane();
  s.checks = {
      check("identity-batch", "hausdorff-identity-batch",
            {{"pairs", "200"}, {"universe", "30"}}, kExpectPass),
      check("series-metric-axioms", "dsa-metric-axioms",
            {{"triples", "200"}, {"universe", "50"}}, kExpectPass),
  };
  return s;
}

/// Ball probes about the origin watching tilting lines: the truncated series
/// over rings decides against one half at moderate tilts and vanishes later.
inline Scenario buildAwLines() {
  Scenario s;
  s.name = "aw-lines";
  s.space = euclideanPlane();
  s.res.epsilon = 0.5;
  s.res.horizon = 20;
  s.sets.emplace("x-axis", lineThroughOrigin(0.0));
  s.sets.emplace("third-tilt", lineThroughOrigin(1.0 / 3.0));
  s.sets.emplace("hundredth-tilt", lineThroughOrigin(1.0 / 100.0));
  s.sequences.emplace("tilting-lines", linesThroughOriginSeq());
  s.families.emplace("ring-balls", ringBallFamily(8, 64));
  s.checks = {
      check("ball-series-converges", "dsa-convergence",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "ring-balls"}},
            kExpectPass),
      check("third-tilt-above-half", "aw",
            {{"family", "ring-balls"}, {"center", "(0, 0)"}, {"moving", "third-tilt"},
             {"limit", "x-axis"}},
            expectValue(0.5, 1.0)),
      check("hundredth-tilt-small", "aw",
            {{"family", "ring-balls"}, {"center", "(0, 0)"}, {"moving", "hundredth-tilt"},
             {"limit", "x-axis"}},
            expectValue(0.0, 0.1)),
      check("uniform-on-balls", "tau-sd",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "ring-balls"}},
            kExpectPass),
      check("two-sided-on-balls", "s-convergence",
            {{"seq", "tilting-lines"}, {"limit", "x-axis"}, {"family", "ring-balls"}},
            kExpectPass),
  };
  return s;
}

}  // namespace detail

/// Returns the fully bound catalog scenario; unknown names list the known ids.
inline Scenario builtinScenario(const std::string& name) {
  if (name == "ex-3-4") return detail::buildEx34();
  if (name == "ex-3-5") return detail::buildEx35();
  if (name == "ex-3-6") return detail::buildEx36();
  if (name == "ex-3-7") return detail::buildEx37();
  if (name == "ex-4-6") return detail::buildEx46();
  if (name == "ex-4-11") return detail::buildEx411();
  if (name == "hausdorff-identity") return detail::buildHausdorffIdentity();
  if (name == "aw-lines") return detail::buildAwLines();
  std::string known;
  for (const auto& id : listBuiltins()) {
    if (!known.empty()) known += ", ";
    known += id;
  }
  throw std::invalid_argument("unknown scenario '" + name + "'; known: " + known);
}

// --- mode-comparison audit ---------------------------------------------------

/// Counts violations of two cross-mode implications over a scenario's checks:
/// a passing series-distance check must pass the pointwise check at four-fold
/// eps on the first two members' samples (the slack the weights give them),
/// and a passing uniform check must pass the two-sided check at the same eps.
inline int modeComparisonViolations(const Scenario& s) {
  int violations = 0;
  for (const CheckSpec& spec : s.checks) {
    if (spec.op != "dsa-convergence" && spec.op != "tau-sd") continue;
    const double eps = detail::argNum(spec, "eps", s.res.epsilon);
    const int horizon = detail::argInt(spec, "horizon", s.res.horizon);
    const int depth = detail::argInt(spec, "depth", s.res.depth);
    const auto& seq = detail::named(s.sequences, detail::requireArg(spec, "seq"), "sequence",
                                    spec.id);
    const auto& limit = detail::named(s.sets, detail::requireArg(spec, "limit"), "set", spec.id);
    const auto& fam = detail::named(s.families, detail::requireArg(spec, "family"), "family",
                                    spec.id);
    if (spec.op == "dsa-convergence") {
      const Verdict fine = dSAConvergenceCheck(s.space, seq, limit, fam, eps, horizon, depth);
      if (fine.outcome != Outcome::Pass) continue;
      std::vector<Point> pts;
      for (std::size_t i = 0; i < fam.members.size() && i < 2; ++i)
        for (const auto& p : fam.members[i].sample) pts.push_back(p);
      const Verdict coarse = wijsmanCheck(s.space, seq, limit,
                                          makeProbe("first-two-members", pts), 4.0 * eps,
                                          horizon);
      if (coarse.outcome != Outcome::Pass) ++violations;
    } else {
      const Verdict uniform = tauSdCheck(s.space, seq, limit, fam, eps, horizon);
      if (uniform.outcome != Outcome::Pass) continue;
      const Verdict twoSided = sConvergenceCheck(s.space, seq, limit, fam, eps, horizon);
      if (twoSided.outcome != Outcome::Pass) ++violations;
    }
  }
  return violations;
}

}  // namespace setconv
