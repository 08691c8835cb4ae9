// Uniform deviation over a probe, the entourage test, Hausdorff distance,
// and the weighted-series set distance with certified truncation intervals.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "setconv/enumerate.hpp"
#include "setconv/hyperdist.hpp"

using namespace setconv;

namespace {

// Nested indicator intervals [-m, m] for m = 1..count under the 0-1 metric;
// the oracle decides every sup exactly, so samples stay tiny.
ProbeFamily nestedIndicatorFamily(int count) {
  std::vector<ProbeSet> members;
  for (int m = 1; m <= count; ++m) {
    const double mm = static_cast<double>(m);
    members.push_back(scalarProbe("S" + std::to_string(m), {-mm, 0.0, mm},
                                  DiscreteIndicator{-mm, mm}));
  }
  return makeFamily("nested-intervals", std::move(members), /*increasing=*/true);
}

// Countable dense-probe family: singletons over the rational-pair enumeration.
ProbeFamily rationalSingletonFamily(int count) {
  const std::vector<Point> pairs = rationalPairEnumeration(static_cast<std::size_t>(count));
  std::vector<ProbeSet> members;
  for (int i = 0; i < count; ++i)
    members.push_back(makeProbe("q" + std::to_string(i + 1), {pairs[static_cast<std::size_t>(i)]},
                                NoOracle{}, /*exhaustive=*/true));
  return makeFamily("rational-singletons", std::move(members));
}

// Same members but the first probe stands for the horizontal unit lattice
// {(k, 0) : k >= 1}, declared through its closed-form oracle.
ProbeFamily latticeFirstFamily(int count) {
  ProbeFamily F = rationalSingletonFamily(count);
  F.members[0] = makeProbe("lattice", {pointVec(1.0, 0.0), pointVec(2.0, 0.0)},
                           PointToLine{0.0});
  F.label = "lattice-then-rationals";
  return F;
}

// Ball probes about the origin in the plane: member i samples a ring of
// radius i*(1 - 1/64), strictly inside the open ball of radius i.
ProbeFamily ringBallFamily(int count, int angleSteps) {
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
  return makeFamily("origin-balls", std::move(members), /*increasing=*/false);
}

double ringRadius(int i) { return static_cast<double>(i) * (1.0 - 1.0 / 64.0); }

}  // namespace

TEST_CASE("uniform deviation: worked values and cap saturation") {
  const auto line = usualLine();
  const ProbeSet P = scalarProbe("P", {0.0, 1.0, 2.0}, NoOracle{}, true);
  const ClosedSet A = finitePoints({pointScalar(0.0)});
  const ClosedSet C = finitePoints({pointScalar(0.0), pointScalar(1.0), pointScalar(2.0)});
  REQUIRE(uniformDeviation(line, P, A, C) == 2.0);
  REQUIRE(uniformDeviation(line, P, A, C, 1.5) == 1.5);   // saturated exactly at the cap
  REQUIRE(uniformDeviation(line, P, A, C, 100.0) == 2.0);  // cap beyond the sup is inert
  REQUIRE(uniformDeviation(line, P, A, A) == 0.0);
  REQUIRE_THROWS_AS(uniformDeviation(line, P, A, C, 0.0), std::invalid_argument);
}

TEST_CASE("uniform deviation: lattice oracle yields infinity uncapped, cap exactly") {
  const auto plane = euclideanPlane();
  const ProbeSet lat = makeProbe("lat", {pointVec(1.0, 0.0)}, PointToLine{0.0});
  const ClosedSet tilted = lineThroughOrigin(1.0 / 3.0);
  const ClosedSet flat = lineThroughOrigin(0.0);
  REQUIRE(std::isinf(uniformDeviation(plane, lat, tilted, flat)));
  REQUIRE(uniformDeviation(plane, lat, tilted, flat, 1.0) == 1.0);
  REQUIRE(uniformDeviation(plane, lat, flat, flat, 1.0) == 0.0);
}

TEST_CASE("entourage test is strict inclusion below eps") {
  const auto line = usualLine();
  const ProbeSet P = gridProbe("P", -2.0, 2.0, 0.25);
  const ClosedSet A = interval(0.0, 1.0);
  const ClosedSet C = interval(0.0, 1.05);
  REQUIRE(entourageTest(line, P, A, C, 0.1));
  REQUIRE_FALSE(entourageTest(line, P, A, C, 0.05));  // deviation 0.05 is not < 0.05
  REQUIRE_FALSE(entourageTest(line, P, A, C, 0.04));
}

TEST_CASE("Hausdorff distance on the line agrees with a brute-force grid") {
  const auto line = usualLine();
  const ProbeSet grid = gridProbe("grid", -12.0, 12.0, 0.25);
  const ClosedSet a0 = finitePoints({pointScalar(0.0)});
  const ClosedSet a1 = finitePoints({pointScalar(1.0)});
  REQUIRE(hausdorffDistance(line, a0, a1, grid) == 1.0);

  const ClosedSet pair = finitePoints({pointScalar(0.0), pointScalar(10.0)});
  REQUIRE(hausdorffDistance(line, pair, a0, grid) == 10.0);

  // Independent maximization over the same grid.
  double brute = 0.0;
  for (const auto& x : grid.sample)
    brute = std::max(brute,
                     std::abs(distanceToSet(line, x, pair) - distanceToSet(line, x, a0)));
  REQUIRE(hausdorffDistance(line, pair, a0, grid) == brute);
}

TEST_CASE("series distance over one complete whole-space probe halves min(1, Hausdorff)") {
  const auto plane = euclideanPlane();
  std::mt19937_64 rng(4501);
  for (int trial = 0; trial < 200; ++trial) {
    // Half the trials are shrunk so the Hausdorff distance dips below 1.
    const double scale = (trial % 2 == 0) ? 1.0 : 0.1;
    auto draw = [&](int count) {
      std::vector<Point> pts;
      for (int i = 0; i < count; ++i)
        pts.push_back(pointVec(scale * uniformIn(rng, -3.0, 3.0),
                               scale * uniformIn(rng, -3.0, 3.0)));
      return pts;
    };
    const std::vector<Point> aPts = draw(uniformInt(rng, 1, 6));
    const std::vector<Point> cPts = draw(uniformInt(rng, 1, 6));
    std::vector<Point> universe = aPts;
    universe.insert(universe.end(), cPts.begin(), cPts.end());
    for (const auto& p : draw(10)) universe.push_back(p);

    const ClosedSet A = finitePoints(aPts);
    const ClosedSet C = finitePoints(cPts);
    const ProbeSet U = makeProbe("universe", universe, NoOracle{}, true);
    const ProbeFamily F = makeFamily("whole-space", {U}, true, /*complete=*/true);

    const IntervalValue v = dSA(plane, F, A, C, 3);
    const double h = hausdorffDistance(plane, A, C, U);
    REQUIRE(v.lo == 0.5 * std::min(1.0, h));  // bitwise: identical evaluation path
    REQUIRE(v.hi == v.lo);                    // complete family, no tail
    REQUIRE(v.cert == Certification::Exact);
  }
}

TEST_CASE("series distance of a set against itself is the pure tail") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = nestedIndicatorFamily(40);
  const ClosedSet A = interval(-3.0, 3.0);
  const IntervalValue v = dSA(zo, F, A, A, 40);
  REQUIRE(v.lo == 0.0);
  REQUIRE(v.hi == std::ldexp(1.0, -40));
  REQUIRE(v.cert == Certification::Exact);
  REQUIRE_THROWS_AS(dSA(zo, F, A, A, 0), std::invalid_argument);
}

TEST_CASE("series distance between growing intervals and the whole line is exactly dyadic") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = nestedIndicatorFamily(40);
  const ClosedSet whole = wholeSpace();
  for (int n : {1, 2, 3, 5, 10, 20, 39}) {
    const IntervalValue v = dSA(zo, F, interval(-n, n), whole, 40);
    // Terms vanish up to index n and saturate to 1 after it, so the
    // truncation encloses the true value 2^-n with dyadic endpoints.
    REQUIRE(v.lo == std::ldexp(1.0, -n) - std::ldexp(1.0, -40));
    REQUIRE(v.hi == std::ldexp(1.0, -n));
    REQUIRE(v.cert == Certification::Exact);
    REQUIRE(contains(v, std::ldexp(1.0, -n)));
  }
  // Once every member is swallowed by the moving set the evaluated part is 0.
  for (int n : {40, 45}) {
    const IntervalValue v = dSA(zo, F, interval(-n, n), whole, 40);
    REQUIRE(v.lo == 0.0);
    REQUIRE(v.hi == std::ldexp(1.0, -40));
  }
}

TEST_CASE("series distance enclosures tighten monotonically with depth") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = nestedIndicatorFamily(40);
  const ClosedSet A = interval(-3.0, 3.0);
  const ClosedSet whole = wholeSpace();
  IntervalValue prev = dSA(zo, F, A, whole, 1);
  for (int depth = 2; depth <= 12; ++depth) {
    const IntervalValue cur = dSA(zo, F, A, whole, depth);
    REQUIRE(cur.lo >= prev.lo);
    REQUIRE(cur.hi <= prev.hi);
    REQUIRE(cur.lo <= cur.hi);
    prev = cur;
  }
}

TEST_CASE("certification downgrades to lower-only for plain sampled probes") {
  const auto line = usualLine();
  const ProbeFamily F =
      makeFamily("sampled", {scalarProbe("s", {0.0, 1.0})});  // neither oracle nor exhaustive
  const IntervalValue v = dSA(line, F, finitePoints({pointScalar(0.0)}),
                              finitePoints({pointScalar(0.25)}), 10);
  REQUIRE(v.cert == Certification::LowerOnly);
}

TEST_CASE("tilting lines: dense singleton family lets the series distance vanish") {
  const auto plane = euclideanPlane();
  const ProbeFamily A1 = rationalSingletonFamily(20);
  const ClosedSet flat = lineThroughOrigin(0.0);
  auto at = [&](int n) {
    return dSA(plane, A1, lineThroughOrigin(1.0 / static_cast<double>(n)), flat, 40);
  };
  REQUIRE(compareAgainst(at(1), 1e-2) == Cmp3::DefinitelyGreaterEqual);
  REQUIRE(compareAgainst(at(2000), 1e-2) == Cmp3::DefinitelyLess);
  REQUIRE(at(2000).cert == Certification::Exact);
}

TEST_CASE("tilting lines: an unbounded probe pins the series distance above one half") {
  const auto plane = euclideanPlane();
  const ProbeFamily A2 = latticeFirstFamily(20);
  const ClosedSet flat = lineThroughOrigin(0.0);
  for (int n : {1, 10, 100, 10000}) {
    const IntervalValue v = dSA(plane, A2, lineThroughOrigin(1.0 / static_cast<double>(n)),
                                flat, 40);
    // The first term saturates: the lattice climbs the tilted line without bound.
    REQUIRE(v.lo >= 0.5);
    REQUIRE(v.cert == Certification::Exact);
  }
}

TEST_CASE("ball-series distance validates its samples against the open balls") {
  const auto line = usualLine();
  const ProbeFamily bad =
      makeFamily("bad-balls", {scalarProbe("b1", {0.0, 1.0})});  // 1.0 not inside radius 1
  REQUIRE_THROWS_WITH(
      awDistance(line, pointScalar(0.0), finitePoints({pointScalar(0.0)}),
                 finitePoints({pointScalar(0.0)}), 10, bad),
      Catch::Matchers::ContainsSubstring("outside the open ball"));
}

TEST_CASE("ball-series distance between unit-separated singletons saturates every term") {
  const auto line = usualLine();
  std::vector<ProbeSet> members;
  for (int i = 1; i <= 10; ++i)
    members.push_back(gridProbe("ball" + std::to_string(i), -(i - 0.5), i - 0.5, 0.5));
  const ProbeFamily balls = makeFamily("line-balls", std::move(members));
  const IntervalValue v = awDistance(line, pointScalar(0.0), finitePoints({pointScalar(0.0)}),
                                     finitePoints({pointScalar(1.0)}), 40, balls);
  REQUIRE(v.lo == 1.0 - std::ldexp(1.0, -10));
  REQUIRE(v.hi == 1.0);

  const ClosedSet same = finitePoints({pointScalar(0.0)});
  const IntervalValue z = awDistance(line, pointScalar(0.0), same, same, 40, balls);
  REQUIRE(z.lo == 0.0);
  REQUIRE(z.hi == std::ldexp(1.0, -10));
}

TEST_CASE("ball-series distance between tilting lines matches the ring closed form") {
  const auto plane = euclideanPlane();
  const ProbeFamily balls = ringBallFamily(8, 64);
  const ClosedSet flat = lineThroughOrigin(0.0);
  auto tilted = [](int n) { return lineThroughOrigin(1.0 / static_cast<double>(n)); };

  // Per-ring sup: the deviation of the two line distances over a ring of
  // radius rho peaks on the horizontal axis at rho / sqrt(n^2 + 1).
  for (int n : {2, 3, 5, 10}) {
    for (int i = 1; i <= 8; ++i) {
      const double expected = ringRadius(i) / std::sqrt(static_cast<double>(n) * n + 1.0);
      const double got = uniformDeviation(plane, balls.members[static_cast<std::size_t>(i - 1)],
                                          tilted(n), flat);
      REQUIRE(got == Catch::Approx(expected).margin(1e-12));
    }
  }

  auto aw = [&](int n) { return awDistance(plane, pointVec(0.0, 0.0), tilted(n), flat, 40, balls); };
  for (int n = 1; n <= 6; ++n) REQUIRE(aw(n + 1).lo < aw(n).lo);  // strictly finer tilts
  REQUIRE(compareAgainst(aw(3), 0.5) == Cmp3::DefinitelyGreaterEqual);
  REQUIRE(compareAgainst(aw(4), 0.5) == Cmp3::DefinitelyLess);
}

TEST_CASE("three-way comparison of enclosures against a threshold") {
  REQUIRE(compareAgainst({0.3, 0.4, Certification::Exact}, 0.5) == Cmp3::DefinitelyLess);
  REQUIRE(compareAgainst({0.5, 0.6, Certification::Exact}, 0.5) ==
          Cmp3::DefinitelyGreaterEqual);
  REQUIRE(compareAgainst({0.4, 0.6, Certification::Exact}, 0.5) == Cmp3::UndecidedAtDepth);
  REQUIRE(contains({0.25, 0.5, Certification::Exact}, 0.25));
  REQUIRE(contains({0.25, 0.5, Certification::Exact}, 0.5));
  REQUIRE_FALSE(contains({0.25, 0.5, Certification::Exact}, 0.75));
  REQUIRE(std::string(certificationName(Certification::Exact)) == "exact");
  REQUIRE(std::string(certificationName(Certification::LowerOnly)) == "lower-only");
}
