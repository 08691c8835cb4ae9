// Families of probes and the coverage predicates: cumulative normalization,
// single-member coverage, finite-union coverage over an eps grid, and
// grid separability.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "setconv/enumerate.hpp"
#include "setconv/family.hpp"

using namespace setconv;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

bool sameSamples(const ProbeSet& a, const ProbeSet& b) {
  return a.label == b.label && a.sample == b.sample && a.exhaustive == b.exhaustive;
}

bool sameFamily(const ProbeFamily& a, const ProbeFamily& b) {
  if (a.label != b.label || a.increasing != b.increasing || a.complete != b.complete ||
      a.members.size() != b.members.size())
    return false;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (!sameSamples(a.members[i], b.members[i])) return false;
  return true;
}

// Singleton blocks over the dyadic enumeration: member k holds the next
// `blockSize` dyadics; cumulated they form finite rational sets.
ProbeFamily dyadicBlocks(int maxLevel, int range, std::size_t blockSize) {
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

// Escape-prone family under the 0-1 metric: member n samples a half-integer
// grid on [-n, n], the irrational escape points of height <= n, and decoys
// above n.  Coverage under the 0-1 metric is exact sample membership, so the
// escape point of height n+1 eludes member n.
ProbeFamily escapeProneFamily(int count) {
  std::vector<ProbeSet> members;
  for (int n = 1; n <= count; ++n) {
    std::vector<double> pts;
    for (int k = -2 * n; k <= 2 * n; ++k) pts.push_back(static_cast<double>(k) / 2.0);
    for (int m = 1; m <= n; ++m) {
      pts.push_back(static_cast<double>(m) + kSqrt2 / 2.0);
      pts.push_back(-(static_cast<double>(m) + kSqrt2 / 2.0));
    }
    for (int m = 1; m <= 4; ++m) pts.push_back(static_cast<double>(n) + m * kSqrt3);
    members.push_back(scalarProbe("B" + std::to_string(n), pts));
  }
  return makeFamily("intervals-with-decoys", std::move(members), /*increasing=*/false);
}

ProbeSet escapeWitnesses(int count) {
  std::vector<double> pts;
  for (int m = 1; m <= count; ++m) {
    pts.push_back(static_cast<double>(m) + kSqrt2 / 2.0);
    pts.push_back(-(static_cast<double>(m) + kSqrt2 / 2.0));
  }
  return scalarProbe("escape-witnesses", pts);
}

}  // namespace

TEST_CASE("cumulative normalization unions the prefix") {
  const ProbeFamily F = makeFamily(
      "singletons", {scalarProbe("s1", {0.0}), scalarProbe("s2", {1.0}), scalarProbe("s3", {2.0})});
  const ProbeFamily N = normalizeIncreasing(F);
  REQUIRE(N.increasing);
  REQUIRE(N.members.size() == 3);
  REQUIRE(N.members[0].sample == std::vector<Point>{pointScalar(0.0)});
  REQUIRE(N.members[1].sample == std::vector<Point>{pointScalar(0.0), pointScalar(1.0)});
  REQUIRE(N.members[2].sample ==
          std::vector<Point>{pointScalar(0.0), pointScalar(1.0), pointScalar(2.0)});
}

TEST_CASE("normalization is idempotent and drops exact duplicates") {
  const ProbeFamily F = makeFamily(
      "dup", {scalarProbe("a", {0.0, 1.0}), scalarProbe("b", {1.0, 2.0})});
  const ProbeFamily once = normalizeIncreasing(F);
  REQUIRE(once.members[1].sample ==
          std::vector<Point>{pointScalar(0.0), pointScalar(1.0), pointScalar(2.0)});
  REQUIRE(sameFamily(once, normalizeIncreasing(once)));
}

TEST_CASE("normalization keeps an oracle only when it absorbs the prefix") {
  // Nested indicator intervals: each tag still describes the cumulative set.
  const ProbeFamily nested = makeFamily(
      "nested", {gridProbe("i1", -1, 1, 0.5, DiscreteIndicator{-1, 1}),
                 gridProbe("i2", -2, 2, 0.5, DiscreteIndicator{-2, 2})});
  const ProbeFamily nn = normalizeIncreasing(nested);
  REQUIRE(std::holds_alternative<DiscreteIndicator>(nn.members[1].oracle));

  // Disjoint intervals: the second tag would misdescribe the union, so it
  // is dropped and the member falls back to its sample.
  const ProbeFamily disjoint = makeFamily(
      "disjoint", {gridProbe("i1", -2, -1, 0.5, DiscreteIndicator{-2, -1}),
                   gridProbe("i2", 1, 2, 0.5, DiscreteIndicator{1, 2})});
  const ProbeFamily dn = normalizeIncreasing(disjoint);
  REQUIRE(std::holds_alternative<NoOracle>(dn.members[1].oracle));
}

TEST_CASE("single-member coverage: transcendental pair against rational singletons") {
  const auto line = usualLine();
  const ProbeFamily F = dyadicBlocks(6, 8, 64);
  const ProbeSet A = scalarProbe("pi-e", {3.141592653589793, 2.718281828459045});
  const Verdict v = weaklySTotallyBounded(line, A, F, 0.1);
  REQUIRE(v.outcome == Outcome::Pass);
  REQUIRE(v.passIndex.has_value());
  // The first few cumulated blocks only hold coarse dyadics; coverage at 0.1
  // needs level-4 spacing, so the covering member is past the first.
  REQUIRE(*v.passIndex > 1);
}

TEST_CASE("single-member coverage: a member covers itself at every eps") {
  const auto line = usualLine();
  const ProbeFamily F = dyadicBlocks(3, 4, 32);
  const ProbeSet A = makeProbe("self", F.members[2].sample);
  const Verdict v = weaklySTotallyBounded(line, A, F, 1e-9);
  REQUIRE(v.outcome == Outcome::Pass);
  REQUIRE(*v.passIndex == 3);
}

TEST_CASE("single-member coverage fails with one witness per member") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = escapeProneFamily(6);
  const ProbeSet B = escapeWitnesses(7);
  const Verdict v = weaklySTotallyBounded(zo, B, F, 0.5);
  REQUIRE(v.outcome == Outcome::Fail);
  REQUIRE(v.perMember.size() == F.members.size());
  for (std::size_t i = 0; i < v.perMember.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    REQUIRE(v.perMember[i].index == n);
    REQUIRE(v.perMember[i].value == 1.0);
    // Member n holds the escape points up to height n, so the first point of
    // B it misses is the one of height n + 1 — the witness escapes upward.
    REQUIRE(scalarOf(*v.perMember[i].point) == static_cast<double>(n + 1) + kSqrt2 / 2.0);
  }
}

TEST_CASE("finite-union coverage passes for cumulated rational singletons") {
  const auto line = usualLine();
  const ProbeFamily F = dyadicBlocks(7, 8, 128);
  std::mt19937_64 rng(31);
  std::vector<ProbeSet> testSets;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> pts;
    const int size = uniformInt(rng, 1, 5);
    for (int j = 0; j < size; ++j) pts.push_back(uniformIn(rng, -5.0, 5.0));
    testSets.push_back(scalarProbe("t" + std::to_string(i), pts));
  }
  const Verdict v = totallyBoundedFamilyCheck(line, F, testSets, {0.1, 0.01});
  REQUIRE(v.outcome == Outcome::Pass);
}

TEST_CASE("finite-union coverage fails at 0.5 with an irrational witness") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = escapeProneFamily(6);
  // Heights 1..6 are swallowed by the union; height 7 escapes every member.
  const Verdict v = totallyBoundedFamilyCheck(zo, F, {escapeWitnesses(7)}, {0.5});
  REQUIRE(v.outcome == Outcome::Fail);
  REQUIRE(v.witness.has_value());
  REQUIRE(scalarOf(*v.witness->point) == 7.0 + kSqrt2 / 2.0);
  REQUIRE(*v.witness->value == 1.0);
  REQUIRE(v.resolution.epsilon == 0.5);
}

TEST_CASE("normalization never changes coverage verdicts") {
  const auto line = usualLine();
  const ProbeFamily raw =
      makeFamily("split", {scalarProbe("s1", {0.0}), scalarProbe("s2", {1.0})});
  const ProbeFamily norm = normalizeIncreasing(raw);
  const std::vector<ProbeSet> covered{scalarProbe("both", {0.05, 0.95})};
  const std::vector<ProbeSet> uncovered{scalarProbe("far", {0.05, 7.0})};
  for (const ProbeFamily* fam : {&raw, &norm}) {
    REQUIRE(totallyBoundedFamilyCheck(line, *fam, covered, {0.1}).outcome == Outcome::Pass);
    const Verdict bad = totallyBoundedFamilyCheck(line, *fam, uncovered, {0.1});
    REQUIRE(bad.outcome == Outcome::Fail);
    REQUIRE(scalarOf(*bad.witness->point) == 7.0);
  }
}

TEST_CASE("coverage verdicts are monotone in eps") {
  const auto line = usualLine();
  const ProbeFamily F = dyadicBlocks(4, 4, 32);
  const ProbeSet A = scalarProbe("pts", {0.3, -1.7, 2.2});
  double prevPassEps = -1.0;
  for (double eps : {0.04, 0.08, 0.5, 1.0}) {
    const Verdict v = weaklySTotallyBounded(line, A, F, eps);
    if (v.outcome == Outcome::Pass && prevPassEps < 0.0) prevPassEps = eps;
    if (prevPassEps > 0.0 && eps >= prevPassEps) REQUIRE(v.outcome == Outcome::Pass);
  }
  REQUIRE(prevPassEps > 0.0);  // the family does cover at some tested eps
}

TEST_CASE("grid separability: interval samples cover a coarse grid") {
  const auto line = usualLine();
  std::vector<ProbeSet> members;
  for (int n = 1; n <= 10; ++n)
    members.push_back(gridProbe("I" + std::to_string(n), -n, n, 0.01));
  const ProbeFamily F = makeFamily("growing-intervals", std::move(members), /*increasing=*/true);
  const ProbeSet grid = gridProbe("grid", -10, 10, 0.1);
  REQUIRE(sSeparableCheck(line, F, grid, 0.1).outcome == Outcome::Pass);
}

TEST_CASE("grid separability fails with the uncovered point as witness") {
  const auto line = usualLine();
  const ProbeFamily F = makeFamily("small", {gridProbe("I1", -1, 1, 0.01)});
  const ProbeSet grid = gridProbe("grid", -2, 2, 0.5);
  const Verdict v = sSeparableCheck(line, F, grid, 0.1);
  REQUIRE(v.outcome == Outcome::Fail);
  REQUIRE(scalarOf(*v.witness->point) == -2.0);
  REQUIRE(*v.witness->value == 1.0);
}

TEST_CASE("grid separability under the 0-1 metric is exact membership in the samples") {
  const auto zo = zeroOneSpace();
  const ProbeFamily F = escapeProneFamily(5);
  std::vector<double> ints;
  for (int k = -5; k <= 5; ++k) ints.push_back(static_cast<double>(k));
  REQUIRE(sSeparableCheck(zo, F, scalarProbe("ints", ints), 0.5).outcome == Outcome::Pass);
  const Verdict v = sSeparableCheck(zo, F, scalarProbe("off", {0.25}), 0.5);
  REQUIRE(v.outcome == Outcome::Fail);
}
