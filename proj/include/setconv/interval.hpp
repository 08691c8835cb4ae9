#pragma once

// Certified enclosures for series values truncated at a finite depth.

#include <stdexcept>

namespace setconv {

enum class Certification { Exact, LowerOnly };

inline const char* certificationName(Certification c) {
  return c == Certification::Exact ? "exact" : "lower-only";
}

/// [lo, hi] encloses the true value when certification is Exact; with
/// LowerOnly certification lo is still a true lower bound but hi only bounds
/// the tail of the evaluated terms, not what sampling may have missed.
struct IntervalValue {
  double lo{0.0};
  double hi{0.0};
  Certification cert{Certification::Exact};
};

enum class Cmp3 { DefinitelyLess, DefinitelyGreaterEqual, UndecidedAtDepth };

/// Three-way comparison of an enclosure against a threshold: decided only
/// when the whole interval sits on one side.
inline Cmp3 compareAgainst(const IntervalValue& v, double eps) {
  if (v.hi < eps) return Cmp3::DefinitelyLess;
  if (v.lo >= eps) return Cmp3::DefinitelyGreaterEqual;
  return Cmp3::UndecidedAtDepth;
}

inline bool contains(const IntervalValue& v, double value) {
  return v.lo <= value && value <= v.hi;
}

}  // namespace setconv
