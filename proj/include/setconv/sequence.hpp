#pragma once

// Index-parameterized sequences of closed sets, n = 1, 2, 3, ...

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "setconv/closed_set.hpp"

namespace setconv {

/// A_n = [-n, n] on the line.
struct GrowingIntervals {};

/// A_n = the line y = x/n in the plane.
struct LinesThroughOrigin {};

/// A_n = the first min(n, size) points of a fixed enumeration.
struct DensePrefix {
  std::vector<Point> points;
};

/// A_n = { points[n-1] }; defined for n up to the list's length.
struct SingletonSeq {
  std::vector<Point> points;
};

struct ConstantSet {
  ClosedSet set;
};

using SetSequenceRule =
    std::variant<GrowingIntervals, LinesThroughOrigin, DensePrefix, SingletonSeq, ConstantSet>;

struct SetSequence {
  std::string label;
  SetSequenceRule rule;
};

inline SetSequence growingIntervalsSeq(std::string label = "growing-intervals") {
  return {std::move(label), GrowingIntervals{}};
}
inline SetSequence linesThroughOriginSeq(std::string label = "lines-through-origin") {
  return {std::move(label), LinesThroughOrigin{}};
}
inline SetSequence densePrefixSeq(std::vector<Point> pts, std::string label = "dense-prefix") {
  if (pts.empty()) throw std::invalid_argument("densePrefixSeq: empty enumeration");
  return {std::move(label), DensePrefix{std::move(pts)}};
}
inline SetSequence singletonSeq(std::vector<Point> pts, std::string label = "singleton-seq") {
  if (pts.empty()) throw std::invalid_argument("singletonSeq: empty point list");
  return {std::move(label), SingletonSeq{std::move(pts)}};
}
inline SetSequence constantSeq(ClosedSet s, std::string label = "constant") {
  return {std::move(label), ConstantSet{std::move(s)}};
}

/// The n-th set, n >= 1.  Total for every rule except SingletonSeq, which is
/// defined up to its list length.
inline ClosedSet sequenceAt(const SetSequence& seq, int n) {
  if (n < 1) throw std::invalid_argument("sequenceAt: index must be >= 1");
  return std::visit(
      [&](const auto& rule) -> ClosedSet {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, GrowingIntervals>) {
          return interval(-static_cast<double>(n), static_cast<double>(n));
        } else if constexpr (std::is_same_v<T, LinesThroughOrigin>) {
          return lineThroughOrigin(1.0 / static_cast<double>(n));
        } else if constexpr (std::is_same_v<T, DensePrefix>) {
          const std::size_t take =
              std::min(static_cast<std::size_t>(n), rule.points.size());
          return finitePoints(
              std::vector<Point>(rule.points.begin(), rule.points.begin() + static_cast<long>(take)));
        } else if constexpr (std::is_same_v<T, SingletonSeq>) {
          if (static_cast<std::size_t>(n) > rule.points.size())
            throw std::invalid_argument("sequenceAt: singleton sequence has only " +
                                        std::to_string(rule.points.size()) + " entries");
          return singleton(rule.points[static_cast<std::size_t>(n - 1)]);
        } else {
          return rule.set;
        }
      },
      seq.rule);
}

/// Largest index the sequence is defined for, bounded by the given horizon.
inline int sequenceHorizon(const SetSequence& seq, int horizon) {
  if (const auto* s = std::get_if<SingletonSeq>(&seq.rule))
    return std::min(horizon, static_cast<int>(s->points.size()));
  return horizon;
}

}  // namespace setconv
