#pragma once

// Three-valued verdicts for semi-decidable checks.  A verdict never guesses:
// fail always carries a witness, and every verdict records the resolution
// (epsilon, horizon, depth) it was decided at.

#include <optional>
#include <string>
#include <vector>

#include "setconv/core.hpp"
#include "setconv/format.hpp"

namespace setconv {

enum class Outcome { Pass, Fail, Undecided };

inline const char* outcomeName(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    default: return "undecided";
  }
}

struct Resolution {
  double epsilon{1e-2};
  int horizon{1000};
  int depth{40};
};

struct Witness {
  std::optional<int> index;      // sequence index or family member index
  std::optional<Point> point;    // offending point, when one exists
  std::optional<double> value;   // distance / deviation at the witness
  std::string label;             // member or set label, when one applies
};

inline std::string formatWitness(const Witness& w) {
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += ";";
    out += part;
  };
  if (!w.label.empty()) add("at=" + w.label);
  if (w.index) add("n=" + std::to_string(*w.index));
  if (w.point) add("x=" + formatPoint(*w.point));
  if (w.value) add("value=" + formatDouble(*w.value));
  return out;
}

struct Verdict {
  Outcome outcome{Outcome::Pass};
  std::optional<Witness> witness;   // present whenever outcome != Pass
  Resolution resolution;
  std::optional<int> passIndex;     // first index from which the pass suffix runs
  bool sampled{false};              // true when any ingredient was a sampled lower bound
  std::vector<Witness> perMember;   // member-by-member witnesses, when the check yields them
  std::vector<Verdict> subVerdicts; // component verdicts for agreement-style checks
  std::string detail;
};

inline Verdict passVerdict(Resolution res, std::string detail = {}) {
  Verdict v;
  v.outcome = Outcome::Pass;
  v.resolution = res;
  v.detail = std::move(detail);
  return v;
}

inline Verdict failVerdict(Resolution res, Witness w, std::string detail = {}) {
  Verdict v;
  v.outcome = Outcome::Fail;
  v.resolution = res;
  v.witness = std::move(w);
  v.detail = std::move(detail);
  return v;
}

inline Verdict undecidedVerdict(Resolution res, Witness w, std::string detail = {}) {
  Verdict v;
  v.outcome = Outcome::Undecided;
  v.resolution = res;
  v.witness = std::move(w);
  v.detail = std::move(detail);
  return v;
}

}  // namespace setconv
