#pragma once

// Deterministic text rendering for numbers and points.  Shortest round-trip
// formatting via to_chars keeps reports byte-identical for a given seed.

#include <charconv>
#include <cmath>
#include <string>

#include "setconv/core.hpp"

namespace setconv {

inline std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string formatPoint(const Point& p) {
  if (const auto* s = std::get_if<RealScalar>(&p)) return formatDouble(s->value);
  if (const auto* v = std::get_if<RealVector>(&p)) {
    std::string out = "(";
    for (std::size_t i = 0; i < v->coords.size(); ++i) {
      if (i) out += ",";
      out += formatDouble(v->coords[i]);
    }
    return out + ")";
  }
  const auto& seq = std::get<FiniteSupportSeq>(p);
  std::string out = "seq{";
  bool first = true;
  for (const auto& [idx, val] : seq.entries) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(idx) + ":" + formatDouble(val);
  }
  return out + "}";
}

}  // namespace setconv
