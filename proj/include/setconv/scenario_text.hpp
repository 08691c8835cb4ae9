#pragma once

// Text format for scenario files, plus table/CSV/JSON report emitters.
//
//   # comment
//   scenario <name>
//   space usual-line | euclidean-plane | french-metro | zero-one | sup-seq
//
//   [resolution]          epsilon / horizon / depth / grid-step / seed
//   [sets]                interval(a,b) points(...) points2((x,y),...)
//                         line-through-origin(s) whole-space axis-lattice
//                         union(N1, N2, ...)
//   [probes]              [exhaustive] grid(a,b,step) | points(...) | points2(...)
//                         indicator(a,b,step) | lattice-probe(slope)
//   [families]            [increasing] [complete] [normalized] family(P1, P2, ...)
//                         indicator-intervals(count)
//   [sequences]           growing-intervals | lines-through-origin
//                         constant(SET) | singletons(PROBE) | dense-prefix(PROBE)
//   [checks]              id: op(key=value, ...) expect pass|fail|unchecked
//                                                expect value <expr> .. <expr>
//
// Scalar positions accept arithmetic expressions (pi, e, sqrt, + - * /).

#include <fstream>
#include <sstream>

#include "setconv/scenario.hpp"

#include "json.hpp"

namespace setconv {

namespace detail {

/// Splits on commas that sit outside any parentheses.
inline std::vector<std::string> splitTopLevel(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trimCopy(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trimCopy(cur).empty() || !out.empty()) out.push_back(trimCopy(cur));
  return out;
}

struct SpecCall {
  std::string head;                // identifier before '(' (or the whole spec)
  std::vector<std::string> args;   // top-level comma-split arguments
};

inline SpecCall parseCall(const std::string& spec, int line) {
  const std::string t = trimCopy(spec);
  const std::size_t open = t.find('(');
  if (open == std::string::npos) return {t, {}};
  if (t.back() != ')')
    throw std::invalid_argument("line " + std::to_string(line) + ": missing ')' in '" + t + "'");
  SpecCall call;
  call.head = trimCopy(t.substr(0, open));
  const std::string inner = t.substr(open + 1, t.size() - open - 2);
  if (!trimCopy(inner).empty()) call.args = splitTopLevel(inner);
  return call;
}

inline void requireArgCount(const SpecCall& call, std::size_t n, int line) {
  if (call.args.size() != n)
    throw std::invalid_argument("line " + std::to_string(line) + ": '" + call.head +
                                "' takes " + std::to_string(n) + " argument(s), got " +
                                std::to_string(call.args.size()));
}

inline GroundSpace spaceById(const std::string& id, int line) {
  if (id == "usual-line") return usualLine();
  if (id == "euclidean-plane") return euclideanPlane();
  if (id == "french-metro") return frenchMetroPlane();
  if (id == "zero-one") return zeroOneSpace();
  if (id == "sup-seq") return supSeqSpace();
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown space '" + id +
                              "' (usual-line, euclidean-plane, french-metro, zero-one, sup-seq)");
}

inline std::vector<Point> pointsFromArgs(const std::vector<std::string>& args, bool plane) {
  std::vector<Point> pts;
  pts.reserve(args.size());
  for (const std::string& a : args)
    pts.push_back(plane ? parsePointLiteral(a) : pointScalar(evalExpr(a)));
  return pts;
}

inline ClosedSet parseSetSpec(const Scenario& s, const std::string& spec, int line) {
  const SpecCall call = parseCall(spec, line);
  if (call.head == "interval") {
    requireArgCount(call, 2, line);
    return interval(evalExpr(call.args[0]), evalExpr(call.args[1]));
  }
  if (call.head == "points") return finitePoints(pointsFromArgs(call.args, false));
  if (call.head == "points2") return finitePoints(pointsFromArgs(call.args, true));
  if (call.head == "line-through-origin") {
    requireArgCount(call, 1, line);
    return lineThroughOrigin(evalExpr(call.args[0]));
  }
  if (call.head == "whole-space") return wholeSpace();
  if (call.head == "axis-lattice") return axisLattice();
  if (call.head == "union") {
    std::vector<ClosedSet> parts;
    for (const std::string& name : call.args)
      parts.push_back(named(s.sets, name, "set", "union on line " + std::to_string(line)));
    return unionOf(std::move(parts));
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown set form '" +
                              call.head + "'");
}

inline ProbeSet parseProbeSpec(const std::string& name, std::string spec, int line) {
  bool exhaustive = false;
  std::string t = trimCopy(spec);
  if (t.rfind("exhaustive ", 0) == 0) {
    exhaustive = true;
    t = trimCopy(t.substr(11));
  }
  const SpecCall call = parseCall(t, line);
  if (call.head == "grid") {
    requireArgCount(call, 3, line);
    ProbeSet p = gridProbe(name, evalExpr(call.args[0]), evalExpr(call.args[1]),
                           evalExpr(call.args[2]));
    p.exhaustive = exhaustive;
    return p;
  }
  if (call.head == "points")
    return makeProbe(name, pointsFromArgs(call.args, false), NoOracle{}, exhaustive);
  if (call.head == "points2")
    return makeProbe(name, pointsFromArgs(call.args, true), NoOracle{}, exhaustive);
  if (call.head == "indicator") {
    requireArgCount(call, 3, line);
    const double lo = evalExpr(call.args[0]);
    const double hi = evalExpr(call.args[1]);
    return gridProbe(name, lo, hi, evalExpr(call.args[2]), DiscreteIndicator{lo, hi});
  }
  if (call.head == "lattice-probe") {
    requireArgCount(call, 1, line);
    return makeProbe(name, {pointVec(1.0, 0.0), pointVec(2.0, 0.0)},
                     PointToLine{evalExpr(call.args[0])}, exhaustive);
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown probe form '" +
                              call.head + "'");
}

inline ProbeFamily parseFamilySpec(const Scenario& s, const std::string& name, std::string spec,
                                   int line) {
  bool increasing = false, complete = false, normalized = false;
  std::string t = trimCopy(spec);
  for (;;) {
    if (t.rfind("increasing ", 0) == 0) {
      increasing = true;
      t = trimCopy(t.substr(11));
    } else if (t.rfind("complete ", 0) == 0) {
      complete = true;
      t = trimCopy(t.substr(9));
    } else if (t.rfind("normalized ", 0) == 0) {
      normalized = true;
      t = trimCopy(t.substr(11));
    } else {
      break;
    }
  }
  const SpecCall call = parseCall(t, line);
  if (call.head == "family") {
    std::vector<ProbeSet> members;
    for (const std::string& m : call.args)
      members.push_back(named(s.probes, m, "probe", "family on line " + std::to_string(line)));
    ProbeFamily f = makeFamily(name, std::move(members), increasing, complete);
    return normalized ? normalizeIncreasing(f) : f;
  }
  if (call.head == "indicator-intervals") {
    requireArgCount(call, 1, line);
    ProbeFamily f = nestedIndicatorFamily(static_cast<int>(evalExpr(call.args[0])));
    f.label = name;
    f.complete = complete;
    return f;
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown family form '" +
                              call.head + "'");
}

inline SetSequence parseSequenceSpec(const Scenario& s, const std::string& spec, int line) {
  const SpecCall call = parseCall(spec, line);
  if (call.head == "growing-intervals") return growingIntervalsSeq();
  if (call.head == "lines-through-origin") return linesThroughOriginSeq();
  if (call.head == "constant") {
    requireArgCount(call, 1, line);
    return constantSeq(named(s.sets, call.args[0], "set",
                             "sequence on line " + std::to_string(line)));
  }
  if (call.head == "singletons" || call.head == "dense-prefix") {
    requireArgCount(call, 1, line);
    const ProbeSet& p = named(s.probes, call.args[0], "probe",
                              "sequence on line " + std::to_string(line));
    return call.head == "singletons" ? singletonSeq(p.sample) : densePrefixSeq(p.sample);
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown sequence form '" +
                              call.head + "'");
}

inline CheckSpec parseCheckLine(const std::string& body, const std::string& id, int line) {
  const std::size_t expectAt = body.rfind(" expect ");
  if (expectAt == std::string::npos)
    throw std::invalid_argument("line " + std::to_string(line) +
                                ": check needs an 'expect' clause");
  const std::string callText = trimCopy(body.substr(0, expectAt));
  const std::string expectText = trimCopy(body.substr(expectAt + 8));

  CheckSpec c;
  c.id = id;
  const SpecCall call = parseCall(callText, line);
  if (call.head.empty() || callText.find('(') == std::string::npos)
    throw std::invalid_argument("line " + std::to_string(line) +
                                ": check needs 'op(key=value, ...)'");
  c.op = call.head;
  for (const std::string& arg : call.args) {
    const std::size_t eq = arg.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line) + ": argument '" + arg +
                                  "' is not key=value");
    c.args.emplace_back(trimCopy(arg.substr(0, eq)), trimCopy(arg.substr(eq + 1)));
  }

  if (expectText == "pass") {
    c.expect = {ExpectKind::Pass, 0.0, 0.0};
  } else if (expectText == "fail") {
    c.expect = {ExpectKind::Fail, 0.0, 0.0};
  } else if (expectText == "unchecked") {
    c.expect = {ExpectKind::Unchecked, 0.0, 0.0};
  } else if (expectText.rfind("value ", 0) == 0) {
    const std::string range = expectText.substr(6);
    const std::size_t dots = range.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": 'expect value' needs '<lo> .. <hi>'");
    c.expect = {ExpectKind::ValueInterval, evalExpr(range.substr(0, dots)),
                evalExpr(range.substr(dots + 2))};
    if (c.expect.lo > c.expect.hi)
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": expected interval is empty");
  } else {
    throw std::invalid_argument("line " + std::to_string(line) + ": unknown expectation '" +
                                expectText + "'");
  }
  return c;
}

}  // namespace detail

inline Scenario parseScenarioText(const std::string& text) {
  Scenario s;
  s.name = "scenario";
  std::string section;
  bool sawSpace = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    const std::string t = detail::trimCopy(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (t.empty()) continue;

    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::invalid_argument("line " + std::to_string(line) + ": missing ']'");
      section = detail::trimCopy(t.substr(1, t.size() - 2));
      if (section != "resolution" && section != "sets" && section != "probes" &&
          section != "families" && section != "sequences" && section != "checks")
        throw std::invalid_argument("line " + std::to_string(line) + ": unknown section [" +
                                    section + "]");
      continue;
    }
    if (section.empty()) {
      if (t.rfind("scenario ", 0) == 0) {
        s.name = detail::trimCopy(t.substr(9));
        continue;
      }
      if (t.rfind("space ", 0) == 0) {
        s.space = detail::spaceById(detail::trimCopy(t.substr(6)), line);
        sawSpace = true;
        continue;
      }
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": expected 'scenario <name>', 'space <id>', or a [section]");
    }

    if (section == "checks") {
      const std::size_t colon = t.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("line " + std::to_string(line) +
                                    ": check needs '<id>: <op>(...) expect <tag>'");
      const std::string id = detail::trimCopy(t.substr(0, colon));
      if (id.empty())
        throw std::invalid_argument("line " + std::to_string(line) + ": empty check id");
      s.checks.push_back(detail::parseCheckLine(t.substr(colon + 1), id, line));
      continue;
    }

    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": expected '<name> = <spec>' in [" + section + "]");
    const std::string name = detail::trimCopy(t.substr(0, eq));
    const std::string spec = detail::trimCopy(t.substr(eq + 1));
    if (name.empty() || spec.empty())
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": expected '<name> = <spec>' in [" + section + "]");

    if (section == "resolution") {
      if (name == "epsilon") s.res.epsilon = evalExpr(spec);
      else if (name == "horizon") s.res.horizon = static_cast<int>(evalExpr(spec));
      else if (name == "depth") s.res.depth = static_cast<int>(evalExpr(spec));
      else if (name == "grid-step") s.res.gridStep = evalExpr(spec);
      else if (name == "seed") s.res.seed = static_cast<std::uint64_t>(evalExpr(spec));
      else
        throw std::invalid_argument("line " + std::to_string(line) +
                                    ": unknown resolution key '" + name + "'");
    } else if (section == "sets") {
      s.sets.insert_or_assign(name, detail::parseSetSpec(s, spec, line));
    } else if (section == "probes") {
      s.probes.insert_or_assign(name, detail::parseProbeSpec(name, spec, line));
    } else if (section == "families") {
      s.families.insert_or_assign(name, detail::parseFamilySpec(s, name, spec, line));
    } else {
      s.sequences.insert_or_assign(name, detail::parseSequenceSpec(s, spec, line));
    }
  }
  if (!sawSpace)
    throw std::invalid_argument("scenario file must declare 'space <id>' before any section");
  return s;
}

inline Scenario parseScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseScenarioText(buf.str());
}

// --- emitters ----------------------------------------------------------------

namespace detail {

inline std::string csvField(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string boundText(const std::optional<double>& v) {
  return v ? formatDouble(*v) : std::string();
}

}  // namespace detail

inline std::string emitCsv(const Report& report) {
  std::string out = "scenario,check_id,outcome,lo,hi,witness,ms\n";
  for (const ScenarioRow& row : report.rows) {
    out += detail::csvField(report.scenario) + ',' + detail::csvField(row.checkId) + ',' +
           row.outcome + ',' + detail::boundText(row.lo) + ',' + detail::boundText(row.hi) +
           ',' + detail::csvField(row.witness) + ',' + std::to_string(row.ms) + '\n';
  }
  return out;
}

inline std::string emitTable(const Report& report) {
  const std::vector<std::string> headers{"check", "outcome", "lo", "hi", "witness", "met", "ms"};
  std::vector<std::vector<std::string>> cells;
  for (const ScenarioRow& row : report.rows)
    cells.push_back({row.checkId, row.outcome, detail::boundText(row.lo),
                     detail::boundText(row.hi), row.witness, row.met ? "yes" : "NO",
                     std::to_string(row.ms)});
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto pad = [&](const std::string& text, std::size_t c) {
    std::string out = text;
    out.resize(width[c], ' ');
    return out;
  };
  std::string out = "scenario: " + report.scenario + "\n";
  for (std::size_t c = 0; c < headers.size(); ++c)
    out += (c ? "  " : "") + pad(headers[c], c);
  out += '\n';
  for (std::size_t c = 0; c < headers.size(); ++c)
    out += (c ? "  " : "") + std::string(width[c], '-');
  out += '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < headers.size(); ++c) out += (c ? "  " : "") + pad(row[c], c);
    out += '\n';
  }
  out += report.allMet ? "all expectations met\n" : "SOME EXPECTATIONS MISSED\n";
  return out;
}

inline std::string emitJson(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  int met = 0;
  for (const ScenarioRow& row : report.rows) {
    nlohmann::json r;
    r["check_id"] = row.checkId;
    r["outcome"] = row.outcome;
    if (row.lo) r["lo"] = *row.lo;
    if (row.hi) r["hi"] = *row.hi;
    r["witness"] = row.witness;
    r["ms"] = row.ms;
    r["expectation_met"] = row.met;
    if (!row.detail.empty()) r["detail"] = row.detail;
    rows.push_back(std::move(r));
    if (row.met) ++met;
  }
  nlohmann::json doc;
  doc["scenario"] = report.scenario;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"checks", report.rows.size()},
                    {"met", met},
                    {"all_expected_met", report.allMet}};
  return doc.dump(2) + "\n";
}

}  // namespace setconv
