#pragma once

// JSON and CSV forms of library values, with parsers for the JSON ones.
// Exact numbers are always decimal strings; points are {"num", "den"} or "inf".

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "belyi/dynamics.hpp"
#include "belyi/reduction.hpp"
#include "belyi/render.hpp"

namespace belyi::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "belyi";
inline constexpr const char* kToolVersion = "1.0.0";

// --- scalars ---------------------------------------------------------------

inline json to_json(const BigRational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline BigInteger integer_from_json(const json& j) {
  BigInteger n;
  if (!j.is_string() || n.set_str(j.get<std::string>(), 10) != 0) {
    throw InvalidInput("expected a decimal integer string, got " + j.dump());
  }
  return n;
}

inline BigRational rational_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("expected {\"num\", \"den\"}, got " + j.dump());
  const BigInteger den = integer_from_json(j.at("den"));
  if (den == 0) throw InvalidInput("zero denominator");
  return make_rational(integer_from_json(j.at("num")), den);
}

inline json to_json(const QPoint& x) { return x.is_infinity() ? json("inf") : to_json(x.value()); }

inline QPoint point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return QPoint::infinity();
  return QPoint(rational_from_json(j));
}

inline json to_json(const CombinatorialType& t) {
  return {{"d", t.degree()}, {"e1", t.e1()}, {"e2", t.e2()}, {"e3", t.e3()}};
}

inline CombinatorialType type_from_json(const json& j) {
  return CombinatorialType::validate(j.at("d").get<long>(), j.at("e1").get<long>(), j.at("e2").get<long>(),
                                     j.at("e3").get<long>());
}

// --- polynomials and maps ---------------------------------------------------

template <class K>
json to_json(const Poly<K>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(detail::coefficient_text(c));
  return {{"coefficients", std::move(coeffs)}, {"text", render(p)}};
}

inline QPoly qpoly_from_json(const json& j) {
  std::vector<BigRational> v;
  for (const auto& c : j.at("coefficients")) v.push_back(parse_rational(c.get<std::string>()));
  return QPoly(std::move(v));
}

inline ZPoly zpoly_from_json(const json& j) {
  std::vector<BigInteger> v;
  for (const auto& c : j.at("coefficients")) v.push_back(integer_from_json(c));
  return ZPoly(std::move(v));
}

inline FpPoly fppoly_from_json(const json& j, std::uint64_t p) {
  std::vector<Fp> v;
  for (const auto& c : j.at("coefficients")) v.emplace_back(integer_from_json(c), p);
  return FpPoly(std::move(v));
}

template <class K>
json to_json(const RationalMap<K>& f) {
  return {{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}, {"text", render(f)}};
}

inline QMap qmap_from_json(const json& j) {
  return QMap(qpoly_from_json(j.at("numerator")), qpoly_from_json(j.at("denominator")));
}

inline FpMap fpmap_from_json(const json& j, std::uint64_t p) {
  return FpMap(fppoly_from_json(j.at("numerator"), p), fppoly_from_json(j.at("denominator"), p));
}

// --- construction -----------------------------------------------------------

inline json to_json(const TypeClassification& c) {
  return {{"family", to_string(c.family)},
          {"k", c.k},
          {"pattern", c.pattern},
          {"sigma", c.sigma}};
}

inline json to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
  return {{"passed", c.passed()}, {"checks", std::move(checks)}, {"wronskian", to_json(c.wronskian)}};
}

inline json to_json(const BelyiMap& m) {
  return {{"type", to_json(m.ctype)},
          {"classification", to_json(m.classification)},
          {"map", to_json(m.map)},
          {"integer_model", to_json(m.integer_model)},
          {"scale", to_json(m.scale)}};
}

inline BelyiMap belyi_map_from_json(const json& j) {
  return make_belyi_map(type_from_json(j.at("type")), qmap_from_json(j.at("map")));
}

// --- reduction --------------------------------------------------------------

inline json to_json(const ReductionReport& r) {
  return {{"p", r.p},
          {"d", r.d},
          {"fbar", to_json(r.fbar)},
          {"deg_bar", r.deg_bar},
          {"eps1", r.base.eps1},
          {"eps2", r.base.eps2},
          {"delta", r.base.delta},
          {"separable", r.separable},
          {"classification", to_string(r.classification)},
          {"is_monomial", r.is_monomial}};
}

inline ReductionClass reduction_class_from_string(const std::string& s) {
  for (auto c : {ReductionClass::GoodSeparable, ReductionClass::GoodInseparable, ReductionClass::Bad}) {
    if (s == to_string(c)) return c;
  }
  throw InvalidInput("unknown reduction class '" + s + "'");
}

inline ReductionReport reduction_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  ReductionReport r{p, j.at("d").get<std::size_t>(), fpmap_from_json(j.at("fbar"), p), 0, {}};
  r.deg_bar = j.at("deg_bar").get<std::size_t>();
  r.base = {j.at("eps1").get<std::size_t>(), j.at("eps2").get<std::size_t>(), j.at("delta").get<std::size_t>()};
  r.separable = j.at("separable").get<bool>();
  r.classification = reduction_class_from_string(j.at("classification").get<std::string>());
  r.is_monomial = j.at("is_monomial").get<bool>();
  return r;
}

inline json to_json(const CensusRow& row) {
  json j = {{"type", to_json(row.ctype)}, {"p", row.p}, {"predicted_monomial", row.predicted_monomial}};
  if (row.report) {
    j["reduction"] = to_json(*row.report);
  } else {
    j["skipped"] = row.skipped_reason;
  }
  return j;
}

inline CensusRow census_row_from_json(const json& j) {
  CensusRow row{type_from_json(j.at("type")), j.at("p").get<std::uint64_t>(),
                j.at("predicted_monomial").get<bool>(), std::nullopt, {}};
  if (j.contains("reduction")) {
    row.report = reduction_from_json(j.at("reduction"));
  } else {
    row.skipped_reason = j.at("skipped").get<std::string>();
  }
  return row;
}

inline const char* census_csv_header() {
  return "d,e1,e2,e3,p,fbar,deg_bar,eps1,eps2,delta,classification,predicted_monomial,actual_monomial";
}

inline std::string census_csv_line(const CensusRow& row, TermOrder order = TermOrder::Descending) {
  std::ostringstream os;
  const auto b = [](bool v) { return v ? "true" : "false"; };
  os << row.ctype.degree() << ',' << row.ctype.e1() << ',' << row.ctype.e2() << ',' << row.ctype.e3() << ','
     << row.p << ',';
  if (row.report) {
    const auto& r = *row.report;
    // Rational reductions contain '/' and parentheses but never commas.
    os << render(r.fbar, order) << ',' << r.deg_bar << ',' << r.base.eps1 << ',' << r.base.eps2 << ','
       << r.base.delta << ',' << to_string(r.classification) << ',' << b(row.predicted_monomial) << ','
       << b(r.is_monomial);
  } else {
    os << ",,,,,skipped," << b(row.predicted_monomial) << ',';
  }
  return os.str();
}

// --- dynamics ---------------------------------------------------------------

inline json to_json(const FunctionalGraph& g) {
  json adjacency = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    adjacency.push_back({{"vertex", g.label(v)}, {"successor", g.label(g.successor[v])}, {"tail_depth", g.tail_depth[v]}});
  }
  json cycles = json::array();
  for (const auto& c : g.cycles) {
    json labels = json::array();
    for (auto v : c) labels.push_back(g.label(v));
    cycles.push_back(std::move(labels));
  }
  return {{"p", g.p}, {"adjacency", std::move(adjacency)}, {"cycles", std::move(cycles)}};
}

inline std::size_t vertex_from_label(const std::string& s, std::uint64_t p) {
  if (s == "inf") return static_cast<std::size_t>(p);
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size() || v >= p) throw InvalidInput("bad vertex label '" + s + "'");
  return static_cast<std::size_t>(v);
}

inline FunctionalGraph graph_from_json(const json& j) {
  FunctionalGraph g;
  g.p = j.at("p").get<std::uint64_t>();
  const auto& adj = j.at("adjacency");
  g.successor.assign(adj.size(), 0);
  g.tail_depth.assign(adj.size(), 0);
  for (const auto& e : adj) {
    const std::size_t v = vertex_from_label(e.at("vertex").get<std::string>(), g.p);
    if (v >= adj.size()) throw InvalidInput("vertex out of range");
    g.successor[v] = vertex_from_label(e.at("successor").get<std::string>(), g.p);
    g.tail_depth[v] = e.at("tail_depth").get<std::size_t>();
  }
  for (const auto& c : j.at("cycles")) {
    std::vector<std::size_t> cycle;
    for (const auto& l : c) cycle.push_back(vertex_from_label(l.get<std::string>(), g.p));
    g.cycles.push_back(std::move(cycle));
  }
  return g;
}

inline json to_json(const CycleData& c, const FunctionalGraph& g) {
  json labels = json::array();
  for (auto v : c.cycle) labels.push_back(g.label(v));
  return {{"cycle", std::move(labels)},
          {"length", c.length},
          {"multiplier", c.multiplier.value()},
          {"multiplier_order", c.order ? json(*c.order) : json("inf")}};
}

inline json to_json(const PeriodSet& s) {
  json tails = json::array();
  for (const auto& t : s.tails) tails.push_back({{"base", t.base}, {"prime", t.prime}});
  return {{"finite", s.finite}, {"tails", std::move(tails)}};
}

inline PeriodSet period_set_from_json(const json& j) {
  PeriodSet s;
  for (const auto& n : j.at("finite")) s.finite.insert(n.get<std::uint64_t>());
  for (const auto& t : j.at("tails")) s.tails.insert({t.at("base").get<std::uint64_t>(), t.at("prime").get<std::uint64_t>()});
  return s;
}

inline json to_json(const PreperReport& r) {
  json fixed = json::array();
  for (const auto& x : r.fixed_points) fixed.push_back(to_json(x));
  json points = json::array();
  for (const auto& x : r.preperiodic) points.push_back(to_json(x));
  json edges = json::array();
  for (const auto& [a, b] : r.edges) edges.push_back({a, b});
  return {{"type", to_json(r.ctype)},
          {"fixed_points", std::move(fixed)},
          {"preperiodic", std::move(points)},
          {"edges", std::move(edges)},
          {"hypothesis_cases", r.hypothesis_cases},
          {"rigorous", r.rigorous},
          {"levels", r.levels}};
}

inline PreperReport preper_from_json(const json& j) {
  PreperReport r{type_from_json(j.at("type")), {}, {}, {}, {}, j.at("rigorous").get<bool>(),
                 j.at("levels").get<std::size_t>()};
  for (const auto& x : j.at("fixed_points")) r.fixed_points.push_back(point_from_json(x));
  for (const auto& x : j.at("preperiodic")) r.preperiodic.push_back(point_from_json(x));
  for (const auto& e : j.at("edges")) r.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  r.hypothesis_cases = j.at("hypothesis_cases").get<std::vector<int>>();
  return r;
}

// --- envelope ---------------------------------------------------------------

inline json envelope(const std::string& command, json arguments, json payload,
                     const std::vector<std::string>& warnings) {
  return {{"schema_version", kSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"command", command},
          {"arguments", std::move(arguments)},
          {"payload", std::move(payload)},
          {"warnings", warnings}};
}

}  // namespace belyi::io
