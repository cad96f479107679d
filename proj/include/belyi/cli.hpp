#pragma once

// The `belyi` command line. Lives in a header so tests can drive it with
// in-memory streams; tools/belyi.cpp only forwards argv.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "belyi/io.hpp"

namespace belyi::cli {

using io::json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidInput = 2,
  kUnsupported = 3,
  kHypothesisUnmet = 4,
  kIncompleteFactorization = 5,
};

namespace detail {

struct TypeArgs {
  long d = 0;
  long e1 = 0;
  long e2 = 0;
  long e3 = 0;

  CombinatorialType validated() const { return CombinatorialType::validate(d, e1, e2, e3); }
};

inline void add_type_args(CLI::App* sub, TypeArgs& t) {
  sub->add_option("d", t.d, "degree")->required();
  sub->add_option("e1", t.e1, "ramification index over 0")->required();
  sub->add_option("e2", t.e2, "ramification index over 1")->required();
  sub->add_option("e3", t.e3, "ramification index over infinity")->required();
}

inline std::string point_text(const QPoint& x) { return x.is_infinity() ? "inf" : to_string(x.value()); }

inline std::string set_text(const std::vector<QPoint>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + point_text(xs[i]);
  return s + "}";
}

inline std::string period_text(const PeriodSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto n : s.finite) {
    out += (first ? "" : ", ") + std::to_string(n);
    first = false;
  }
  for (const auto& t : s.tails) {
    out += (first ? "" : ", ") + std::to_string(t.base) + "*" + std::to_string(t.prime) + "^e (e>=1)";
    first = false;
  }
  return out + "}";
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

// "a..b" with a <= b.
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidInput("--d-range expects a..b, got '" + s + "'");
  try {
    std::size_t pa = 0;
    std::size_t pb = 0;
    const std::string a = s.substr(0, dots);
    const std::string b = s.substr(dots + 2);
    const int lo = std::stoi(a, &pa);
    const int hi = std::stoi(b, &pb);
    if (pa != a.size() || pb != b.size() || lo > hi) throw InvalidInput("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw InvalidInput("--d-range expects a..b with integers a <= b, got '" + s + "'");
  }
}

inline std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (item.empty() || pos != item.size()) throw InvalidInput("bad prime '" + item + "' in --primes");
    out.push_back(Prime(v).value());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

}  // namespace detail

// Runs one command; args exclude the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized dynamical Belyi maps: construction, reduction mod p, and rational dynamics", "belyi"};
  app.set_version_flag("--version", std::string(io::kToolVersion));
  app.require_subcommand(1);

  detail::TypeArgs targs;

  long enum_d = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list the sorted genus-0 types of degree d");
  enumerate->add_option("d", enum_d, "degree")->required();

  bool verify_details = false;
  bool conjugate_flag = false;
  auto* build_cmd = app.add_subcommand("build", "construct the normalized map of a type");
  detail::add_type_args(build_cmd, targs);
  build_cmd->add_flag("--verify", verify_details, "print every certificate check");
  build_cmd->add_flag("--conjugate", conjugate_flag, "conjugate the family map to exactly the requested type");

  std::uint64_t prime_arg = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce the map of a type modulo a prime");
  detail::add_type_args(reduce_cmd, targs);
  reduce_cmd->add_option("p", prime_arg, "prime")->required();

  bool paper_table = false;
  std::string d_range;
  std::string primes_arg = "dividing";
  bool all_orderings = false;
  unsigned threads = 0;
  auto* census_cmd = app.add_subcommand("census", "reduction table over many types and primes");
  census_cmd->add_flag("--paper-table-15", paper_table, "the d = 15 table for p = 2, 3, 5, 7");
  census_cmd->add_option("--d-range", d_range, "degrees a..b");
  census_cmd->add_option("--primes", primes_arg, "comma-separated primes, or 'dividing' for p | d");
  census_cmd->add_flag("--all-orderings", all_orderings, "every ordered type instead of sorted representatives");
  census_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  bool override_hypothesis = false;
  std::size_t level_cap = 64;
  auto* preper_cmd = app.add_subcommand("preper", "rational preperiodic points of the map of a type");
  detail::add_type_args(preper_cmd, targs);
  preper_cmd->add_flag("--override-hypothesis", override_hypothesis,
                       "compute the closure even when completeness is not guaranteed");
  preper_cmd->add_option("--level-cap", level_cap, "maximum backward-closure depth");

  auto* graph_cmd = app.add_subcommand("graph", "functional graph of the reduction on P^1(F_p)");
  detail::add_type_args(graph_cmd, targs);
  graph_cmd->add_option("p", prime_arg, "prime")->required();

  // Each subcommand gets its own --format default; only one subcommand runs.
  std::string enum_format = "plain";
  std::string build_format = "plain";
  std::string reduce_format = "plain";
  std::string census_format = "csv";
  std::string preper_format = "json";
  std::string graph_format = "plain";
  const std::vector<std::string> pj{"plain", "json"};
  bool ascending = false;
  enumerate->add_option("--format", enum_format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  build_cmd->add_option("--format", build_format, "output format")->check(CLI::IsMember(pj));
  reduce_cmd->add_option("--format", reduce_format, "output format")->check(CLI::IsMember(pj));
  census_cmd->add_option("--format", census_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  preper_cmd->add_option("--format", preper_format, "output format")->check(CLI::IsMember(pj));
  graph_cmd->add_option("--format", graph_format, "output format")->check(CLI::IsMember(pj));
  for (auto* sub : {build_cmd, reduce_cmd, census_cmd, graph_cmd}) {
    sub->add_flag("--ascending", ascending, "print polynomials in ascending exponent order");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const TermOrder order = ascending ? TermOrder::Ascending : TermOrder::Descending;
  std::vector<std::string> warnings;

  try {
    if (enumerate->parsed()) {
      if (enum_d < 3 || enum_d > kMaxDegree) {
        throw InvalidInput("degree must lie in 3.." + std::to_string(kMaxDegree) + ", got " + std::to_string(enum_d));
      }
      const auto types = enumerate_types(static_cast<int>(enum_d));
      const long n_closed = count_closed_form(enum_d);
      const long n_poly = count_polynomial(enum_d);
      const long n_nonpoly = count_nonpolynomial(enum_d);
      if (enum_format == "json") {
        json list = json::array();
        for (const auto& t : types) {
          json j = io::to_json(t);
          const auto c = classify_type(t);
          j["family"] = to_string(c.family);
          j["k"] = c.k;
          list.push_back(std::move(j));
        }
        json payload = {{"d", enum_d},
                        {"count", types.size()},
                        {"count_closed_form", n_closed},
                        {"count_polynomial", n_poly},
                        {"count_nonpolynomial", n_nonpoly},
                        {"types", std::move(list)}};
        out << io::envelope("enumerate", {{"d", enum_d}}, std::move(payload), warnings).dump(2) << '\n';
      } else if (enum_format == "csv") {
        out << "d,e1,e2,e3,family,k\n";
        for (const auto& t : types) {
          const auto c = classify_type(t);
          out << t.degree() << ',' << t.e1() << ',' << t.e2() << ',' << t.e3() << ',' << to_string(c.family)
              << ',' << c.k << '\n';
        }
      } else {
        out << "d=" << enum_d << " types=" << types.size() << " N(d)=" << n_closed << " polynomial=" << n_poly
            << " nonpolynomial=" << n_nonpoly << '\n';
        for (const auto& t : types) {
          const auto c = classify_type(t);
          out << t.to_string() << ' ' << to_string(c.family);
          if (c.family != TypeFamily::GeneralUnsupported) out << " k=" << c.k;
          out << '\n';
        }
      }
      return kOk;
    }

    if (build_cmd->parsed()) {
      const auto t = targs.validated();
      const BelyiMap m = conjugate_flag ? build_exact(t) : build(t);
      if (!(m.ctype == t)) {
        warnings.push_back("map is given for the family type " + m.ctype.to_string() +
                           "; pass --conjugate for the map of type " + t.to_string());
      }
      const Certificate cert = verify(m);
      if (build_format == "json") {
        json payload = io::to_json(m);
        payload["certificate"] = io::to_json(cert);
        json arguments = io::to_json(t);
        arguments["conjugate"] = conjugate_flag;
        out << io::envelope("build", std::move(arguments), std::move(payload), warnings).dump(2) << '\n';
      } else {
        detail::print_warnings(warnings, err);
        out << "type " << m.ctype.to_string() << '\n';
        out << "family " << to_string(m.classification.family) << " k=" << m.classification.k << '\n';
        out << "map " << render(m.map, order) << '\n';
        out << "numerator " << render(m.integer_model.numerator(), order) << '\n';
        out << "denominator " << render(m.integer_model.denominator(), order) << '\n';
        out << "certificate " << (cert.passed() ? "pass" : "fail") << '\n';
        if (verify_details || !cert.passed()) {
          for (const auto& c : cert.checks) {
            out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ')';
            out << '\n';
          }
          out << "wronskian " << render(cert.wronskian, order) << '\n';
        }
      }
      return cert.passed() ? kOk : kInternal;
    }

    if (reduce_cmd->parsed()) {
      const auto t = targs.validated();
      const Prime p(prime_arg);
      const BelyiMap m = build_exact(t);
      const ReductionReport r = reduce_mod_p(m, p);
      const bool predicted = predict_monomial(t, p);
      const auto witness = s_cp_witness(r.fbar, t);
      std::optional<GeneralizedRamification> gr;
      try {
        gr = generalized_ramification(r.fbar);
      } catch (const NotBelyiNormalized& e) {
        warnings.push_back(std::string("generalized ramification undefined: ") + e.what());
      }
      if (reduce_format == "json") {
        json payload = io::to_json(r);
        payload["type"] = io::to_json(t);
        payload["predicted_monomial"] = predicted;
        payload["generalized_ramification"] =
            gr ? json{{"e1", gr->e1}, {"e2", gr->e2}, {"e3", gr->e3}, {"n", gr->n}} : json(nullptr);
        payload["in_S_Cp"] = witness.has_value();
        payload["witness"] = witness ? json{{"eps1", witness->eps1}, {"eps2", witness->eps2}, {"delta", witness->delta}}
                                     : json(nullptr);
        json arguments = io::to_json(t);
        arguments["p"] = p.value();
        out << io::envelope("reduce", std::move(arguments), std::move(payload), warnings).dump(2) << '\n';
      } else {
        detail::print_warnings(warnings, err);
        out << "type " << t.to_string() << " p=" << p.value() << '\n';
        out << "fbar " << render(r.fbar, order) << '\n';
        out << "classification " << to_string(r.classification) << '\n';
        out << "deg_bar " << r.deg_bar << '\n';
        out << "separable " << detail::yes_no(r.separable) << '\n';
        out << "base eps1=" << r.base.eps1 << " eps2=" << r.base.eps2 << " delta=" << r.base.delta << '\n';
        out << "monomial actual=" << detail::yes_no(r.is_monomial) << " predicted=" << detail::yes_no(predicted)
            << '\n';
        if (gr) out << "generalized_ramification (" << gr->e1 << "," << gr->e2 << "," << gr->e3 << ")\n";
        out << "in_S_Cp " << detail::yes_no(witness.has_value());
        if (witness) {
          out << " witness eps1=" << witness->eps1 << " eps2=" << witness->eps2 << " delta=" << witness->delta;
        }
        out << '\n';
      }
      return kOk;
    }

    if (census_cmd->parsed()) {
      if (paper_table == !d_range.empty()) {
        throw InvalidInput("census needs exactly one of --paper-table-15 and --d-range");
      }
      std::vector<CensusJob> jobs;
      if (paper_table) {
        jobs = table_15_jobs();
      } else {
        const auto [lo, hi] = detail::parse_range(d_range);
        if (lo < 3 || hi > kMaxDegree) throw InvalidInput("--d-range must lie within 3.." + std::to_string(kMaxDegree));
        const bool dividing = primes_arg == "dividing";
        const std::vector<std::uint64_t> fixed = dividing ? std::vector<std::uint64_t>{} : detail::parse_primes(primes_arg);
        for (int d = lo; d <= hi; ++d) {
          std::vector<std::uint64_t> ps = fixed;
          if (dividing) {
            for (const auto& [q, e] : factorize(BigInteger(d))) ps.push_back(q.get_ui());
          }
          for (const auto& t : all_orderings ? enumerate_ordered_types(d) : enumerate_types(d)) {
            for (auto q : ps) jobs.push_back({t, q});
          }
        }
      }
      const auto rows = census(jobs, threads);
      for (const auto& row : rows) {
        if (!row.report) warnings.push_back(row.ctype.to_string() + " skipped: " + row.skipped_reason);
      }
      if (census_format == "json") {
        json list = json::array();
        for (const auto& row : rows) list.push_back(io::to_json(row));
        json arguments = {{"paper_table_15", paper_table},
                          {"d_range", d_range},
                          {"primes", primes_arg},
                          {"all_orderings", all_orderings}};
        out << io::envelope("census", std::move(arguments), {{"rows", std::move(list)}}, warnings).dump(2) << '\n';
      } else {
        detail::print_warnings(warnings, err);
        out << io::census_csv_header() << '\n';
        for (const auto& row : rows) out << io::census_csv_line(row, order) << '\n';
      }
      return kOk;
    }

    if (preper_cmd->parsed()) {
      const auto t = targs.validated();
      const BelyiMap m = build_exact(t);
      const PreperReport r = preperiodic_set(m, PreperOptions{override_hypothesis, level_cap});
      if (!r.rigorous) warnings.push_back("no completeness hypothesis holds; the set may be incomplete");
      if (preper_format == "json") {
        json arguments = io::to_json(t);
        arguments["override_hypothesis"] = override_hypothesis;
        arguments["level_cap"] = level_cap;
        out << io::envelope("preper", std::move(arguments), io::to_json(r), warnings).dump(2) << '\n';
      } else {
        detail::print_warnings(warnings, err);
        out << "type " << t.to_string() << '\n';
        out << "map " << render(m.map) << '\n';
        out << "fixed " << detail::set_text(r.fixed_points) << '\n';
        out << "preperiodic " << detail::set_text(r.preperiodic) << '\n';
        for (const auto& [a, b] : r.edges) {
          out << "  " << detail::point_text(r.preperiodic[a]) << " -> " << detail::point_text(r.preperiodic[b]) << '\n';
        }
        out << "rigorous " << detail::yes_no(r.rigorous) << '\n';
      }
      return kOk;
    }

    if (graph_cmd->parsed()) {
      const auto t = targs.validated();
      const Prime p(prime_arg);
      const BelyiMap m = build_exact(t);
      const ReductionReport r = reduce_mod_p(m, p);
      const bool good = r.classification != ReductionClass::Bad;
      if (!good) {
        warnings.push_back("bad reduction at " + std::to_string(p.value()) +
                           ": showing the lower-degree reduced map; period bounds do not apply");
      }
      const FunctionalGraph g = functional_graph(r.fbar);
      const auto cycles = cycle_data(r.fbar, g);
      PeriodSet allowed;
      for (const auto& c : cycles) allowed.unite(periods_for_cycle(c, p.value()));
      if (graph_format == "json") {
        json cyc = json::array();
        for (const auto& c : cycles) cyc.push_back(io::to_json(c, g));
        json payload = {{"reduction", io::to_json(r)},
                        {"graph", io::to_json(g)},
                        {"cycles", std::move(cyc)},
                        {"allowed_periods", good ? io::to_json(allowed) : json(nullptr)}};
        json arguments = io::to_json(t);
        arguments["p"] = p.value();
        out << io::envelope("graph", std::move(arguments), std::move(payload), warnings).dump(2) << '\n';
      } else {
        detail::print_warnings(warnings, err);
        out << "map " << render(r.fbar, order) << " over F_" << p.value() << " (" << to_string(r.classification)
            << ")\n";
        for (std::size_t v = 0; v < g.size(); ++v) out << g.label(v) << " -> " << g.label(g.successor[v]) << '\n';
        for (const auto& c : cycles) {
          out << "cycle (";
          for (std::size_t i = 0; i < c.cycle.size(); ++i) out << (i ? " " : "") << g.label(c.cycle[i]);
          out << ") length " << c.length << " multiplier " << c.multiplier.value() << " order "
              << (c.order ? std::to_string(*c.order) : std::string("inf")) << '\n';
        }
        if (good) out << "allowed periods " << detail::period_text(allowed) << '\n';
      }
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const HypothesisUnmet& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesisUnmet;
  } catch (const IncompleteFactorization& e) {
    err << "error: " << e.what() << '\n';
    return kIncompleteFactorization;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalidInput;
}

}  // namespace belyi::cli
