#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "belyi/construction.hpp"
#include "belyi/reduction.hpp"

namespace belyi {

// ---------------------------------------------------------------------------
// Dynamics over F_p

// Largest prime whose projective line we are willing to tabulate.
inline constexpr std::uint64_t kMaxGraphPrime = 10'000'019;

// P^1(F_p) as vertices 0..p-1 plus p for infinity.
struct FunctionalGraph {
  std::uint64_t p = 0;
  std::vector<std::size_t> successor;
  // Each cycle starts at its smallest vertex; cycles sorted.
  std::vector<std::vector<std::size_t>> cycles;
  // Steps to reach a cycle; 0 on cycles.
  std::vector<std::size_t> tail_depth;

  std::size_t infinity() const noexcept { return static_cast<std::size_t>(p); }
  std::size_t size() const noexcept { return successor.size(); }

  ProjPoint<Fp> point(std::size_t v) const {
    if (v == infinity()) return ProjPoint<Fp>::infinity();
    return ProjPoint<Fp>(Fp::from_canonical(v, p));
  }

  std::size_t vertex(const ProjPoint<Fp>& x) const {
    return x.is_infinity() ? infinity() : static_cast<std::size_t>(x.value().value());
  }

  std::string label(std::size_t v) const { return v == infinity() ? "inf" : std::to_string(v); }
};

inline std::uint64_t field_modulus(const FpMap& f) { return f.denominator().lead().modulus(); }

inline FunctionalGraph functional_graph(const FpMap& f) {
  FunctionalGraph g;
  g.p = field_modulus(f);
  if (g.p > kMaxGraphPrime) throw InvalidInput("functional_graph: prime too large to tabulate");
  const std::size_t n = g.p + 1;
  g.successor.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.successor[v] = g.vertex(eval_map(f, g.point(v)));

  // Walk from every unvisited vertex; a walk that closes on itself found a cycle.
  std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<bool> on_cycle(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t v = s;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = g.successor[v];
    }
    if (state[v] == 1) {
      std::vector<std::size_t> cycle;
      for (std::size_t u = v;;) {
        cycle.push_back(u);
        on_cycle[u] = true;
        u = g.successor[u];
        if (u == v) break;
      }
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      g.cycles.push_back(std::move(cycle));
    }
    for (auto u : walk) state[u] = 2;
  }
  std::sort(g.cycles.begin(), g.cycles.end());

  g.tail_depth.assign(n, 0);
  std::vector<bool> known(on_cycle);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> path;
    std::size_t v = s;
    while (!known[v]) {
      path.push_back(v);
      v = g.successor[v];
    }
    for (std::size_t i = path.size(); i-- > 0;) {
      g.tail_depth[path[i]] = g.tail_depth[g.successor[path[i]]] + 1;
      known[path[i]] = true;
    }
  }
  return g;
}

// Derivative of f at x in the charts t -> x (affine) or t -> 1/t (infinity)
// on both sides.
inline Fp local_derivative(const FpMap& f, const ProjPoint<Fp>& x) {
  const std::uint64_t p = field_modulus(f);
  const Fp zero(0, p);
  const Fp one(1, p);
  const FpMap reciprocal = mobius(zero, one, one, zero);
  FpMap h = f;
  if (x.is_infinity()) h = compose(h, reciprocal);
  if (eval_map(f, x).is_infinity()) h = compose(reciprocal, h);
  const Fp t = x.is_infinity() ? zero : x.value();
  const Fp den = h.denominator()(t);
  return wronskian(h.numerator(), h.denominator())(t) / (den * den);
}

// Product of local derivatives around the cycle (chain rule).
inline Fp cycle_multiplier(const FpMap& f, const FunctionalGraph& g, const std::vector<std::size_t>& cycle) {
  if (cycle.empty()) throw InvalidInput("cycle_multiplier: empty cycle");
  Fp lambda(1, g.p);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t v = cycle[i];
    if (g.successor[v] != cycle[(i + 1) % cycle.size()]) throw InvalidInput("not a cycle of this graph");
    lambda *= local_derivative(f, g.point(v));
  }
  return lambda;
}

// Multiplicative order of lambda in F_p^*; nullopt stands for infinity (lambda = 0).
inline std::optional<std::uint64_t> multiplier_order(const Fp& lambda) {
  if (lambda.is_zero()) return std::nullopt;
  const std::uint64_t p = lambda.modulus();
  for (const auto& d : divisors(BigInteger(static_cast<unsigned long>(p - 1)))) {
    const std::uint64_t r = d.get_ui();
    if (lambda.pow(r).value() == 1) return r;
  }
  throw InternalInconsistency("multiplier order not found");
}

struct CycleData {
  std::vector<std::size_t> cycle;
  std::size_t length = 0;
  Fp multiplier;
  std::optional<std::uint64_t> order;  // nullopt = infinite
};

// Exact periods n as an explicit finite set plus families {base * prime^e : e >= 1}.
struct PeriodSet {
  struct Tail {
    std::uint64_t base;
    std::uint64_t prime;
    friend auto operator<=>(const Tail&, const Tail&) = default;
  };

  std::set<std::uint64_t> finite;
  std::set<Tail> tails;

  bool contains(std::uint64_t n) const {
    if (finite.count(n) != 0) return true;
    for (const auto& t : tails) {
      if (n <= t.base || n % t.base != 0) continue;
      std::uint64_t q = n / t.base;
      while (q % t.prime == 0) q /= t.prime;
      if (q == 1) return true;
    }
    return false;
  }

  void unite(const PeriodSet& o) {
    finite.insert(o.finite.begin(), o.finite.end());
    tails.insert(o.tails.begin(), o.tails.end());
  }

  // Finite members are kept when the other set admits them. A tail survives
  // only when the other side has a tail too; we do not decide whether two
  // infinite families meet.
  PeriodSet intersect(const PeriodSet& o) const {
    PeriodSet r;
    for (auto n : finite) {
      if (o.contains(n)) r.finite.insert(n);
    }
    for (auto n : o.finite) {
      if (contains(n)) r.finite.insert(n);
    }
    if (!o.tails.empty()) r.tails.insert(tails.begin(), tails.end());
    if (!tails.empty()) r.tails.insert(o.tails.begin(), o.tails.end());
    return r;
  }
};

struct AllowedPeriods {
  std::uint64_t p = 0;
  std::vector<CycleData> cycles;
  std::vector<PeriodSet> per_cycle;
  PeriodSet all;
};

inline std::vector<CycleData> cycle_data(const FpMap& f, const FunctionalGraph& g) {
  std::vector<CycleData> out;
  for (const auto& c : g.cycles) {
    const Fp lambda = cycle_multiplier(f, g, c);
    out.push_back({c, c.size(), lambda, multiplier_order(lambda)});
  }
  return out;
}

// Exact periods a rational periodic point may have given the cycle its
// reduction lands on: m, m r, or m r p^e.
inline PeriodSet periods_for_cycle(const CycleData& c, std::uint64_t p) {
  PeriodSet s;
  s.finite.insert(c.length);
  if (c.order) {
    const std::uint64_t mr = c.length * *c.order;
    s.finite.insert(mr);
    s.tails.insert({mr, p});
  }
  return s;
}

inline AllowedPeriods allowed_periods(const BelyiMap& f, Prime p) {
  const ReductionReport r = reduce_mod_p(f, p);
  if (r.classification == ReductionClass::Bad) {
    throw HypothesisUnmet("theorem inapplicable: " + f.ctype.to_string() + " has bad reduction at " +
                          std::to_string(p.value()));
  }
  AllowedPeriods out;
  out.p = p.value();
  const FunctionalGraph g = functional_graph(r.fbar);
  out.cycles = cycle_data(r.fbar, g);
  for (const auto& c : out.cycles) {
    out.per_cycle.push_back(periods_for_cycle(c, p.value()));
    out.all.unite(out.per_cycle.back());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational dynamics

using QPoint = ProjPoint<BigRational>;

namespace detail {

inline std::vector<QPoint> affine_points(const std::vector<BigRational>& xs) {
  std::vector<QPoint> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

inline bool fixes_infinity(const BelyiMap& f) {
  return eval_map(f.map, QPoint::infinity()).is_infinity();
}

}  // namespace detail

// Roots of f(x) = x, from scale_num * N - scale_den * x * D, plus infinity.
inline std::vector<QPoint> rational_fixed_points(const BelyiMap& f,
                                                 const FactorLimits& limits = FactorLimits::from_environment()) {
  const ZPoly& n = f.integer_model.numerator();
  const ZPoly& dn = f.integer_model.denominator();
  const ZPoly x = ZPoly::monomial(BigInteger(1), 1);
  const ZPoly eq = n * BigInteger(f.scale.get_num()) - x * dn * BigInteger(f.scale.get_den());
  if (eq.is_zero()) throw InvalidInput("the identity map fixes everything");
  auto out = detail::affine_points(rational_roots(eq, limits));
  if (detail::fixes_infinity(f)) out.push_back(QPoint::infinity());
  return out;
}

// Rational x with f(x) = a.
inline std::vector<QPoint> rational_preimages(const BelyiMap& f, const QPoint& a,
                                              const FactorLimits& limits = FactorLimits::from_environment()) {
  const ZPoly& n = f.integer_model.numerator();
  const ZPoly& dn = f.integer_model.denominator();
  std::vector<QPoint> out;
  if (a.is_infinity()) {
    if (!dn.is_constant()) out = detail::affine_points(rational_roots(dn, limits));
  } else {
    // v c_num N - u c_den D for a = u / v
    const BigRational& q = a.value();
    const ZPoly eq = n * BigInteger(q.get_den() * f.scale.get_num()) -
                     dn * BigInteger(q.get_num() * f.scale.get_den());
    if (eq.is_zero()) throw InvalidInput("constant map has no finite fibres");
    out = detail::affine_points(rational_roots(eq, limits));
  }
  if (eval_map(f.map, QPoint::infinity()) == a) out.push_back(QPoint::infinity());
  return out;
}

// Which of the three hypotheses that make PrePer = fixed points and their
// preimages hold: 1 (2 | d, e2 <= 2^v2(d)), 2 (3 | d, e2 <= 3^v3(d)),
// 3 (d = q^l, e2 <= d).
inline std::vector<int> preperiodic_hypotheses(const CombinatorialType& t) {
  const auto d = static_cast<std::uint64_t>(t.degree());
  const auto e2 = static_cast<std::uint64_t>(t.e2());
  std::vector<int> cases;
  if (d % 2 == 0 && e2 <= ipow(2, valuation(d, 2))) cases.push_back(1);
  if (d % 3 == 0 && e2 <= ipow(3, valuation(d, 3))) cases.push_back(2);
  if (factorize(BigInteger(static_cast<unsigned long>(d))).size() == 1 && e2 <= d) cases.push_back(3);
  return cases;
}

struct PreperOptions {
  bool override_hypothesis = false;
  std::size_t level_cap = 64;
};

struct PreperReport {
  CombinatorialType ctype;
  std::vector<QPoint> fixed_points;
  std::vector<QPoint> preperiodic;                       // sorted, infinity last
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // x -> f(x) as indices
  std::vector<int> hypothesis_cases;
  bool rigorous = false;
  std::size_t levels = 0;
};

// Fixed points and their iterated rational preimages. Complete only when a
// hypothesis holds; with the override the closure is still computed and the
// report says it is not proven complete.
inline PreperReport preperiodic_set(const BelyiMap& f, const PreperOptions& options = {},
                                    const FactorLimits& limits = FactorLimits::from_environment()) {
  PreperReport report{f.ctype, {}, {}, {}, preperiodic_hypotheses(f.ctype), false, 0};
  report.rigorous = !report.hypothesis_cases.empty();
  if (!report.rigorous && !options.override_hypothesis) {
    throw HypothesisUnmet("no preperiodicity hypothesis holds for " + f.ctype.to_string() +
                          ": need 2 | d with e2 <= 2^v2(d), 3 | d with e2 <= 3^v3(d), or d a prime "
                          "power with e2 <= d");
  }
  report.fixed_points = rational_fixed_points(f, limits);
  std::set<QPoint> seen(report.fixed_points.begin(), report.fixed_points.end());
  std::vector<QPoint> frontier = report.fixed_points;
  while (!frontier.empty()) {
    if (report.levels >= options.level_cap) {
      throw InternalInconsistency("backward closure did not stabilize within " +
                                  std::to_string(options.level_cap) + " levels");
    }
    ++report.levels;
    std::vector<QPoint> next;
    for (const auto& a : frontier) {
      for (auto& x : rational_preimages(f, a, limits)) {
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  report.preperiodic.assign(seen.begin(), seen.end());
  auto index_of = [&](const QPoint& x) -> std::size_t {
    const auto it = std::lower_bound(report.preperiodic.begin(), report.preperiodic.end(), x);
    if (it == report.preperiodic.end() || !(*it == x)) {
      throw InternalInconsistency("preperiodic set is not forward closed");
    }
    return static_cast<std::size_t>(it - report.preperiodic.begin());
  };
  for (std::size_t i = 0; i < report.preperiodic.size(); ++i) {
    report.edges.emplace_back(i, index_of(eval_map(f.map, report.preperiodic[i])));
  }
  return report;
}

// Real fibres over 0 and 1 for the polynomial of type (d; d-k, k+1, d), read
// from the sign pattern of f' and checked against the rational preimages.
struct FiberSignAnalysis {
  int d = 0;
  int k = 0;
  // 1: d, k even. 2: d odd, k even. 3: d even, k odd. 4: d, k odd.
  int parity_case = 0;
  bool expects_beta = false;   // a real beta < 0 with f(beta) = 1
  bool expects_gamma = false;  // a real gamma > 1 with f(gamma) = 0
  std::vector<BigRational> zero_fiber;
  std::vector<BigRational> one_fiber;
  std::optional<BigRational> beta;
  std::optional<BigRational> gamma;
  BigInteger leading_binomial;  // C(d-1, k)
  // beta = -1/b and gamma = 1 + 1/c with b, c dividing C(d-1, k).
  bool divisibility_ok = true;
  // Rational fibre points lie only where the sign pattern allows real ones.
  bool consistent = true;
};

inline FiberSignAnalysis fiber_sign_analysis(const BelyiMap& f,
                                             const FactorLimits& limits = FactorLimits::from_environment()) {
  const int d = f.ctype.degree();
  if (f.ctype.e3() != d || f.ctype.e1() + f.ctype.e2() != d + 1) {
    throw InvalidInput("fiber_sign_analysis needs a type (d; d-k, k+1, d), got " + f.ctype.to_string());
  }
  FiberSignAnalysis a;
  a.d = d;
  a.k = f.ctype.e2() - 1;
  const bool d_even = d % 2 == 0;
  const bool k_even = a.k % 2 == 0;
  a.parity_case = k_even ? (d_even ? 1 : 2) : (d_even ? 3 : 4);
  a.expects_beta = a.parity_case == 1 || a.parity_case == 4;
  a.expects_gamma = a.parity_case == 3 || a.parity_case == 4;
  a.leading_binomial = binomial(d - 1, a.k);

  for (const auto& x : rational_preimages(f, QPoint(BigRational(0)), limits)) {
    if (x.is_affine()) a.zero_fiber.push_back(x.value());
  }
  for (const auto& x : rational_preimages(f, QPoint(BigRational(1)), limits)) {
    if (x.is_affine()) a.one_fiber.push_back(x.value());
  }
  for (const auto& x : a.zero_fiber) {
    if (x == 0) continue;
    if (x > 1 && a.expects_gamma && !a.gamma) {
      a.gamma = x;
    } else {
      a.consistent = false;
    }
  }
  for (const auto& x : a.one_fiber) {
    if (x == 1) continue;
    if (x < 0 && a.expects_beta && !a.beta) {
      a.beta = x;
    } else {
      a.consistent = false;
    }
  }
  auto divides_binomial = [&](const BigInteger& n) {
    return n > 0 && mpz_divisible_p(a.leading_binomial.get_mpz_t(), n.get_mpz_t()) != 0;
  };
  if (a.beta) {
    a.divisibility_ok = a.divisibility_ok && a.beta->get_num() == -1 && divides_binomial(a.beta->get_den());
  }
  if (a.gamma) {
    const BigRational frac = *a.gamma - 1;
    a.divisibility_ok = a.divisibility_ok && frac.get_num() == 1 && divides_binomial(frac.get_den());
  }
  return a;
}

}  // namespace belyi
