#include <gtest/gtest.h>

#include "belyi/belyi.hpp"
#include "oracles.hpp"

using namespace belyi;

namespace {

CombinatorialType T(int d, int a, int b, int c) { return CombinatorialType::validate(d, a, b, c); }

FpPoly fp(const std::vector<long>& ascending, std::uint64_t p) {
  std::vector<Fp> v;
  for (long c : ascending) v.emplace_back(static_cast<std::int64_t>(c), p);
  return FpPoly(std::move(v));
}

FpMap monomial_map(std::size_t d, std::uint64_t p) {
  return FpMap::polynomial(FpPoly::monomial(Fp(1, p), d));
}

std::vector<QPoint> pts(std::initializer_list<BigRational> xs, bool with_inf) {
  std::vector<QPoint> out;
  for (const auto& x : xs) out.emplace_back(x);
  std::sort(out.begin(), out.end());
  if (with_inf) out.push_back(QPoint::infinity());
  return out;
}

std::vector<QPoint> sorted(std::vector<QPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Reduce a rational point mod p as a vertex label: p stands for infinity.
std::uint64_t reduce_point(const QPoint& x, std::uint64_t p) {
  if (x.is_infinity()) return p;
  const BigInteger den = x.value().get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) return p;
  const std::uint64_t num = Fp(x.value().get_num(), p).value();
  const std::uint64_t inv = Fp(den, p).inverse().value();
  return num * inv % p;
}

// Successor by Horner evaluation of the reduced parts in plain modular
// arithmetic.
std::uint64_t naive_successor(const FpMap& fbar, std::uint64_t x, std::uint64_t p) {
  auto ev = [&](const FpPoly& q, std::uint64_t t) {
    std::uint64_t acc = 0;
    for (std::size_t i = q.size(); i-- > 0;) acc = (acc * t + q[i].value()) % p;
    return acc;
  };
  const FpPoly& n = fbar.numerator();
  const FpPoly& d = fbar.denominator();
  if (x == p) {
    if (n.deg() > d.deg()) return p;
    if (n.deg() < d.deg()) return 0;
    return n.lead().value() * Fp(static_cast<std::int64_t>(d.lead().value()), p).inverse().value() % p;
  }
  const std::uint64_t dv = ev(d, x);
  if (dv == 0) return p;
  return ev(n, x) * Fp(static_cast<std::int64_t>(dv), p).inverse().value() % p;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reduction

TEST(Reduction, TableRowExamples) {
  ReductionReport r = reduce_mod_p(build(T(15, 13, 3, 15)), Prime(2));
  EXPECT_EQ(render(r.fbar.numerator()), "x^15+x^14+x^13");
  EXPECT_EQ(r.classification, ReductionClass::GoodSeparable);

  r = reduce_mod_p(build(T(15, 14, 2, 15)), Prime(2));
  EXPECT_EQ(render(r.fbar.numerator()), "x^14");
  EXPECT_EQ(r.deg_bar, 14U);
  EXPECT_EQ(r.classification, ReductionClass::Bad);
}

TEST(Reduction, GeneralMapMayBecomeConstant) {
  const ZPoly n({BigInteger(0), BigInteger(0), BigInteger(1), BigInteger(0), BigInteger(2)});
  const ZPoly d({BigInteger(2), BigInteger(0), BigInteger(1)});
  const ReductionReport r = reduce_mod_p(ZMap(n, d), Prime(2));
  EXPECT_TRUE(r.fbar.is_constant());
  EXPECT_EQ(r.fbar.numerator(), r.fbar.denominator());
  EXPECT_EQ(r.classification, ReductionClass::Bad);
  EXPECT_EQ(r.base.delta, 2U);
  EXPECT_EQ(r.base.eps1, 2U);
}

TEST(Reduction, RejectsCompositeModulus) {
  EXPECT_THROW(reduce_mod_p(build(T(3, 2, 2, 3)), Prime(4)), InvalidInput);
}

TEST(Reduction, SeparabilityExamples) {
  EXPECT_FALSE(is_separable(monomial_map(15, 3)));
  EXPECT_TRUE(is_separable(FpMap::polynomial(fp({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1}, 2))));
  std::vector<long> c(16, 0);
  c[15] = 2;
  c[12] = 2;
  EXPECT_FALSE(is_separable(FpMap::polynomial(fp(c, 3))));
}

TEST(Reduction, FrobeniusExamples) {
  FrobeniusDecomposition fd = frobenius_decompose(monomial_map(15, 3));
  EXPECT_EQ(fd.n, 1U);
  EXPECT_EQ(fd.separable_part, monomial_map(5, 3));
  fd = frobenius_decompose(monomial_map(15, 5));
  EXPECT_EQ(fd.n, 1U);
  EXPECT_EQ(fd.separable_part, monomial_map(3, 5));
  const FpMap sep = FpMap::polynomial(fp({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1}, 2));
  fd = frobenius_decompose(sep);
  EXPECT_EQ(fd.n, 0U);
  EXPECT_EQ(fd.separable_part, sep);
}

TEST(Reduction, GeneralizedRamificationExamples) {
  EXPECT_EQ(generalized_ramification(monomial_map(15, 3)), (GeneralizedRamification{15, 3, 15, 1}));
  EXPECT_EQ(generalized_ramification(monomial_map(7, 3)), (GeneralizedRamification{7, 1, 7, 0}));
  // 2x^15 + 2x^12 over F_3 is (2x^5 + 2x^4) o x^3. The separable part has
  // indices (4, 2, 5), so the generalized ones are three times that.
  std::vector<long> c(16, 0);
  c[15] = 2;
  c[12] = 2;
  const FpMap psi = FpMap::polynomial(fp(c, 3));
  EXPECT_EQ(generalized_ramification(psi), (GeneralizedRamification{12, 6, 15, 1}));
  // The middle index by hand: 2x^5+2x^4-1 has a double root at 1 mod 3.
  const FpPoly sep = fp({-1, 0, 0, 0, 2, 2}, 3);
  EXPECT_EQ(ord_at(sep, Fp(1, 3)), 2U);

  EXPECT_THROW(generalized_ramification(FpMap::polynomial(fp({1, 1}, 5))), NotBelyiNormalized);
}

TEST(Reduction, SCpMembershipExamples) {
  // x^p with d > p and all e_i < p.
  EXPECT_TRUE(in_s_cp(monomial_map(11, 11), T(13, 9, 9, 9)));
  EXPECT_TRUE(in_s_cp(monomial_map(7, 7), T(10, 7, 7, 7)));
  EXPECT_FALSE(in_s_cp(monomial_map(2, 3), T(15, 13, 3, 15)));
}

TEST(Reduction, PredictMonomialExamples) {
  EXPECT_TRUE(predict_monomial(T(15, 13, 3, 15), Prime(3)));
  EXPECT_TRUE(predict_monomial(T(15, 13, 3, 15), Prime(5)));
  EXPECT_FALSE(predict_monomial(T(15, 9, 7, 15), Prime(2)));
}

TEST(Reduction, CensusSmallCases) {
  const auto rows = census({T(3, 2, 2, 3)}, {3}, 1);
  ASSERT_EQ(rows.size(), 1U);
  ASSERT_TRUE(rows[0].report);
  EXPECT_EQ(render(rows[0].report->fbar.numerator()), "x^3");
  EXPECT_EQ(rows[0].report->classification, ReductionClass::GoodInseparable);
  EXPECT_TRUE(rows[0].predicted_monomial);

  const auto skipped = census({T(7, 4, 5, 6)}, {7}, 1);
  ASSERT_EQ(skipped.size(), 1U);
  EXPECT_FALSE(skipped[0].report);
  EXPECT_NE(skipped[0].skipped_reason.find("no closed form"), std::string::npos);
}

TEST(Reduction, CensusIsDeterministicAcrossThreadCounts) {
  const auto jobs = table_15_jobs();
  const auto a = census(jobs, 1);
  const auto b = census(jobs, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ctype, b[i].ctype);
    EXPECT_EQ(a[i].p, b[i].p);
    EXPECT_EQ(a[i].report->fbar, b[i].report->fbar);
  }
}

// ---------------------------------------------------------------------------
// Functional graphs and multipliers

TEST(Graph, MonomialExamples) {
  FunctionalGraph g = functional_graph(monomial_map(35, 5));
  ASSERT_EQ(g.size(), 6U);
  EXPECT_NE(std::find(g.cycles.begin(), g.cycles.end(), std::vector<std::size_t>{2, 3}), g.cycles.end());
  for (std::size_t v : {0U, 1U, 4U, 5U}) EXPECT_EQ(g.successor[v], v);

  g = functional_graph(monomial_map(35, 7));
  EXPECT_NE(std::find(g.cycles.begin(), g.cycles.end(), std::vector<std::size_t>{2, 4}), g.cycles.end());

  g = functional_graph(monomial_map(6, 2));
  EXPECT_EQ(g.cycles.size(), 3U);
  for (const auto& c : g.cycles) EXPECT_EQ(c.size(), 1U);
}

TEST(Graph, SuccessorAgreesWithEvaluation) {
  for (int d = 3; d <= 12; ++d) {
    for (const auto& t : enumerate_ordered_types(d)) {
      if (classify_type(t).family == TypeFamily::GeneralUnsupported) continue;
      const BelyiMap f = build_exact(t);
      for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
        const ReductionReport r = reduce_mod_p(f, Prime(p));
        const FunctionalGraph g = functional_graph(r.fbar);
        for (std::size_t v = 0; v < g.size(); ++v) {
          EXPECT_EQ(g.vertex(eval_map(r.fbar, g.point(v))), g.successor[v]);
          EXPECT_EQ(naive_successor(r.fbar, v, p), g.successor[v]);
        }
        // Tail depths: following the successor that many steps lands on a cycle.
        std::set<std::size_t> on_cycle;
        for (const auto& c : g.cycles) on_cycle.insert(c.begin(), c.end());
        for (std::size_t v = 0; v < g.size(); ++v) {
          std::size_t u = v;
          for (std::size_t s = 0; s < g.tail_depth[v]; ++s) {
            EXPECT_EQ(on_cycle.count(u), 0U);
            u = g.successor[u];
          }
          EXPECT_EQ(on_cycle.count(u), 1U);
        }
      }
    }
  }
}

TEST(Multiplier, Examples) {
  FpMap f = monomial_map(15, 3);
  FunctionalGraph g = functional_graph(f);
  EXPECT_TRUE(cycle_multiplier(f, g, {2}).is_zero());

  f = monomial_map(35, 5);
  g = functional_graph(f);
  EXPECT_TRUE(cycle_multiplier(f, g, {2, 3}).is_zero());

  f = monomial_map(3, 5);
  g = functional_graph(f);
  // Chain rule by hand: 3 * 1^2.
  EXPECT_EQ(cycle_multiplier(f, g, {1}).value(), 3U);
  EXPECT_EQ(multiplier_order(cycle_multiplier(f, g, {1})), std::optional<std::uint64_t>(4));
  EXPECT_FALSE(multiplier_order(Fp(0, 5)).has_value());
}

TEST(Multiplier, IndependentOfCycleRepresentative) {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    for (const auto& t : {T(5, 3, 5, 3), T(7, 4, 4, 7), T(9, 5, 5, 9), T(7, 5, 5, 5), T(6, 3, 6, 4)}) {
      const BelyiMap f = build_exact(t);
      const ReductionReport r = reduce_mod_p(f, Prime(p));
      const FunctionalGraph g = functional_graph(r.fbar);
      for (const auto& c : g.cycles) {
        const Fp base = cycle_multiplier(r.fbar, g, c);
        auto rot = c;
        for (std::size_t i = 1; i < c.size(); ++i) {
          std::rotate(rot.begin(), rot.begin() + 1, rot.end());
          EXPECT_EQ(cycle_multiplier(r.fbar, g, rot), base);
        }
      }
    }
  }
}

// Local derivative at affine points against the quotient rule with plain
// modular arithmetic.
TEST(Multiplier, LocalDerivativeMatchesQuotientRule) {
  const std::uint64_t p = 13;
  const FpMap f = reduce_mod_p(build_symmetric(7, 2), Prime(p)).fbar;
  const FpPoly& n = f.numerator();
  const FpPoly& d = f.denominator();
  for (std::uint64_t x = 0; x < p; ++x) {
    const Fp fx(static_cast<std::int64_t>(x), p);
    if (d(fx).is_zero()) continue;
    Fp dn(0, p), dd(0, p);
    for (std::size_t i = 1; i < n.size(); ++i) {
      dn += n[i] * Fp(static_cast<std::int64_t>(i), p) * fx.pow(i - 1);
    }
    for (std::size_t i = 1; i < d.size(); ++i) {
      dd += d[i] * Fp(static_cast<std::int64_t>(i), p) * fx.pow(i - 1);
    }
    const Fp expected = (dn * d(fx) - n(fx) * dd) / (d(fx) * d(fx));
    EXPECT_EQ(local_derivative(f, ProjPoint<Fp>(fx)), expected) << x;
  }
}

TEST(Periods, AllowedPeriodExamples) {
  // Monomial reduction mod 2: every cycle fixed and critical.
  AllowedPeriods a = allowed_periods(build(T(4, 3, 2, 4)), Prime(2));
  EXPECT_EQ(a.all.finite, (std::set<std::uint64_t>{1}));
  EXPECT_TRUE(a.all.tails.empty());

  // x^35 over F_5 contains a 2-cycle.
  a = allowed_periods(build(T(35, 34, 2, 35)), Prime(5));
  EXPECT_TRUE(a.all.contains(2));

  EXPECT_THROW(allowed_periods(build(T(15, 14, 2, 15)), Prime(2)), HypothesisUnmet);
}

TEST(Periods, SetOperations) {
  PeriodSet a;
  a.finite = {1, 2};
  a.tails.insert({4, 5});
  EXPECT_TRUE(a.contains(20));
  EXPECT_TRUE(a.contains(100));
  EXPECT_FALSE(a.contains(12));
  PeriodSet b;
  b.finite = {2, 20};
  const PeriodSet c = a.intersect(b);
  EXPECT_EQ(c.finite, (std::set<std::uint64_t>{2, 20}));
  EXPECT_TRUE(c.tails.empty());
}

// ---------------------------------------------------------------------------
// Rational dynamics

TEST(RationalDynamics, FixedPointExamples) {
  EXPECT_EQ(sorted(rational_fixed_points(build(T(3, 2, 2, 3)))),
            pts({0, BigRational(1, 2), 1}, true));
  EXPECT_EQ(sorted(rational_fixed_points(build(T(4, 3, 2, 4)))), pts({0, 1}, true));
  EXPECT_EQ(sorted(rational_fixed_points(build(T(8, 5, 4, 8)))), pts({0, 1}, true));
}

TEST(RationalDynamics, PreimageExamples) {
  const BelyiMap f3 = build(T(3, 2, 2, 3));
  EXPECT_EQ(sorted(rational_preimages(f3, QPoint(BigRational(0)))), pts({0, BigRational(3, 2)}, false));
  EXPECT_EQ(sorted(rational_preimages(f3, QPoint(BigRational(1)))), pts({1, BigRational(-1, 2)}, false));
  EXPECT_EQ(sorted(rational_preimages(f3, QPoint::infinity())), pts({}, true));
  const BelyiMap f4 = build(T(4, 3, 2, 4));
  EXPECT_EQ(sorted(rational_preimages(f4, QPoint(BigRational(1)))), pts({1}, false));
}

TEST(RationalDynamics, PreperiodicExamples) {
  PreperReport r = preperiodic_set(build(T(3, 2, 2, 3)));
  EXPECT_EQ(r.preperiodic,
            pts({0, 1, BigRational(3, 2), BigRational(1, 2), BigRational(-1, 2)}, true));
  EXPECT_TRUE(r.rigorous);
  r = preperiodic_set(build(T(4, 3, 2, 4)));
  EXPECT_EQ(r.preperiodic, pts({0, 1, BigRational(4, 3)}, true));
  r = preperiodic_set(build(T(9, 8, 2, 9)));
  EXPECT_EQ(r.preperiodic, pts({0, 1, BigRational(9, 8)}, true));
}

TEST(RationalDynamics, HypothesisGate) {
  const BelyiMap f = build(T(35, 34, 2, 35));
  EXPECT_TRUE(preperiodic_hypotheses(f.ctype).empty());
  EXPECT_THROW(preperiodic_set(f), HypothesisUnmet);
  PreperOptions o;
  o.override_hypothesis = true;
  const PreperReport r = preperiodic_set(f, o);
  EXPECT_FALSE(r.rigorous);
  EXPECT_EQ(r.preperiodic, pts({0, 1, BigRational(35, 34)}, true));
}

TEST(RationalDynamics, LevelCapIsEnforced) {
  PreperOptions o;
  o.level_cap = 1;
  EXPECT_THROW(preperiodic_set(build(T(3, 2, 2, 3)), o), InternalInconsistency);
}

// Forward closure, and every member reaches a fixed point within |set| steps.
TEST(RationalDynamics, PreperiodicSetIsForwardClosed) {
  for (const auto& t : {T(3, 2, 2, 3), T(4, 3, 2, 4), T(6, 5, 2, 6), T(8, 5, 4, 8), T(9, 7, 3, 9), T(5, 3, 5, 3)}) {
    PreperOptions o;
    o.override_hypothesis = true;
    const BelyiMap f = build_exact(t);
    const PreperReport r = preperiodic_set(f, o);
    const std::set<QPoint> members(r.preperiodic.begin(), r.preperiodic.end());
    const std::set<QPoint> fixed(r.fixed_points.begin(), r.fixed_points.end());
    for (const auto& s : r.preperiodic) {
      EXPECT_EQ(members.count(eval_map(f.map, s)), 1U);
      QPoint x = s;
      bool reached = false;
      for (std::size_t i = 0; i <= members.size() && !reached; ++i) {
        reached = fixed.count(x) != 0;
        x = eval_map(f.map, x);
      }
      EXPECT_TRUE(reached);
    }
    for (const auto& [a, b] : r.edges) {
      EXPECT_EQ(eval_map(f.map, r.preperiodic[a]), r.preperiodic[b]);
    }
  }
}

// Rational fixed points reduce to fixed points at every good prime p <= 20.
TEST(RationalDynamics, FixedPointsReduceToFixedPoints) {
  for (int d = 3; d <= 12; ++d) {
    for (const auto& t : enumerate_ordered_types(d)) {
      if (classify_type(t).family == TypeFamily::GeneralUnsupported) continue;
      const BelyiMap f = build_exact(t);
      const auto fixed = rational_fixed_points(f);
      for (std::uint64_t p : primes_up_to(20)) {
        const ReductionReport r = reduce_mod_p(f, Prime(p));
        if (r.classification == ReductionClass::Bad) continue;
        const FunctionalGraph g = functional_graph(r.fbar);
        for (const auto& x : fixed) {
          const std::uint64_t v = reduce_point(x, p);
          EXPECT_EQ(g.successor[v], v) << t.to_string() << " p=" << p;
        }
      }
    }
  }
}

TEST(RationalDynamics, FiberSignExamples) {
  FiberSignAnalysis a = fiber_sign_analysis(build(T(3, 2, 2, 3)));
  EXPECT_EQ(a.parity_case, 4);
  EXPECT_EQ(a.beta, std::optional<BigRational>(BigRational(-1, 2)));
  EXPECT_EQ(a.gamma, std::optional<BigRational>(BigRational(3, 2)));
  EXPECT_TRUE(a.consistent);
  EXPECT_TRUE(a.divisibility_ok);

  a = fiber_sign_analysis(build(T(5, 3, 3, 5)));
  EXPECT_EQ(a.parity_case, 2);
  EXPECT_FALSE(a.beta);
  EXPECT_FALSE(a.gamma);
  EXPECT_EQ(a.zero_fiber, (std::vector<BigRational>{0}));
  EXPECT_EQ(a.one_fiber, (std::vector<BigRational>{1}));

  a = fiber_sign_analysis(build(T(4, 3, 2, 4)));
  EXPECT_EQ(a.parity_case, 3);
  EXPECT_EQ(a.gamma, std::optional<BigRational>(BigRational(4, 3)));

  EXPECT_THROW(fiber_sign_analysis(build(T(5, 3, 5, 3))), InvalidInput);
}

TEST(RationalDynamics, FiberSignConsistentAcrossFamily) {
  for (int d = 3; d <= 30; ++d) {
    for (int k = 1; k <= d - 2; ++k) {
      const FiberSignAnalysis a = fiber_sign_analysis(build_polynomial(d, k));
      EXPECT_TRUE(a.consistent) << d << "," << k;
      EXPECT_TRUE(a.divisibility_ok) << d << "," << k;
    }
  }
}
