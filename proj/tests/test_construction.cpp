#include <gtest/gtest.h>

#include "belyi/belyi.hpp"
#include "oracles.hpp"

using namespace belyi;

namespace {

QPoly qp(std::initializer_list<long> ascending) {
  std::vector<BigRational> v;
  for (long c : ascending) v.emplace_back(c);
  return QPoly(std::move(v));
}

CombinatorialType T(int d, int a, int b, int c) { return CombinatorialType::validate(d, a, b, c); }

}  // namespace

TEST(Types, ValidateExamples) {
  EXPECT_NO_THROW(T(3, 2, 2, 3));
  EXPECT_NO_THROW(T(15, 13, 3, 15));
  try {
    T(4, 2, 2, 4);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos) << e.what();
  }
  EXPECT_THROW(T(2, 2, 2, 1), InvalidInput);
  EXPECT_THROW(T(5, 1, 5, 5), InvalidInput);
  EXPECT_THROW(T(5, 6, 3, 2), InvalidInput);
}

TEST(Types, EnumerateMatchesBruteForce) {
  for (int d = 3; d <= 60; ++d) {
    const auto types = enumerate_types(d);
    const auto expected = oracle::sorted_types(d);
    ASSERT_EQ(types.size(), expected.size()) << d;
    for (std::size_t i = 0; i < types.size(); ++i) {
      EXPECT_EQ(types[i].indices(), expected[i]) << d;
      EXPECT_EQ(types[i].degree(), d);
    }
  }
  EXPECT_EQ(enumerate_types(3).size(), 1U);
  EXPECT_EQ(enumerate_types(7).size(), 6U);
  ASSERT_EQ(enumerate_types(4).size(), 2U);
  EXPECT_EQ(enumerate_types(4)[0].indices(), (std::array<int, 3>{2, 3, 4}));
  EXPECT_EQ(enumerate_types(4)[1].indices(), (std::array<int, 3>{3, 3, 3}));
}

TEST(Types, OrderedEnumerationIsAllPermutations) {
  for (int d = 3; d <= 20; ++d) {
    std::set<std::array<int, 3>> expected;
    for (const auto& t : oracle::sorted_types(d)) {
      auto s = t;
      do {
        expected.insert(s);
      } while (std::next_permutation(s.begin(), s.end()));
    }
    std::set<std::array<int, 3>> got;
    for (const auto& t : enumerate_ordered_types(d)) got.insert(t.indices());
    EXPECT_EQ(got, expected) << d;
    EXPECT_EQ(enumerate_ordered_types(d).size(), expected.size());
  }
}

TEST(Types, CountingExamples) {
  EXPECT_EQ(count_closed_form(7), 6);
  EXPECT_EQ(count_closed_form(6), 4);
  EXPECT_EQ(count_closed_form(9), 9);
  EXPECT_EQ(count_polynomial(10), 4);
  EXPECT_EQ(count_nonpolynomial(7), 3);
  EXPECT_EQ(count_nonpolynomial(4), 1);
}

TEST(Types, ClassifyExamples) {
  auto c = classify_type(T(15, 13, 3, 15));
  EXPECT_EQ(c.family, TypeFamily::Polynomial);
  EXPECT_EQ(c.k, 2);
  EXPECT_TRUE(c.is_identity());
  c = classify_type(T(5, 3, 5, 3));
  EXPECT_EQ(c.family, TypeFamily::Symmetric);
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(classify_type(T(7, 4, 5, 6)).family, TypeFamily::GeneralUnsupported);
  // Permuted polynomial type: e3 = d sits in the wrong slot.
  c = classify_type(T(4, 2, 4, 3));
  EXPECT_EQ(c.family, TypeFamily::Polynomial);
  EXPECT_FALSE(c.is_identity());
}

TEST(Build, PolynomialExamples) {
  EXPECT_EQ(build_polynomial(3, 1).map.numerator(), qp({0, 0, 3, -2}));
  EXPECT_EQ(build_polynomial(4, 1).map.numerator(), qp({0, 0, 0, 4, -3}));
  const BelyiMap m = build_polynomial(5, 2);
  EXPECT_EQ(m.map.numerator(), qp({0, 0, 0, 10, -15, 6}));
  EXPECT_EQ(m.map.denominator(), qp({1}));
  // Derivative and f(1) by the oracle.
  const oracle::QVec f(m.map.numerator().coefficients().begin(), m.map.numerator().coefficients().end());
  EXPECT_EQ(oracle::termwise_derivative(f), oracle::scale(oracle::power_product(2, 2), 30));
  EXPECT_EQ(oracle::eval(f, 1), 1);
  EXPECT_THROW(build_polynomial(5, 0), InvalidInput);
  EXPECT_THROW(build_polynomial(5, 4), InvalidInput);
}

TEST(Build, SymmetricExamples) {
  BelyiMap m = build_symmetric(3, 1);
  EXPECT_TRUE(same_function(m.map, QMap(qp({0, 0, -3, 1}), qp({1, -3}))));
  m = build_symmetric(5, 2);
  EXPECT_TRUE(same_function(m.map, QMap(qp({0, 0, 0, 10, -5, 1}), qp({1, -5, 10}))));
  // Integer model keeps the primitive parts.
  EXPECT_EQ(m.integer_model.numerator()[5], 1);
  m = build_symmetric(4, 1);
  EXPECT_TRUE(same_function(m.map, QMap(qp({0, 0, 0, -2, 1}), qp({1, -2}))));
  EXPECT_TRUE(verify(m).passed());
  EXPECT_THROW(build_symmetric(4, 2), InvalidInput);
}

// Independent check of the symmetric family: with naive arithmetic, the
// Wronskian N'D - ND' is a constant times x^(d-k-1) (x-1)^(2k), f(1) = 1 and
// f(1/x) = 1/f(x) at sample points.
TEST(Build, SymmetricShapeByNaiveArithmetic) {
  for (int d = 3; d <= 16; ++d) {
    for (int k = 1; 2 * k + 1 <= d; ++k) {
      const BelyiMap m = build_symmetric(d, k);
      const oracle::QVec n(m.map.numerator().coefficients().begin(), m.map.numerator().coefficients().end());
      const oracle::QVec dn(m.map.denominator().coefficients().begin(), m.map.denominator().coefficients().end());
      const oracle::QVec w = oracle::add(oracle::mul(oracle::termwise_derivative(n), dn),
                                         oracle::scale(oracle::mul(n, oracle::termwise_derivative(dn)), -1));
      const oracle::QVec shape = oracle::power_product(static_cast<std::size_t>(d - k - 1), static_cast<std::size_t>(2 * k));
      ASSERT_FALSE(w.empty());
      EXPECT_EQ(w, oracle::scale(shape, w.back())) << d << "," << k;
      EXPECT_EQ(oracle::eval(n, 1), oracle::eval(dn, 1));
      for (long s = 2; s <= 5; ++s) {
        const oracle::Rat x(s, 3);
        if (oracle::eval(dn, x) == 0 || oracle::eval(dn, 1 / x) == 0 || oracle::eval(n, 1 / x) == 0) continue;
        const oracle::Rat fx = oracle::eval(n, x) / oracle::eval(dn, x);
        const oracle::Rat finv = oracle::eval(n, 1 / x) / oracle::eval(dn, 1 / x);
        EXPECT_EQ(fx * finv, 1) << d << "," << k;
      }
    }
  }
}

TEST(Build, DispatchExamples) {
  BelyiMap m = build(T(15, 13, 3, 15));
  EXPECT_EQ(m.map.degree(), 15U);
  EXPECT_TRUE(verify(m).passed());
  // f' = c x^12 (x-1)^2
  const QPoly df = derivative(m.map.numerator());
  EXPECT_EQ(df.low_order(), 12U);
  EXPECT_EQ(ord_at(df, BigRational(1)), 2U);
  EXPECT_EQ(df.deg(), 14U);

  m = build(T(3, 2, 3, 2));
  EXPECT_TRUE(same_function(m.map, QMap(qp({0, 0, -3, 1}), qp({1, -3}))));
  try {
    build(T(7, 4, 5, 6));
    FAIL();
  } catch (const UnsupportedType& e) {
    EXPECT_NE(std::string(e.what()).find("no closed form in scope"), std::string::npos);
  }
}

TEST(Build, ExactConjugatesPermutedTypes) {
  for (int d = 3; d <= 14; ++d) {
    for (const auto& t : enumerate_ordered_types(d)) {
      if (classify_type(t).family == TypeFamily::GeneralUnsupported) continue;
      const BelyiMap m = build_exact(t);
      EXPECT_EQ(m.ctype, t);
      const Certificate c = verify(m);
      EXPECT_TRUE(c.passed()) << t.to_string();
    }
  }
}

TEST(Verify, Examples) {
  Certificate c = verify(build_polynomial(3, 1));
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.wronskian, ZPoly({BigInteger(0), BigInteger(6), BigInteger(-6)}));

  c = verify(build_symmetric(3, 1));
  EXPECT_TRUE(c.passed());
  // -6x(x-1)^2 up to the sign of the primitive model.
  const ZPoly w = c.wronskian;
  EXPECT_EQ(w.low_order(), 1U);
  EXPECT_EQ(ord_at(to_rational(w), BigRational(1)), 2U);
  EXPECT_EQ(w.deg(), 3U);
  EXPECT_EQ(abs(w.lead()), 6);

  // -3x^4 + 4x^3 claimed as (4;2,3,4): the real e2 is 2.
  const BelyiMap wrong = make_belyi_map(T(4, 2, 3, 4), QMap::polynomial(qp({0, 0, 0, 4, -3})));
  c = verify(wrong);
  EXPECT_FALSE(c.passed());
}

TEST(Normalize, Examples) {
  IntegerModel m = normalize_integer_model(QMap::polynomial(qp({0, 0, 3, -2})));
  EXPECT_EQ(m.model.numerator(), ZPoly({BigInteger(0), BigInteger(0), BigInteger(3), BigInteger(-2)}));
  EXPECT_EQ(m.scale, 1);

  m = normalize_integer_model(QMap(qp({0, 0, 1, 0, 2}), qp({2, 0, 1})));
  EXPECT_EQ(m.model.numerator(), ZPoly({BigInteger(0), BigInteger(0), BigInteger(1), BigInteger(0), BigInteger(2)}));
  EXPECT_EQ(m.model.denominator(), ZPoly({BigInteger(2), BigInteger(0), BigInteger(1)}));
  EXPECT_EQ(m.scale, 1);

  std::vector<BigRational> half{BigRational(0), BigRational(1, 2)};
  m = normalize_integer_model(QMap(QPoly(half), qp({1, 1})));
  EXPECT_EQ(m.scale, BigRational(1, 2));
  EXPECT_EQ(m.model.numerator(), ZPoly({BigInteger(0), BigInteger(1)}));
  EXPECT_EQ(m.model.denominator(), ZPoly({BigInteger(1), BigInteger(1)}));
}

TEST(Render, Strings) {
  EXPECT_EQ(render(qp({0, 0, 3, -2})), "-2x^3+3x^2");
  EXPECT_EQ(render(qp({0, 0, 3, -2}), TermOrder::Ascending), "3x^2-2x^3");
  EXPECT_EQ(render(qp({-1, 1})), "x-1");
  EXPECT_EQ(render(QPoly{}), "0");
  const QMap f(qp({0, 0, -3, 1}), qp({1, -3}));
  EXPECT_EQ(render(f), "(x^3-3x^2)/(-3x+1)");
}

// Both coefficient formulas for the polynomial family agree; build_polynomial
// asserts this internally, the test makes it visible.
TEST(Build, PolynomialFamilyFormulasAgree) {
  for (int d = 3; d <= 25; ++d) {
    for (int k = 1; k <= d - 2; ++k) {
      EXPECT_NO_THROW({
        const BelyiMap m = build_polynomial(d, k);
        EXPECT_TRUE(verify(m).passed()) << d << "," << k;
      });
    }
  }
}
