#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "belyi/combinatorics.hpp"
#include "belyi/exact.hpp"

namespace belyi {

// f = scale * num / den with num, den primitive and coprime in Z[x], scale > 0.
struct IntegerModel {
  ZMap model;
  BigRational scale;
};

inline IntegerModel normalize_integer_model(const QMap& f) {
  if (f.numerator().is_zero()) throw InvalidInput("cannot normalize the zero map");
  const ScaledIntegerPoly n = clear_denominators(f.numerator());
  const ScaledIntegerPoly d = clear_denominators(f.denominator());
  return {ZMap(n.primitive, d.primitive), n.scale / d.scale};
}

// A normalized map tagged with the type it claims. Nothing here is trusted
// until verify() says so.
struct BelyiMap {
  CombinatorialType ctype;
  QMap map;
  ZMap integer_model;
  BigRational scale;
  TypeClassification classification;
};

inline BelyiMap make_belyi_map(const CombinatorialType& t, QMap f) {
  IntegerModel m = normalize_integer_model(f);
  return {t, std::move(f), std::move(m.model), std::move(m.scale), classify_type(t)};
}

namespace detail {

// Content-free Q map from the integer model, so printed coefficients are the
// primitive ones.
inline QMap primitive_q_map(const QPoly& num, const QPoly& den) {
  const IntegerModel m = normalize_integer_model(QMap(num, den));
  QPoly n = to_rational(m.model.numerator()) * m.scale;
  return QMap(std::move(n), to_rational(m.model.denominator()));
}

}  // namespace detail

// Coefficients of x^(d-k) sum_i c_i (x-1)^i, with c_i from the closed form and
// from the recursion c_{i+1} = -(d-k+i)/(i+1) c_i; disagreement is a bug.
inline std::vector<BigRational> shifted_family_coefficients(int d, int k) {
  std::vector<BigRational> closed;
  std::vector<BigRational> rec{BigRational(1)};
  for (int i = 0; i <= k; ++i) {
    BigRational c(binomial(d - k + i - 1, i));
    if (i % 2 == 1) c = -c;
    closed.push_back(c);
    if (i < k) rec.push_back(-rec.back() * BigRational(d - k + i) / BigRational(i + 1));
  }
  if (closed != rec) {
    throw InternalInconsistency("shifted coefficients disagree for d=" + std::to_string(d) +
                                ", k=" + std::to_string(k));
  }
  return closed;
}

// The polynomial of type (d; d-k, k+1, d).
inline BelyiMap build_polynomial(int d, int k) {
  if (d < 3 || d > kMaxDegree) throw InvalidInput("build_polynomial: degree out of range");
  if (k < 1 || k > d - 2) {
    throw InvalidInput("build_polynomial: need 1 <= k <= d-2, got k=" + std::to_string(k));
  }
  const auto ud = static_cast<std::size_t>(d);
  const auto uk = static_cast<std::size_t>(k);

  // c * x^(d-k) * sum_i a_i x^(k-i), a_i = (-1)^(k-i) C(k,i) / (d-i).
  BigRational c = 1;
  for (int j = 0; j <= k; ++j) c *= d - j;
  c /= BigRational(factorial(static_cast<unsigned long>(k)));
  std::vector<BigRational> direct(ud + 1, BigRational(0));
  for (int i = 0; i <= k; ++i) {
    BigRational a(binomial(k, i), BigInteger(d - i));
    a.canonicalize();
    if ((k - i) % 2 == 1) a = -a;
    direct[ud - static_cast<std::size_t>(i)] = c * a;
  }
  const QPoly f_direct(std::move(direct));

  // x^(d-k) * sum_i c_i (x-1)^i
  const auto shifted = shifted_family_coefficients(d, k);
  const QPoly x_minus_one = QPoly::linear_root(BigRational(1));
  QPoly acc;
  QPoly power = QPoly::constant(BigRational(1));
  for (std::size_t i = 0; i <= uk; ++i) {
    acc += power * shifted[i];
    power = power * x_minus_one;
  }
  const QPoly f_shifted = acc.shifted(ud - uk);

  if (!(f_direct == f_shifted)) {
    throw InternalInconsistency("the two polynomial-family formulas disagree for d=" +
                                std::to_string(d) + ", k=" + std::to_string(k));
  }
  return make_belyi_map(CombinatorialType::validate(d, d - k, k + 1, d), QMap::polynomial(f_direct));
}

// a_i = k! C(d,i) C(d-k-i-1, k-i), checked against the product form
// C(k,i) prod_{j=k+i+1}^{2k} (d-j) prod_{j=0}^{i-1} (d-j).
inline std::vector<BigInteger> symmetric_family_coefficients(int d, int k) {
  std::vector<BigInteger> a;
  const BigInteger kf = factorial(static_cast<unsigned long>(k));
  for (int i = 0; i <= k; ++i) {
    const BigInteger closed = kf * binomial(d, i) * binomial(d - k - i - 1, k - i);
    BigInteger product = binomial(k, i);
    for (int j = k + i + 1; j <= 2 * k; ++j) product *= d - j;
    for (int j = 0; j < i; ++j) product *= d - j;
    if (closed != product) {
      throw InternalInconsistency("symmetric coefficients disagree for d=" + std::to_string(d) +
                                  ", k=" + std::to_string(k) + ", i=" + std::to_string(i));
    }
    a.push_back(closed);
  }
  return a;
}

// The map of type (d; d-k, 2k+1, d-k), which commutes with x -> 1/x.
inline BelyiMap build_symmetric(int d, int k) {
  if (d < 3 || d > kMaxDegree) throw InvalidInput("build_symmetric: degree out of range");
  if (k < 1 || d < 2 * k + 1 || d - k < 2) {
    throw InvalidInput("build_symmetric: need k >= 1 and d >= 2k+1, got d=" + std::to_string(d) +
                       ", k=" + std::to_string(k));
  }
  const auto a = symmetric_family_coefficients(d, k);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<BigRational> low(uk + 1);
  std::vector<BigRational> h(uk + 1);
  for (std::size_t i = 0; i <= uk; ++i) {
    low[i] = BigRational(a[uk - i]);
    if ((uk - i) % 2 == 1) low[i] = -low[i];
    h[i] = BigRational(a[i]);
    if (i % 2 == 1) h[i] = -h[i];
  }
  const QPoly f1(std::move(low));
  const QPoly den(std::move(h));

  // h(x) = x^k f1(1/x): the coefficient lists are reverses of each other.
  std::vector<BigRational> rev(f1.coefficients().rbegin(), f1.coefficients().rend());
  rev.resize(uk + 1, BigRational(0));
  if (!(QPoly(std::move(rev)) == den)) {
    throw InternalInconsistency("symmetric family lost its reversal symmetry");
  }
  const QPoly num = f1.shifted(static_cast<std::size_t>(d - k));
  return make_belyi_map(CombinatorialType::validate(d, d - k, 2 * k + 1, d - k),
                        detail::primitive_q_map(num, den));
}

// The Mobius map phi with phi(t_i) = t_{sigma[i]} on (t_0, t_1, t_2) = (0, 1, inf),
// and its inverse.
inline std::pair<QMap, QMap> permuting_mobius(const std::array<int, 3>& sigma) {
  const BigRational z(0);
  const BigRational o(1);
  const BigRational m(-1);
  auto make = [&](const std::array<int, 3>& s) -> QMap {
    using A = std::array<int, 3>;
    if (s == A{0, 1, 2}) return mobius(o, z, z, o);  // x
    if (s == A{1, 0, 2}) return mobius(m, o, z, o);  // 1 - x
    if (s == A{2, 1, 0}) return mobius(z, o, o, z);  // 1/x
    if (s == A{0, 2, 1}) return mobius(o, z, o, m);  // x/(x-1)
    if (s == A{1, 2, 0}) return mobius(z, o, m, o);  // 1/(1-x)
    if (s == A{2, 0, 1}) return mobius(o, m, o, z);  // (x-1)/x
    throw InvalidInput("not a permutation of {0,1,2}");
  };
  std::array<int, 3> inverse{};
  for (int i = 0; i < 3; ++i) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  return {make(sigma), make(inverse)};
}

// phi^-1 o f o phi, relabelling the roles of 0, 1, inf. The result is again
// normalized, of the permuted type.
inline BelyiMap conjugate_to(const BelyiMap& f, const std::array<int, 3>& sigma) {
  const auto& e = f.ctype.indices();
  const auto [phi, phi_inv] = permuting_mobius(sigma);
  const QMap g = conjugate(f.map, phi, phi_inv);
  const auto ctype = CombinatorialType::validate(f.ctype.degree(), e[static_cast<std::size_t>(sigma[0])],
                                                 e[static_cast<std::size_t>(sigma[1])],
                                                 e[static_cast<std::size_t>(sigma[2])]);
  return make_belyi_map(ctype, detail::primitive_q_map(g.numerator(), g.denominator()));
}

// The map of the family pattern matching t, in the pattern's own coordinates.
// For a permuted request such as (4;2,4,3) the map is that of (4;2,3,4) and
// classification.sigma says how the two relate; build_exact conjugates.
inline BelyiMap build(const CombinatorialType& t) {
  const TypeClassification c = classify_type(t);
  BelyiMap out = [&] {
    switch (c.family) {
      case TypeFamily::Polynomial: return build_polynomial(t.degree(), c.k);
      case TypeFamily::Symmetric: return build_symmetric(t.degree(), c.k);
      case TypeFamily::GeneralUnsupported: break;
    }
    throw UnsupportedType("no closed form in scope for type " + t.to_string());
  }();
  out.classification = c;
  return out;
}

// The normalized map of exactly type t, conjugating the pattern map when the
// ramification data is permuted.
inline BelyiMap build_exact(const CombinatorialType& t) {
  BelyiMap base = build(t);
  const TypeClassification c = base.classification;
  if (c.is_identity()) return base;
  BelyiMap out = conjugate_to(base, c.sigma);
  if (!(out.ctype == t)) throw InternalInconsistency("conjugation produced the wrong type");
  out.classification = c;
  return out;
}

struct CertificateCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct Certificate {
  std::vector<CertificateCheck> checks;
  ZPoly wronskian;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Exact certification of type and normalization. Ramification is read off the
// integer-model wronskian: it must be a nonzero constant times
// x^(e1-1) (x-1)^(e2-1), with deg num - deg den = e3 at infinity.
inline Certificate verify(const BelyiMap& m) {
  Certificate cert;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto d = static_cast<std::size_t>(m.ctype.degree());
  const auto e1 = static_cast<std::size_t>(m.ctype.e1());
  const auto e2 = static_cast<std::size_t>(m.ctype.e2());
  const auto e3 = static_cast<std::size_t>(m.ctype.e3());
  const QMap& f = m.map;

  check("degree", f.degree() == d, "deg " + std::to_string(f.degree()) + ", expected " + std::to_string(d));
  const auto zero = eval_map(f, BigRational(0));
  const auto one = eval_map(f, BigRational(1));
  const auto inf = eval_map(f, ProjPoint<BigRational>::infinity());
  check("fixes 0", zero == ProjPoint<BigRational>(BigRational(0)));
  check("fixes 1", one == ProjPoint<BigRational>(BigRational(1)));
  check("fixes infinity", inf.is_infinity());
  check("coprime", gcd(f.numerator(), f.denominator()).is_constant());

  const ZPoly& n = m.integer_model.numerator();
  const ZPoly& dn = m.integer_model.denominator();
  check("primitive model", is_primitive(n) && is_primitive(dn));
  check("scale is 1", m.scale == 1, "scale " + to_string(m.scale));
  {
    const QPoly lhs = f.numerator() * to_rational(dn);
    const QPoly rhs = to_rational(n) * f.denominator() * m.scale;
    check("model matches map", lhs == rhs);
  }

  const bool orders_ok = !n.is_zero() && n.deg() >= dn.deg() && n.deg() - dn.deg() == e3;
  check("order at infinity", orders_ok,
        "deg num - deg den should be e3 = " + std::to_string(e3));

  cert.wronskian = wronskian(n, dn);
  bool shape_ok = false;
  std::string shape_detail = "wronskian is zero";
  if (!cert.wronskian.is_zero()) {
    if (cert.wronskian.low_order() < e1 - 1) {
      shape_detail = "order at 0 below e1 - 1";
    } else {
      // Strip the x power, then divide by (x - 1) exactly e2 - 1 times.
      ZPoly q = cert.wronskian.unshifted(e1 - 1);
      shape_ok = true;
      for (std::size_t i = 0; i + 1 < e2; ++i) {
        if (q.is_zero() || q(BigInteger(1)) != 0) {
          shape_ok = false;
          shape_detail = "order at 1 below e2 - 1";
          break;
        }
        q = deflate(q, BigInteger(1));
      }
      if (shape_ok && !q.is_constant()) {
        shape_ok = false;
        shape_detail = "extra ramification: cofactor of degree " + std::to_string(q.deg());
      }
      if (shape_ok) shape_detail = "constant " + to_string(q[0]);
    }
  }
  check("wronskian shape", shape_ok, shape_detail);
  return cert;
}

}  // namespace belyi
