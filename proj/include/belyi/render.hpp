#pragma once

#include <string>

#include "belyi/exact.hpp"

namespace belyi {

enum class TermOrder { Descending, Ascending };

namespace detail {

inline std::string coefficient_text(const BigInteger& c) { return c.get_str(); }
inline std::string coefficient_text(const BigRational& c) { return to_string(c); }
inline std::string coefficient_text(const Fp& c) { return std::to_string(c.value()); }

inline bool is_one(const BigInteger& c) { return c == 1; }
inline bool is_one(const BigRational& c) { return c == 1; }
inline bool is_one(const Fp& c) { return c.value() == 1; }

}  // namespace detail

// Plain-text polynomial such as "-2x^3+3x^2" or "2x^15+2x^12". Prime-field
// coefficients print as their representative in [0, p).
template <class K>
std::string render(const Poly<K>& p, TermOrder order = TermOrder::Descending) {
  if (p.is_zero()) return "0";
  std::string out;
  auto term = [&](std::size_t i) {
    const K& c = p[i];
    if (coefficient_traits<K>::is_zero(c)) return;
    std::string text = detail::coefficient_text(c);
    const bool negative = !text.empty() && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const bool unit = text == "1";
    if (i == 0) {
      out += text;
      return;
    }
    if (!unit) out += text.find('/') == std::string::npos ? text : "(" + text + ")";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  };
  if (order == TermOrder::Descending) {
    for (std::size_t i = p.size(); i-- > 0;) term(i);
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) term(i);
  }
  return out;
}

// "num" for polynomial maps (denominator 1), "(num)/(den)" otherwise.
template <class K>
std::string render(const RationalMap<K>& f, TermOrder order = TermOrder::Descending) {
  const auto& den = f.denominator();
  if (den.is_constant() && detail::is_one(den[0])) return render(f.numerator(), order);
  return "(" + render(f.numerator(), order) + ")/(" + render(den, order) + ")";
}

}  // namespace belyi
