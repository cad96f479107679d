#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "belyi/errors.hpp"

namespace belyi {

// Largest degree accepted anywhere in the library.
inline constexpr int kMaxDegree = 10'000;

// Genus-0 single-cycle combinatorial type (d; e1, e2, e3): one ramification
// point of index e_i over each of 0, 1, infinity, with 2 <= e_i <= d and
// e1 + e2 + e3 = 2d + 1. Stored in the order given.
class CombinatorialType {
 public:
  static CombinatorialType validate(long d, long e1, long e2, long e3) {
    if (d < 3) throw InvalidInput("degree must be at least 3, got " + std::to_string(d));
    if (d > kMaxDegree) {
      throw InvalidInput("degree " + std::to_string(d) + " exceeds the configured maximum " +
                         std::to_string(kMaxDegree));
    }
    for (long e : {e1, e2, e3}) {
      if (e < 2 || e > d) {
        throw InvalidInput("ramification index " + std::to_string(e) + " violates 2 <= e_i <= d = " +
                           std::to_string(d));
      }
    }
    if (e1 + e2 + e3 != 2 * d + 1) {
      throw InvalidInput("genus-0 condition fails: e1 + e2 + e3 = " + std::to_string(e1 + e2 + e3) +
                         " != 2d + 1 = " + std::to_string(2 * d + 1));
    }
    return CombinatorialType(static_cast<int>(d), {static_cast<int>(e1), static_cast<int>(e2),
                                                   static_cast<int>(e3)});
  }

  int degree() const noexcept { return d_; }
  int e1() const noexcept { return e_[0]; }
  int e2() const noexcept { return e_[1]; }
  int e3() const noexcept { return e_[2]; }
  const std::array<int, 3>& indices() const noexcept { return e_; }

  std::string to_string() const {
    return "(" + std::to_string(d_) + ";" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) +
           "," + std::to_string(e_[2]) + ")";
  }

  friend auto operator<=>(const CombinatorialType&, const CombinatorialType&) = default;

 private:
  CombinatorialType(int d, std::array<int, 3> e) : d_(d), e_(e) {}

  int d_;
  std::array<int, 3> e_;
};

// Sorted representatives 2 <= e1 <= e2 <= e3 <= d, lexicographic.
inline std::vector<CombinatorialType> enumerate_types(int d) {
  if (d < 3) throw InvalidInput("enumerate_types: degree must be at least 3");
  std::vector<CombinatorialType> out;
  for (int e1 = 2; e1 <= d; ++e1) {
    for (int e2 = e1; e2 <= d; ++e2) {
      const int e3 = 2 * d + 1 - e1 - e2;
      if (e3 < e2) break;
      if (e3 <= d) out.push_back(CombinatorialType::validate(d, e1, e2, e3));
    }
  }
  return out;
}

// Every valid ordered triple of degree d.
inline std::vector<CombinatorialType> enumerate_ordered_types(int d) {
  if (d < 3) throw InvalidInput("enumerate_ordered_types: degree must be at least 3");
  std::vector<CombinatorialType> out;
  for (int e1 = 2; e1 <= d; ++e1) {
    for (int e2 = 2; e2 <= d; ++e2) {
      const int e3 = 2 * d + 1 - e1 - e2;
      if (e3 >= 2 && e3 <= d) out.push_back(CombinatorialType::validate(d, e1, e2, e3));
    }
  }
  return out;
}

// N(d) = (d^2 + 4d - c) / 12 with c depending on d mod 6.
inline long count_closed_form(long d) {
  if (d < 3) throw InvalidInput("count_closed_form: degree must be at least 3");
  long c = 0;
  switch (d % 6) {
    case 1: c = 5; break;
    case 4: c = 8; break;
    case 3:
    case 5: c = 9; break;
    default: c = 12; break;
  }
  return (d * d + 4 * d - c) / 12;
}

// Lower bound for conservative polynomials of degree d: floor((d-1)/2).
inline long count_polynomial(long d) {
  if (d < 3) throw InvalidInput("count_polynomial: degree must be at least 3");
  return (d - 1) / 2;
}

// sum_{i=1}^{floor((d-1)/3)} floor((d+1-3i)/2); the empty sum at d = 3.
inline long count_nonpolynomial(long d) {
  if (d < 3) throw InvalidInput("count_nonpolynomial: degree must be at least 3");
  long total = 0;
  for (long i = 1; i <= (d - 1) / 3; ++i) total += (d + 1 - 3 * i) / 2;
  return total;
}

enum class TypeFamily { Polynomial, Symmetric, GeneralUnsupported };

inline const char* to_string(TypeFamily f) {
  switch (f) {
    case TypeFamily::Polynomial: return "polynomial";
    case TypeFamily::Symmetric: return "symmetric";
    case TypeFamily::GeneralUnsupported: return "general-unsupported";
  }
  return "?";
}

// Which closed-form family a type belongs to, up to permuting (0, 1, inf).
//
// `pattern` is the family's own type, (d; d-k, k+1, d) or (d; d-k, 2k+1, d-k);
// `sigma` relates the two: requested e_i == pattern e_{sigma[i]}.
struct TypeClassification {
  TypeFamily family = TypeFamily::GeneralUnsupported;
  int k = 0;
  std::array<int, 3> sigma{0, 1, 2};
  std::array<int, 3> pattern{0, 0, 0};

  bool is_identity() const noexcept { return sigma == std::array<int, 3>{0, 1, 2}; }
};

namespace detail {

// Permutations of {0,1,2}, identity first so it wins ties.
inline constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};

}  // namespace detail

// An unpermuted match in either family beats a permuted one: (5;3,5,3) is the
// symmetric type itself even though it also permutes (5;3,3,5).
inline TypeClassification classify_type(const CombinatorialType& t) {
  const int d = t.degree();
  const auto& e = t.indices();
  auto match = [&](TypeFamily family, const std::array<int, 3>& pi) -> std::optional<TypeClassification> {
    // q is the requested triple read in the order pi; q[j] = e[pi[j]].
    const std::array<int, 3> q{e[pi[0]], e[pi[1]], e[pi[2]]};
    int k = 0;
    if (family == TypeFamily::Polynomial) {
      if (q[2] != d || q[0] + q[1] != d + 1) return std::nullopt;
      k = q[1] - 1;
    } else {
      if (q[0] != q[2] || q[1] % 2 == 0) return std::nullopt;
      k = (q[1] - 1) / 2;
      if (q[0] != d - k) return std::nullopt;
    }
    TypeClassification c;
    c.family = family;
    c.k = k;
    c.pattern = q;
    for (int j = 0; j < 3; ++j) c.sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])] = j;
    return c;
  };
  for (const auto& pi : detail::kPermutations) {
    for (auto family : {TypeFamily::Polynomial, TypeFamily::Symmetric}) {
      if (auto c = match(family, pi)) return *c;
    }
  }
  return {};
}

}  // namespace belyi
