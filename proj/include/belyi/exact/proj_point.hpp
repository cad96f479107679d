#pragma once

#include <optional>
#include <utility>

#include "belyi/errors.hpp"

namespace belyi {

// A point of the projective line over K: an affine value or infinity.
template <class K>
class ProjPoint {
 public:
  explicit ProjPoint(K value) : v_(std::move(value)) {}

  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const noexcept { return !v_.has_value(); }
  bool is_affine() const noexcept { return v_.has_value(); }

  const K& value() const {
    if (!v_) throw InvalidInput("point at infinity has no affine value");
    return *v_;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.v_ == *b.v_;
  }

  // Affine points in K's order, infinity last.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return *a.v_ < *b.v_;
  }

 private:
  ProjPoint() = default;
  std::optional<K> v_;
};

}  // namespace belyi
