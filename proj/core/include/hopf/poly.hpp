#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

struct PolyKey {
  int exponent = 0;
  friend auto operator<=>(const PolyKey&, const PolyKey&) = default;
};

// The polynomial algebra F[x] with x primitive.
class PolyAlgebra {
 public:
  using key_type = PolyKey;

  std::size_t degree(const PolyKey& k) const { return static_cast<std::size_t>(k.exponent); }
  LinComb<PolyKey> product(const PolyKey& a, const PolyKey& b) const;
  LinComb<Tensor2<PolyKey>> coproduct(const PolyKey& a) const;
  PolyKey unit() const { return {0}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // (-1)^n x^n
  LinComb<PolyKey> antipode_closed(const PolyKey& a) const;

  std::string format(const PolyKey& k) const;
  PolyKey parse(std::string_view text) const;
};

Scalar binomial(int n, int k);

// Split/merge involution on ordered set partitions of [n]; its unique fixed
// point is (n, n-1, ..., 1).
OrderedSetPartition poly_involution_step(const OrderedSetPartition& pi);
SignedSet<OrderedSetPartition> poly_signed_set(int n);

}  // namespace hopf
