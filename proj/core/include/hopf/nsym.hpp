#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Noncommutative symmetric functions in the complete basis H_a = H_{a1}...H_{ak}.
class NSymH {
 public:
  using key_type = Composition;

  std::size_t degree(const Composition& a) const { return static_cast<std::size_t>(a.size()); }
  LinComb<Composition> product(const Composition& a, const Composition& b) const {
    return LinComb<Composition>::term(concat(a, b));
  }
  // Multiplicative extension of Delta H_n = sum H_i (x) H_{n-i}, with H_0 = 1.
  LinComb<Tensor2<Composition>> coproduct(const Composition& a) const;
  Composition unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // "H[2,1]"; parse also accepts "H:2,1" and a bare composition.
  std::string format(const Composition& a) const;
  Composition parse(std::string_view t) const;
};

// Immaculate keys print as "S[2,1]" and parse from "S[2,1]", "S:2,1" or "2,1".
std::string format_immaculate(const Composition& a);
Composition parse_immaculate(std::string_view t);

// Row-ordered noncommutative determinant of (H_{a_i + j - i}).
LinComb<Composition> immaculate_to_h(const Composition& a);
LinComb<Composition> immaculate_to_h(const LinComb<Composition>& s);
// Inverse change of basis by triangular elimination.
LinComb<Composition> h_to_immaculate(const LinComb<Composition>& h);

// S(H_a) in the immaculate basis, from dual immaculate tableaux of content rev(a).
LinComb<Composition> nsym_s_of_h_closed(const Composition& a);
// S(S_{n,1^k}) = (-1)^{n+k} S_{k+1,1^{n-1}}.
LinComb<Composition> nsym_antipode_hook(int n, int k);
// S(S_{m,n}) from the two frozen-tableau families.
LinComb<Composition> nsym_antipode_tworow(int m, int n);
// Antipode of an immaculate function by Takeuchi in the H basis.
LinComb<Composition> nsym_antipode_immaculate(TakeuchiEvaluator<NSymH>& ev, const Composition& a);

}  // namespace hopf
