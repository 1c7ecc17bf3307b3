#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Key grammar for bracketed composition keys: "M[2,1]", bare "2,1", or "1" for
// the unit.
Composition parse_bracketed_composition(std::string_view text, std::string_view prefix);
std::string format_bracketed_composition(const Composition& a, std::string_view prefix);

// Quasisymmetric functions in the monomial basis.
class QSymMonomial {
 public:
  using key_type = Composition;

  std::size_t degree(const Composition& a) const { return static_cast<std::size_t>(a.size()); }
  LinComb<Composition> product(const Composition& a, const Composition& b) const {
    return quasishuffle_compositions(a, b);
  }
  // Deconcatenation: all alpha = beta gamma.
  LinComb<Tensor2<Composition>> coproduct(const Composition& a) const;
  Composition unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // (-1)^{l(a)} times the sum of all coarsenings of rev(a).
  LinComb<Composition> antipode_closed(const Composition& a) const;

  std::string format(const Composition& a) const { return format_bracketed_composition(a, "M"); }
  Composition parse(std::string_view t) const { return parse_bracketed_composition(t, "M"); }
};

// Quasisymmetric functions in the fundamental basis.
class QSymFundamental {
 public:
  using key_type = Composition;

  std::size_t degree(const Composition& a) const { return static_cast<std::size_t>(a.size()); }
  // Shuffle the canonical models on disjoint alphabets, read off descents.
  LinComb<Composition> product(const Composition& a, const Composition& b) const;
  // Splits of the ribbon along cut-edges, trivial splits included.
  LinComb<Tensor2<Composition>> coproduct(const Composition& a) const;
  Composition unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // (-1)^{|a|} F of the transposed ribbon.
  LinComb<Composition> antipode_closed(const Composition& a) const;

  std::string format(const Composition& a) const { return format_bracketed_composition(a, "F"); }
  Composition parse(std::string_view t) const { return parse_bracketed_composition(t, "F"); }
};

// F_a = sum of M_b over refinements b of a.
LinComb<Composition> fundamental_to_monomial(const LinComb<Composition>& f);
// Inverse change of basis: M_a = sum over refinements b of (-1)^{l(b)-l(a)} F_b.
LinComb<Composition> monomial_to_fundamental(const LinComb<Composition>& m);

}  // namespace hopf
