#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Multi-fundamental quasisymmetric functions. The algebra is filtered, so all
// elements are kept only up to the degree cap.
class MQSym {
 public:
  using key_type = Composition;

  explicit MQSym(std::size_t cap) : cap_(cap) {}

  std::size_t degree(const Composition& a) const { return static_cast<std::size_t>(a.size()); }
  // Multishuffles of the canonical models, each word read as its descent
  // composition; words longer than the cap are never produced.
  LinComb<Composition> product(const Composition& a, const Composition& b) const;
  // Cut-edge splits followed by cut-cell splits.
  LinComb<Tensor2<Composition>> coproduct(const Composition& a) const;
  Composition unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return cap_; }

  // Sum over |a| <= |b| <= cap of (-1)^{|b|} c_{b, a^t} F~_b. Throws
  // std::invalid_argument when |a| exceeds the cap.
  LinComb<Composition> antipode_closed(const Composition& a) const;

  std::string format(const Composition& a) const;
  Composition parse(std::string_view t) const;

 private:
  std::size_t cap_;
};

}  // namespace hopf
