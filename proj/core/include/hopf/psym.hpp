#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/hopf_core.hpp"
#include "hopf/ssym.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

// Sub-Hopf algebra of SSym spanned by the sums of Knuth classes, one basis
// element per standard Young tableau.
class PSym {
 public:
  using key_type = Tableau;

  std::size_t degree(const Tableau& t) const { return static_cast<std::size_t>(t.size()); }
  // Standard R of size |P|+|Q| restricting to P with st(jdt(R/P)) = Q.
  LinComb<Tableau> product(const Tableau& p, const Tableau& q) const;
  // Splits of the Knuth class words of R into two row words.
  LinComb<Tensor2<Tableau>> coproduct(const Tableau& r) const;
  Tableau unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // "P[1,4/2,5/3]", "1" for the empty tableau; parse also accepts the bare grammar.
  std::string format(const Tableau& t) const;
  Tableau parse(std::string_view text) const;
};

LinComb<Permutation> psym_embed(const Tableau& p);
LinComb<Permutation> psym_embed(const LinComb<Tableau>& a);

// Groups an SSym element by insertion tableau; nullopt unless it is constant
// on every Knuth class.
std::optional<LinComb<Tableau>> psym_regroup(const LinComb<Permutation>& a);

// S(P) via Takeuchi on the SSym embedding. Throws std::runtime_error when the
// result is not constant on Knuth classes.
LinComb<Tableau> psym_antipode(TakeuchiEvaluator<SSym>& ev, const Tableau& p);

// (-1)^{|lambda|} P_{lambda^t} with P_mu column superstandard.
LinComb<Tableau> psym_hook_prediction(const std::vector<int>& lambda);

struct HookInstance {
  std::vector<int> lambda;
  bool pass = false;
  LinComb<Tableau> predicted;
  LinComb<Tableau> computed;
};

// Every hook of size n.
std::vector<HookInstance> psym_hook_check(TakeuchiEvaluator<SSym>& ev, int n);

}  // namespace hopf
