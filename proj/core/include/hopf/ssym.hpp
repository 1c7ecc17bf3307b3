#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Permutations with the shifted shuffle product and standardized
// deconcatenation coproduct.
class SSym {
 public:
  using key_type = Permutation;

  std::size_t degree(const Permutation& p) const { return p.length(); }
  LinComb<Permutation> product(const Permutation& a, const Permutation& b) const;
  LinComb<Tensor2<Permutation>> coproduct(const Permutation& p) const;
  Permutation unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // Digits when n <= 9, "(10,2,...)" otherwise, "()" for the empty permutation.
  std::string format(const Permutation& p) const;
  Permutation parse(std::string_view t) const;
};

// Word-level sums used to state the closed forms. Words in these sums have
// distinct letters but need not be permutations of [n].
LinComb<Word> word_term(const Word& w);
LinComb<Permutation> to_permutations(const LinComb<Word>& a);

// S(12...n) = (-1)^n n...21 and S(n...21) = (-1)^n 12...n.
LinComb<Permutation> ssym_antipode_identity(int n);
LinComb<Permutation> ssym_antipode_reverse(int n);
// S(delta_{k,1} eta_{k+1,n}) and S(eta_{1,k} delta_{n,k+1}) for 1 <= k < n.
LinComb<Permutation> ssym_antipode_hookperm(int k, int n);
LinComb<Permutation> ssym_antipode_hookperm_corollary(int k, int n);

// Sum over k of (-1)^k (eta_{1,k} shuffle delta_{n,k+1}); zero for all n.
LinComb<Word> ssym_binomial_sum(int n);

// [pi] S(sigma) = [sigma^{-1}] S(pi^{-1}) for all pi, sigma in S_n.
bool ssym_duality_check(TakeuchiEvaluator<SSym>& ev, int n);
// [pi^o] S(sigma^o) = [pi] S(sigma), with o the 180 degree rotation.
bool ssym_rotation_check(TakeuchiEvaluator<SSym>& ev, int n);

// sigma_A = delta_A eta_{[n] - A}.
Permutation sigma_of_set(const std::vector<int>& a, int n);

// Conjectured expansions of S(sigma_A) for A = {a} and A = {a, 2}. Any summand
// with a letter above n is dropped.
LinComb<Permutation> ssym_conjecture_singleton(int a, int n);
LinComb<Permutation> ssym_conjecture_pair2(int a, int n);

struct ConjectureInstance {
  std::string label;
  bool pass = false;
  LinComb<Permutation> conjectured;
  LinComb<Permutation> computed;
};

// One instance per admissible a, compared with Takeuchi.
std::vector<ConjectureInstance> ssym_conjecture_check(TakeuchiEvaluator<SSym>& ev, std::string_view name, int n);

}  // namespace hopf
