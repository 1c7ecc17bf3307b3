#include "hopf/ssym.hpp"

#include <stdexcept>

#include "hopf/errors.hpp"

namespace hopf {

LinComb<Permutation> SSym::product(const Permutation& a, const Permutation& b) const {
  return to_permutations(shuffle(a.as_word(), shift(b, a.n())));
}

LinComb<Tensor2<Permutation>> SSym::coproduct(const Permutation& p) const {
  LinComb<Tensor2<Permutation>> out;
  const auto& v = p.oneline();
  for (std::size_t i = 0; i <= v.size(); ++i)
    out.add_term({standardize(Word(std::vector<int>(v.begin(), v.begin() + i))),
                  standardize(Word(std::vector<int>(v.begin() + i, v.end())))},
                 1);
  return out;
}

std::string SSym::format(const Permutation& p) const {
  if (p.empty()) return "()";
  if (p.n() <= 9) return format_compact(p.oneline());
  return "(" + format_comma(p.oneline()) + ")";
}

Permutation SSym::parse(std::string_view t) const {
  if (t == "()" || t == "-") return {};
  std::size_t offset = 0;
  if (t.size() >= 2 && t.front() == '(') {
    if (t.back() != ')') throw ParseError("expected ')'", t.size());
    t = t.substr(1, t.size() - 2);
    offset = 1;
  }
  try {
    return parse_permutation(t);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.position() + offset);
  }
}

LinComb<Word> word_term(const Word& w) { return LinComb<Word>::term(w); }

LinComb<Permutation> to_permutations(const LinComb<Word>& a) {
  LinComb<Permutation> out;
  for (const auto& [w, c] : a) out.add_term(Permutation(w.letters()), c);
  return out;
}

namespace {

LinComb<Word> W(std::initializer_list<int> letters) { return word_term(Word(letters)); }
LinComb<Word> W(const Word& w) { return word_term(w); }
LinComb<Word> L(int letter) { return word_term(Word{letter}); }

LinComb<Word> cat(std::initializer_list<LinComb<Word>> parts) {
  LinComb<Word> out = word_term(Word{});
  for (const auto& p : parts) out = concat(out, p);
  return out;
}

LinComb<Word> sh(const LinComb<Word>& a, const LinComb<Word>& b) { return shuffle(a, b); }

Scalar sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

// A summand mentioning a letter above n is the empty sum.
LinComb<Word> within(const LinComb<Word>& a, int n) {
  for (const auto& [w, c] : a)
    for (int x : w)
      if (x > n) return {};
  return a;
}

}  // namespace

LinComb<Permutation> ssym_antipode_identity(int n) {
  return LinComb<Permutation>::term(Permutation(delta(n, 1).letters()), sign_of(n));
}

LinComb<Permutation> ssym_antipode_reverse(int n) {
  return LinComb<Permutation>::term(Permutation::identity(n), sign_of(n));
}

LinComb<Permutation> ssym_antipode_hookperm(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("hook permutation needs 1 <= k < n");
  LinComb<Word> out;
  for (int j = 1; j <= k; ++j) {
    auto inner = cat({sh(W(delta(k, j + 1)), W(delta(n, k + 2))), L(k + 1)});
    out.add_scaled(cat({sh(W(eta(1, j - 1)), inner), L(j)}), sign_of(n + k + j));
  }
  return to_permutations(out);
}

LinComb<Permutation> ssym_antipode_hookperm_corollary(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("hook permutation needs 1 <= k < n");
  LinComb<Word> out;
  for (int j = k + 1; j <= n; ++j) {
    auto inner = cat({L(k), sh(W(delta(k - 1, 1)), W(delta(j - 1, k + 1)))});
    out.add_scaled(cat({L(j), sh(inner, W(eta(j + 1, n)))}), sign_of(n + k + j + 1));
  }
  return to_permutations(out);
}

LinComb<Word> ssym_binomial_sum(int n) {
  LinComb<Word> out;
  for (int k = 0; k <= n; ++k) out.add_scaled(shuffle(eta(1, k), delta(n, k + 1)), sign_of(k));
  return out;
}

bool ssym_duality_check(TakeuchiEvaluator<SSym>& ev, int n) {
  const auto perms = permutations_of(n);
  std::map<Permutation, LinComb<Permutation>> s;
  for (const auto& p : perms) s.emplace(p, ev.antipode(p));
  for (const auto& pi : perms)
    for (const auto& sigma : perms)
      if (s.at(sigma).coefficient(pi) != s.at(pi.inverse()).coefficient(sigma.inverse())) return false;
  return true;
}

bool ssym_rotation_check(TakeuchiEvaluator<SSym>& ev, int n) {
  const auto perms = permutations_of(n);
  for (const auto& sigma : perms) {
    const auto s = ev.antipode(sigma);
    const auto so = ev.antipode(rotate180(sigma));
    for (const auto& pi : perms)
      if (so.coefficient(rotate180(pi)) != s.coefficient(pi)) return false;
  }
  return true;
}

Permutation sigma_of_set(const std::vector<int>& a, int n) {
  std::vector<bool> in(n + 1, false);
  for (int x : a) {
    if (x < 1 || x > n) throw std::invalid_argument("set element outside [n]");
    in[x] = true;
  }
  std::vector<int> v;
  for (int x = n; x >= 1; --x)
    if (in[x]) v.push_back(x);
  for (int x = 1; x <= n; ++x)
    if (!in[x]) v.push_back(x);
  return Permutation(std::move(v));
}

LinComb<Permutation> ssym_conjecture_singleton(int a, int n) {
  if (a <= 1 || a > n) throw std::invalid_argument("singleton conjecture needs 1 < a <= n");
  LinComb<Word> out;
  out.add_scaled(within(cat({sh(L(2), W(delta(n, 4))), W({3, 1})}), n), sign_of(n - 1));
  out.add_scaled(within(cat({sh(cat({L(a - 1), W(eta(1, a - 2))}), W(delta(n, a + 1))), L(a)}), n), sign_of(n + a));
  for (int j = 2; j <= a - 1; ++j) {
    const Scalar s = sign_of(n + j);
    out.add_scaled(within(cat({sh(cat({L(j - 1), W(eta(1, j - 2))}), W(delta(n, j + 1))), L(j)}), n), s);
    out.add_scaled(within(cat({sh(cat({L(j + 1), W(eta(1, j - 1))}), W(delta(n, j + 2))), L(j)}), n), s);
  }
  return to_permutations(out);
}

LinComb<Permutation> ssym_conjecture_pair2(int a, int n) {
  if (a <= 2 || a > n) throw std::invalid_argument("pair conjecture needs 2 < a <= n");
  LinComb<Word> out;
  const Scalar s0 = sign_of(n);
  out.add_scaled(within(cat({sh(W({3, 2}), W(delta(n, 5))), W({4, 1})}), n), s0);
  out.add_scaled(within(cat({sh(W({1, 2}), W(delta(n, 4))), L(3)}), n), s0);
  out.add_scaled(within(cat({sh(L(1), cat({sh(L(3), W(delta(n, 5))), L(4)})), L(2)}), n), sign_of(n - 1));
  for (int j = 3; j <= a - 1; ++j) {
    const Scalar s = sign_of(n + j);
    out.add_scaled(within(cat({sh(cat({L(j + 1), W({2, 1}), W(eta(3, j - 1))}), W(delta(n, j + 2))), L(j)}), n), s);
    out.add_scaled(within(cat({sh(cat({L(j), W({2, 1}), W(eta(3, j - 1))}), W(delta(n, j + 2))), L(j + 1)}), n), -s);
  }
  return to_permutations(out);
}

std::vector<ConjectureInstance> ssym_conjecture_check(TakeuchiEvaluator<SSym>& ev, std::string_view name, int n) {
  std::vector<ConjectureInstance> out;
  const bool singleton = name == "ssym-singleton";
  if (!singleton && name != "ssym-pair2") throw std::invalid_argument("unknown conjecture: " + std::string(name));
  for (int a = singleton ? 2 : 3; a <= n; ++a) {
    ConjectureInstance inst;
    inst.label = singleton ? "A={" + std::to_string(a) + "}" : "A={" + std::to_string(a) + ",2}";
    inst.conjectured = singleton ? ssym_conjecture_singleton(a, n) : ssym_conjecture_pair2(a, n);
    inst.computed = ev.antipode(sigma_of_set(singleton ? std::vector<int>{a} : std::vector<int>{a, 2}, n));
    inst.pass = inst.conjectured == inst.computed;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hopf
