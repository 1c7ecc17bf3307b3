#include "hopf/psym.hpp"

#include <map>
#include <stdexcept>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Entries of r that are at most m, as a (possibly smaller) tableau.
Tableau restrict_to(const Tableau& r, int m) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : r.rows()) {
    std::vector<int> kept;
    for (int x : row)
      if (x <= m) kept.push_back(x);
    if (kept.empty()) break;
    rows.push_back(std::move(kept));
  }
  return Tableau(std::move(rows));
}

}  // namespace

LinComb<Tableau> PSym::product(const Tableau& p, const Tableau& q) const {
  LinComb<Tableau> out;
  const int m = p.size();
  if (q.empty()) return LinComb<Tableau>::term(p);
  if (p.empty()) return LinComb<Tableau>::term(q);
  for (const auto& r : standard_tableaux(m + q.size())) {
    if (restrict_to(r, m) != p) continue;
    if (standardize(jdt_rectify(skew_difference(r, p))) == q) out.add_term(r, 1);
  }
  return out;
}

LinComb<Tensor2<Tableau>> PSym::coproduct(const Tableau& r) const {
  LinComb<Tensor2<Tableau>> out;
  if (r.empty()) {
    out.add_term({r, r}, 1);
    return out;
  }
  for (const auto& pi : knuth_class(r)) {
    const auto& v = pi.oneline();
    for (std::size_t i = 0; i <= v.size(); ++i) {
      Word u(std::vector<int>(v.begin(), v.begin() + i));
      Word w(std::vector<int>(v.begin() + i, v.end()));
      if (!is_row_word(u) || !is_row_word(w)) continue;
      out.add_term({standardize(rsk_insert(u)), standardize(rsk_insert(w))}, 1);
    }
  }
  return out;
}

std::string PSym::format(const Tableau& t) const {
  if (t.empty()) return "1";
  return "P[" + hopf::format(t) + "]";
}

Tableau PSym::parse(std::string_view text) const {
  if (text == "1") return {};
  std::size_t offset = 0;
  if (text.size() >= 3 && text.substr(0, 2) == "P[") {
    if (text.back() != ']') throw ParseError("expected ']'", text.size());
    text = text.substr(2, text.size() - 3);
    offset = 2;
  }
  Tableau t;
  try {
    t = parse_tableau(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.position() + offset);
  }
  if (!is_standard(t)) throw ParseError("tableau is not standard", offset);
  return t;
}

LinComb<Permutation> psym_embed(const Tableau& p) {
  LinComb<Permutation> out;
  if (p.empty()) return LinComb<Permutation>::term(Permutation{});
  for (auto& pi : knuth_class(p)) out.add_term(std::move(pi), 1);
  return out;
}

LinComb<Permutation> psym_embed(const LinComb<Tableau>& a) {
  return linear_extend([](const Tableau& t) { return psym_embed(t); }, a);
}

std::optional<LinComb<Tableau>> psym_regroup(const LinComb<Permutation>& a) {
  std::map<Tableau, Scalar> seen;
  for (const auto& [pi, c] : a) {
    Tableau t = rsk_insert(pi);
    auto [it, fresh] = seen.emplace(t, c);
    if (!fresh && it->second != c) return std::nullopt;
  }
  LinComb<Tableau> out;
  for (const auto& [t, c] : seen) {
    if (t.empty()) {
      out.add_term(t, c);
      continue;
    }
    for (const auto& pi : knuth_class(t))
      if (a.coefficient(pi) != c) return std::nullopt;
    out.add_term(t, c);
  }
  return out;
}

LinComb<Tableau> psym_antipode(TakeuchiEvaluator<SSym>& ev, const Tableau& p) {
  auto grouped = psym_regroup(ev.antipode(psym_embed(p)));
  if (!grouped) throw std::runtime_error("antipode of " + format(p) + " is not constant on Knuth classes");
  return *grouped;
}

LinComb<Tableau> psym_hook_prediction(const std::vector<int>& lambda) {
  int n = 0;
  for (int x : lambda) n += x;
  return LinComb<Tableau>::term(column_superstandard(conjugate(lambda)), n % 2 == 0 ? 1 : -1);
}

std::vector<HookInstance> psym_hook_check(TakeuchiEvaluator<SSym>& ev, int n) {
  std::vector<HookInstance> out;
  for (int legs = 0; legs < n; ++legs) {
    HookInstance inst;
    inst.lambda = {n - legs};
    inst.lambda.insert(inst.lambda.end(), legs, 1);
    inst.predicted = psym_hook_prediction(inst.lambda);
    inst.computed = psym_antipode(ev, column_superstandard(inst.lambda));
    inst.pass = inst.predicted == inst.computed;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hopf
