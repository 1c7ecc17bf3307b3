#include "hopf/nsym.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopf/errors.hpp"
#include "hopf/qsym.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

namespace {

Composition drop_zeros(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v)
    if (x) out.push_back(x);
  return Composition(std::move(out));
}

Composition strip_prefix(std::string_view t, char letter) {
  if (t.size() >= 2 && t[0] == letter && t[1] == ':') {
    try {
      return parse_composition(t.substr(2));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.position() + 2);
    }
  }
  return parse_bracketed_composition(t, std::string(1, letter));
}

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

LinComb<Composition> shapes_signed(const std::vector<Tableau>& ts, const Scalar& sign) {
  LinComb<Composition> out;
  for (const auto& t : ts) out.add_term(Composition(t.shape()), sign);
  return out;
}

}  // namespace

LinComb<Tensor2<Composition>> NSymH::coproduct(const Composition& a) const {
  LinComb<Tensor2<Composition>> out;
  const std::size_t k = a.length();
  std::vector<int> left(k, 0);
  while (true) {
    std::vector<int> right(k);
    for (std::size_t i = 0; i < k; ++i) right[i] = a[i] - left[i];
    out.add_term({drop_zeros(left), drop_zeros(right)}, 1);
    std::size_t i = 0;
    while (i < k && left[i] == a[i]) left[i++] = 0;
    if (i == k) break;
    ++left[i];
  }
  return out;
}

std::string NSymH::format(const Composition& a) const { return format_bracketed_composition(a, "H"); }
Composition NSymH::parse(std::string_view t) const { return strip_prefix(t, 'H'); }

std::string format_immaculate(const Composition& a) { return format_bracketed_composition(a, "S"); }
Composition parse_immaculate(std::string_view t) { return strip_prefix(t, 'S'); }

LinComb<Composition> immaculate_to_h(const Composition& a) {
  LinComb<Composition> out;
  const int k = static_cast<int>(a.length());
  std::vector<int> sigma(k);
  for (int i = 0; i < k; ++i) sigma[i] = i;
  do {
    std::vector<int> idx(k);
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      idx[i] = a[i] + sigma[i] - i;
      zero = idx[i] < 0;
    }
    if (zero) continue;
    out.add_term(drop_zeros(idx), inversions(sigma) % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

LinComb<Composition> immaculate_to_h(const LinComb<Composition>& s) {
  return linear_extend([](const Composition& a) { return immaculate_to_h(a); }, s);
}

LinComb<Composition> h_to_immaculate(const LinComb<Composition>& h) {
  // immaculate_to_h(a) is H_a plus lexicographically larger keys of the same
  // size, so the least remaining key can always be eliminated.
  LinComb<Composition> rest = h;
  LinComb<Composition> out;
  while (!rest.empty()) {
    const auto [key, c] = *rest.begin();
    Scalar coeff = c;
    out.add_term(key, coeff);
    rest.add_scaled(immaculate_to_h(key), -coeff);
  }
  return out;
}

LinComb<Composition> nsym_s_of_h_closed(const Composition& a) {
  const Scalar sign = a.size() % 2 == 0 ? 1 : -1;
  if (a.empty()) return LinComb<Composition>::term(a);
  return shapes_signed(dual_immaculate_tableaux(reversal(a).parts()), sign);
}

LinComb<Composition> nsym_antipode_hook(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("hook needs n >= 1 and k >= 0");
  std::vector<int> parts{k + 1};
  parts.insert(parts.end(), n - 1, 1);
  return LinComb<Composition>::term(Composition(std::move(parts)), (n + k) % 2 == 0 ? 1 : -1);
}

LinComb<Composition> nsym_antipode_tworow(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("two-row shape needs m, n >= 1");
  const Scalar sign = (m + n) % 2 == 0 ? 1 : -1;
  using Row = std::vector<std::optional<int>>;
  FrozenSpec t1;
  for (int r = 0; r + 1 < n; ++r) t1.rows.push_back(Row{1});
  t1.rows.push_back(Row{1, 2});
  t1.content = {n, m};
  LinComb<Composition> out = shapes_signed(frozen_set(t1), sign);
  if (n >= 2) {
    FrozenSpec t2;
    for (int r = 0; r + 1 < n; ++r) t2.rows.push_back(Row{1});
    t2.rows.push_back(Row{std::nullopt});
    t2.content = {n - 1, m + 1};
    out += shapes_signed(frozen_set(t2), -sign);
  }
  return out;
}

LinComb<Composition> nsym_antipode_immaculate(TakeuchiEvaluator<NSymH>& ev, const Composition& a) {
  return h_to_immaculate(ev.antipode(immaculate_to_h(a)));
}

}  // namespace hopf
