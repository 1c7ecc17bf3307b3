#include "hopf/qsym.hpp"

#include "hopf/errors.hpp"
#include "hopf/ribbon.hpp"

namespace hopf {

Composition parse_bracketed_composition(std::string_view text, std::string_view prefix) {
  if (text == "1") return {};
  std::size_t offset = 0;
  if (text.size() >= prefix.size() + 2 && text.substr(0, prefix.size()) == prefix && text[prefix.size()] == '[') {
    if (text.back() != ']') throw ParseError("expected ']'", text.size());
    offset = prefix.size() + 1;
    text = text.substr(offset, text.size() - offset - 1);
    if (text.empty()) return {};
  }
  try {
    return parse_composition(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), offset + e.position());
  }
}

std::string format_bracketed_composition(const Composition& a, std::string_view prefix) {
  if (a.empty()) return "1";
  return std::string(prefix) + "[" + format_comma(a.parts()) + "]";
}

LinComb<Tensor2<Composition>> QSymMonomial::coproduct(const Composition& a) const {
  LinComb<Tensor2<Composition>> out;
  const auto& p = a.parts();
  for (std::size_t i = 0; i <= p.size(); ++i)
    out.add_term({Composition(std::vector<int>(p.begin(), p.begin() + i)),
                  Composition(std::vector<int>(p.begin() + i, p.end()))},
                 1);
  return out;
}

LinComb<Composition> QSymMonomial::antipode_closed(const Composition& a) const {
  LinComb<Composition> out;
  const Scalar sign = a.length() % 2 == 0 ? 1 : -1;
  for (const auto& b : coarsenings(reversal(a))) out.add_term(b, sign);
  return out;
}

LinComb<Composition> QSymFundamental::product(const Composition& a, const Composition& b) const {
  Word wa = canonical_model(a);
  Word wb = shift(canonical_model(b), a.size());
  LinComb<Composition> out;
  for (const auto& [w, c] : shuffle(wa, wb)) out.add_term(descent_composition(w), c);
  return out;
}

LinComb<Tensor2<Composition>> QSymFundamental::coproduct(const Composition& a) const {
  LinComb<Tensor2<Composition>> out;
  for (auto& split : cut_edge_splits(a)) out.add_term(split, 1);
  return out;
}

LinComb<Composition> QSymFundamental::antipode_closed(const Composition& a) const {
  return LinComb<Composition>::term(transpose(a), a.size() % 2 == 0 ? 1 : -1);
}

LinComb<Composition> fundamental_to_monomial(const LinComb<Composition>& f) {
  LinComb<Composition> out;
  for (const auto& [a, c] : f)
    for (const auto& b : refinements(a)) out.add_term(b, c);
  return out;
}

LinComb<Composition> monomial_to_fundamental(const LinComb<Composition>& m) {
  LinComb<Composition> out;
  for (const auto& [a, c] : m)
    for (const auto& b : refinements(a)) out.add_term(b, (b.length() - a.length()) % 2 == 0 ? c : Scalar(-c));
  return out;
}

}  // namespace hopf
