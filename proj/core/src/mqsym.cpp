#include "hopf/mqsym.hpp"

#include <stdexcept>

#include "hopf/qsym.hpp"
#include "hopf/ribbon.hpp"

namespace hopf {

LinComb<Composition> MQSym::product(const Composition& a, const Composition& b) const {
  LinComb<Composition> out;
  if (degree(a) + degree(b) > cap_) return out;
  Word wa = canonical_model(a);
  Word wb = shift(canonical_model(b), a.size());
  for (const auto& w : multishuffle(wa, wb, cap_)) out.add_term(descent_composition(w), 1);
  return out;
}

LinComb<Tensor2<Composition>> MQSym::coproduct(const Composition& a) const {
  LinComb<Tensor2<Composition>> out;
  for (auto& split : cut_edge_splits(a)) out.add_term(split, 1);
  if (!a.empty())
    for (auto& split : cut_cell_splits(a)) out.add_term(split, 1);
  return out;
}

LinComb<Composition> MQSym::antipode_closed(const Composition& a) const {
  if (degree(a) > cap_) throw std::invalid_argument("composition exceeds the degree cap");
  LinComb<Composition> out;
  if (a.empty()) return LinComb<Composition>::term(a);
  const Composition at = transpose(a);
  for (int size = a.size(); size <= static_cast<int>(cap_); ++size)
    for (const auto& b : compositions_of(size)) {
      const auto c = collapse_count(b, at);
      if (c) out.add_term(b, size % 2 == 0 ? Scalar(c) : Scalar(-Scalar(c)));
    }
  return out;
}

std::string MQSym::format(const Composition& a) const { return format_bracketed_composition(a, "F~"); }
Composition MQSym::parse(std::string_view t) const { return parse_bracketed_composition(t, "F~"); }

}  // namespace hopf
