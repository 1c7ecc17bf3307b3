#include "hopf/graph_algebra.hpp"

#include "hopf/errors.hpp"

namespace hopf {

LinComb<CanonGraph> GraphAlgebra::product(const CanonGraph& a, const CanonGraph& b) const {
  return LinComb<CanonGraph>::term(canonical_form(disjoint_union(a.graph(), b.graph())));
}

LinComb<Tensor2<CanonGraph>> GraphAlgebra::coproduct(const CanonGraph& g) const {
  LinComb<Tensor2<CanonGraph>> out;
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> left, right;
    for (int v = 1; v <= n; ++v) (mask >> (v - 1) & 1u ? left : right).push_back(v);
    out.add_term({canonical_form(g.graph().induced(left)), canonical_form(g.graph().induced(right))}, 1);
  }
  return out;
}

CanonGraph GraphAlgebra::unit() const { return canonical_form(Graph(0, {})); }

LinComb<CanonGraph> GraphAlgebra::antipode_closed(const CanonGraph& g) const {
  LinComb<CanonGraph> out;
  for (const auto& f : flats(g.graph())) {
    const int c = count_components(g.n(), f);
    const Scalar a = acyclic_orientation_count(contract(g.graph(), f).graph());
    out.add_term(canonical_form(Graph(g.n(), f)), c % 2 == 0 ? a : Scalar(-a));
  }
  return out;
}

std::string GraphAlgebra::format(const CanonGraph& g) const {
  if (g.n() == 0) return "1";
  return "G[" + hopf::format(g) + "]";
}

CanonGraph GraphAlgebra::parse(std::string_view text) const {
  if (text == "1") return unit();
  if (text.size() >= 3 && text.substr(0, 2) == "G[") {
    if (text.back() != ']') throw ParseError("expected ']'", text.size());
    text = text.substr(2, text.size() - 3);
  }
  return canonical_form(parse_graph(text));
}

}  // namespace hopf
