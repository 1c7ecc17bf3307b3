#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopf/graph.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Incidence Hopf algebra on isomorphism classes of simple graphs.
class GraphAlgebra {
 public:
  using key_type = CanonGraph;

  std::size_t degree(const CanonGraph& g) const { return static_cast<std::size_t>(g.n()); }
  LinComb<CanonGraph> product(const CanonGraph& a, const CanonGraph& b) const;
  // Sum over all 2^n ordered vertex bipartitions, empty blocks included.
  LinComb<Tensor2<CanonGraph>> coproduct(const CanonGraph& g) const;
  CanonGraph unit() const;
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // Sum over flats F of (-1)^{c(F)} a(G/F) [F].
  LinComb<CanonGraph> antipode_closed(const CanonGraph& g) const;

  // "G[n=3;edges=1-2]", "1" for the empty graph. parse also accepts the bare
  // graph grammar.
  std::string format(const CanonGraph& g) const;
  CanonGraph parse(std::string_view text) const;
};

}  // namespace hopf
