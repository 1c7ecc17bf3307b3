#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/combinatorics.hpp"

namespace hopf {

using Edge = std::pair<int, int>;  // u < v, vertices 1..n

// Simple graph on [n]; edges kept sorted and deduplicated.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  // Neighbour bitmask of vertex v (bit u-1 set for each neighbour u).
  std::uint32_t neighbours(int v) const;

  Graph induced(const std::vector<int>& vertices) const;
  Graph relabel(const std::vector<int>& new_label) const;  // new_label[v-1]

  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

constexpr int kMaxCanonVertices = 8;

// Isomorphism-class representative: least sorted edge list over all relabelings.
class CanonGraph {
 public:
  CanonGraph() = default;
  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  const std::vector<Edge>& edges() const { return g_.edges(); }
  friend auto operator<=>(const CanonGraph&, const CanonGraph&) = default;

 private:
  friend CanonGraph canonical_form(const Graph& g);
  explicit CanonGraph(Graph g) : g_(std::move(g)) {}
  Graph g_;
};

// Throws SizeBoundError for more than kMaxCanonVertices vertices.
CanonGraph canonical_form(const Graph& g);

// "n=4;edges=1-2,2-3"; the edge list may be empty ("n=3;edges=").
Graph parse_graph(std::string_view text);
std::string format(const Graph& g);
inline std::string format(const CanonGraph& g) { return format(g.graph()); }
// Edge subset "1-2,3-4" (possibly empty).
std::vector<Edge> parse_edge_list(std::string_view text);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph edgeless_graph(int n);

// Every canonical graph on n vertices.
std::vector<CanonGraph> all_graphs(int n);

int count_components(int n, const std::vector<Edge>& edges);
bool is_flat(const Graph& g, const std::vector<Edge>& f);
// All flats, as sorted edge subsets.
std::vector<std::vector<Edge>> flats(const Graph& g);

struct Contraction {
  Graph quotient;
  std::vector<int> component;  // component[v-1] = vertex of G/F containing v
};
// Components of (V,F) become vertices 1..c ordered by their least vertex.
Contraction contract_labeled(const Graph& g, const std::vector<Edge>& f);
CanonGraph contract(const Graph& g, const std::vector<Edge>& f);

std::uint64_t acyclic_orientation_count(const Graph& g);
bool is_independent(const Graph& g, const std::vector<int>& vertices);

struct Orientation {
  int n = 0;
  std::vector<Edge> arcs;  // (tail, head)
  bool is_acyclic() const;
};

// u -> v whenever u lies in an earlier block than v. Blocks must be independent.
Orientation orientation_from_partition(const Graph& g, const OrderedSetPartition& pi);
// Repeatedly remove the largest source; returns the singleton blocks in order.
OrderedSetPartition canonical_partition(const Orientation& o);

// True when the union of the induced subgraphs on the blocks has edge set f.
bool induces(const Graph& g, const std::vector<Edge>& f, const OrderedSetPartition& pi);
std::vector<OrderedSetPartition> partitions_inducing(const Graph& g, const std::vector<Edge>& f);
// One step of the split/merge involution on partitions inducing f.
OrderedSetPartition graph_involution_step(const Graph& g, const std::vector<Edge>& f,
                                          const OrderedSetPartition& pi);

}  // namespace hopf
