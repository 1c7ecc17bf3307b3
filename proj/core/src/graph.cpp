#include "hopf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hopf/errors.hpp"

namespace hopf {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 31) throw SizeBoundError("graphs are limited to 31 vertices");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw std::invalid_argument("edge endpoint outside 1..n");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::uint32_t Graph::neighbours(int v) const {
  std::uint32_t m = 0;
  for (auto [a, b] : edges_) {
    if (a == v) m |= 1u << (b - 1);
    if (b == v) m |= 1u << (a - 1);
  }
  return m;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> label(n_ + 1, 0);
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) label[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> e;
  for (auto [a, b] : edges_)
    if (label[a] && label[b]) e.emplace_back(label[a], label[b]);
  return Graph(static_cast<int>(sorted.size()), std::move(e));
}

Graph Graph::relabel(const std::vector<int>& new_label) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [a, b] : edges_) e.emplace_back(new_label[a - 1], new_label[b - 1]);
  return Graph(n_, std::move(e));
}

CanonGraph canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonVertices)
    throw SizeBoundError("canonical form supports at most " + std::to_string(kMaxCanonVertices) + " vertices");
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Edge> best;
  bool have = false;
  std::vector<Edge> cur(g.edges().size());
  do {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      int a = perm[g.edges()[i].first - 1], b = perm[g.edges()[i].second - 1];
      cur[i] = a < b ? Edge{a, b} : Edge{b, a};
    }
    std::sort(cur.begin(), cur.end());
    if (!have || cur < best) {
      best = cur;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonGraph(Graph(g.n(), std::move(best)));
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  if (text.empty()) return edges;
  std::size_t i = 0;
  auto number = [&]() {
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError("vertex number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected vertex number", i);
    return static_cast<int>(v);
  };
  while (true) {
    int a = number();
    if (i >= text.size() || text[i] != '-') throw ParseError("expected '-'", i);
    ++i;
    int b = number();
    edges.emplace_back(a, b);
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return edges;
}

Graph parse_graph(std::string_view text) {
  if (text.rfind("n=", 0) != 0) throw ParseError("graph must start with 'n='", 0);
  std::size_t i = 2;
  long n = 0;
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    n = n * 10 + (text[i] - '0');
    if (n > 1000) throw ParseError("vertex count too large", start);
    ++i;
  }
  if (i == start) throw ParseError("expected vertex count", i);
  std::vector<Edge> edges;
  if (i < text.size()) {
    constexpr std::string_view sep = ";edges=";
    if (text.substr(i, sep.size()) != sep) throw ParseError("expected ';edges='", i);
    i += sep.size();
    try {
      edges = parse_edge_list(text.substr(i));
    } catch (const ParseError& e) {
      throw ParseError("bad edge list", i + e.position());
    }
  }
  for (auto [a, b] : edges)
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw ParseError("edge endpoint outside 1..n or loop", i);
  if (n > 31) throw ParseError("too many vertices", 2);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + ";edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), std::move(e));
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

std::vector<CanonGraph> all_graphs(int n) {
  if (n > 6) throw SizeBoundError("all_graphs enumerates at most 6 vertices");
  std::vector<Edge> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  std::set<CanonGraph> found;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (1ul << i)) e.push_back(slots[i]);
    found.insert(canonical_form(Graph(n, std::move(e))));
  }
  return {found.begin(), found.end()};
}

namespace {

std::vector<int> component_labels(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Roots are the least vertex of each component; number them in that order.
  std::vector<int> label(n, 0), root_label(n + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v) {
    int r = find(v);
    if (!root_label[r]) root_label[r] = ++next;
    label[v - 1] = root_label[r];
  }
  return label;
}

bool connected_subset(const Graph& g, std::uint32_t mask) {
  if (!mask) return true;
  std::uint32_t seen = mask & (~mask + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    int v = __builtin_ctz(frontier) + 1;
    frontier &= frontier - 1;
    std::uint32_t next = g.neighbours(v) & mask & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen == mask;
}

void set_partitions_rec(int v, int n, std::vector<std::uint32_t>& blocks,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (v > n) {
    out.push_back(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= 1u << (v - 1);
    set_partitions_rec(v + 1, n, blocks, out);
    blocks[b] &= ~(1u << (v - 1));
  }
  blocks.push_back(1u << (v - 1));
  set_partitions_rec(v + 1, n, blocks, out);
  blocks.pop_back();
}

}  // namespace

int count_components(int n, const std::vector<Edge>& edges) {
  auto label = component_labels(n, edges);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end());
}

bool is_flat(const Graph& g, const std::vector<Edge>& f) {
  auto label = component_labels(g.n(), f);
  for (auto [a, b] : f)
    if (!g.adjacent(a, b)) return false;
  std::set<Edge> fs(f.begin(), f.end());
  for (auto [a, b] : g.edges())
    if (label[a - 1] == label[b - 1] && !fs.count({a, b})) return false;
  return true;
}

std::vector<std::vector<Edge>> flats(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> partitions;
  std::vector<std::uint32_t> blocks;
  set_partitions_rec(1, g.n(), blocks, partitions);
  std::vector<std::vector<Edge>> out;
  for (const auto& p : partitions) {
    bool ok = std::all_of(p.begin(), p.end(), [&](std::uint32_t m) { return connected_subset(g, m); });
    if (!ok) continue;
    std::vector<Edge> f;
    for (auto [a, b] : g.edges())
      for (std::uint32_t m : p)
        if ((m >> (a - 1) & 1) && (m >> (b - 1) & 1)) f.emplace_back(a, b);
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Contraction contract_labeled(const Graph& g, const std::vector<Edge>& f) {
  auto label = component_labels(g.n(), f);
  int c = label.empty() ? 0 : *std::max_element(label.begin(), label.end());
  std::vector<Edge> e;
  for (auto [a, b] : g.edges())
    if (label[a - 1] != label[b - 1]) e.emplace_back(label[a - 1], label[b - 1]);
  return {Graph(c, std::move(e)), std::move(label)};
}

CanonGraph contract(const Graph& g, const std::vector<Edge>& f) {
  return canonical_form(contract_labeled(g, f).quotient);
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

std::uint64_t acyclic_orientation_count(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw SizeBoundError("acyclic orientation count supports at most 20 vertices");
  std::vector<std::uint32_t> nb(n);
  for (int v = 1; v <= n; ++v) nb[v - 1] = g.neighbours(v);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // a(S) = sum over nonempty independent I in S of (-1)^{|I|+1} a(S \ I),
  // grouping orientations by their set of sources.
  std::vector<std::int64_t> a(std::size_t(full) + 1, 0);
  std::vector<char> indep(std::size_t(full) + 1, 0);
  indep[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = __builtin_ctz(s);
    std::uint32_t rest = s & (s - 1);
    indep[s] = indep[rest] && !(nb[v] & rest);
  }
  a[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::int64_t total = 0;
    for (std::uint32_t i = s; i; i = (i - 1) & s) {
      if (!indep[i]) continue;
      std::int64_t term = a[s & ~i];
      total += (__builtin_popcount(i) % 2 == 1) ? term : -term;
    }
    a[s] = total;
  }
  return static_cast<std::uint64_t>(a[full]);
}

bool Orientation::is_acyclic() const {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (auto [t, h] : arcs) {
    out[t].push_back(h);
    ++indeg[h];
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
    if (!indeg[v]) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int h : out[v])
      if (--indeg[h] == 0) stack.push_back(h);
  }
  return removed == n;
}

Orientation orientation_from_partition(const Graph& g, const OrderedSetPartition& pi) {
  std::vector<int> block(g.n() + 1, -1);
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (!is_independent(g, pi.blocks[b])) throw std::invalid_argument("partition block is not independent");
    for (int v : pi.blocks[b]) {
      if (v < 1 || v > g.n() || block[v] != -1) throw std::invalid_argument("not an ordered set partition of the vertices");
      block[v] = static_cast<int>(b);
    }
  }
  for (int v = 1; v <= g.n(); ++v)
    if (block[v] == -1) throw std::invalid_argument("not an ordered set partition of the vertices");
  Orientation o{g.n(), {}};
  for (auto [a, b] : g.edges()) o.arcs.push_back(block[a] < block[b] ? Edge{a, b} : Edge{b, a});
  std::sort(o.arcs.begin(), o.arcs.end());
  return o;
}

OrderedSetPartition canonical_partition(const Orientation& o) {
  if (!o.is_acyclic()) throw std::invalid_argument("canonical partition needs an acyclic orientation");
  std::vector<int> indeg(o.n + 1, 0);
  for (auto [t, h] : o.arcs) ++indeg[h];
  std::vector<char> removed(o.n + 1, 0);
  OrderedSetPartition pi;
  for (int step = 0; step < o.n; ++step) {
    int best = 0;
    for (int v = o.n; v >= 1; --v)
      if (!removed[v] && indeg[v] == 0) {
        best = v;
        break;
      }
    removed[best] = 1;
    for (auto [t, h] : o.arcs)
      if (t == best) --indeg[h];
    pi.blocks.push_back({best});
  }
  return pi;
}

bool induces(const Graph& g, const std::vector<Edge>& f, const OrderedSetPartition& pi) {
  std::vector<int> block(g.n() + 1, -1);
  for (std::size_t b = 0; b < pi.blocks.size(); ++b)
    for (int v : pi.blocks[b]) {
      if (v < 1 || v > g.n() || block[v] != -1) return false;
      block[v] = static_cast<int>(b);
    }
  for (int v = 1; v <= g.n(); ++v)
    if (block[v] == -1) return false;
  std::vector<Edge> inside;
  for (auto [a, b] : g.edges())
    if (block[a] == block[b]) inside.emplace_back(a, b);
  std::vector<Edge> fs = f;
  for (auto& [a, b] : fs)
    if (a > b) std::swap(a, b);
  std::sort(fs.begin(), fs.end());
  return inside == fs;
}

namespace {

void independent_osp_rec(const Graph& g, std::vector<int> rest, std::vector<std::vector<int>>& blocks,
                         std::vector<OrderedSetPartition>& out) {
  if (rest.empty()) {
    out.push_back({blocks});
    return;
  }
  const std::size_t m = rest.size();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> block, remaining;
    for (std::size_t i = 0; i < m; ++i) (mask & (1ul << i) ? block : remaining).push_back(rest[i]);
    if (!is_independent(g, block)) continue;
    blocks.push_back(std::move(block));
    independent_osp_rec(g, remaining, blocks, out);
    blocks.pop_back();
  }
}

// Expand a partition of the contracted vertices into one of the original vertices.
OrderedSetPartition lift(const OrderedSetPartition& w, const std::vector<int>& component) {
  OrderedSetPartition pi;
  for (const auto& block : w.blocks) {
    std::vector<int> vs;
    for (std::size_t v = 0; v < component.size(); ++v)
      if (std::find(block.begin(), block.end(), component[v]) != block.end()) vs.push_back(static_cast<int>(v) + 1);
    pi.blocks.push_back(std::move(vs));
  }
  return pi;
}

}  // namespace

std::vector<OrderedSetPartition> partitions_inducing(const Graph& g, const std::vector<Edge>& f) {
  if (!is_flat(g, f)) throw std::invalid_argument("edge set is not a flat");
  auto c = contract_labeled(g, f);
  std::vector<int> verts(c.quotient.n());
  std::iota(verts.begin(), verts.end(), 1);
  std::vector<OrderedSetPartition> reduced;
  std::vector<std::vector<int>> blocks;
  independent_osp_rec(c.quotient, verts, blocks, reduced);
  std::vector<OrderedSetPartition> out;
  for (const auto& w : reduced) out.push_back(lift(w, c.component));
  std::sort(out.begin(), out.end());
  return out;
}

OrderedSetPartition graph_involution_step(const Graph& g, const std::vector<Edge>& f,
                                          const OrderedSetPartition& pi) {
  if (!induces(g, f, pi)) throw std::invalid_argument("partition does not induce the flat");
  auto c = contract_labeled(g, f);
  OrderedSetPartition w;
  for (const auto& block : pi.blocks) {
    std::set<int> comps;
    for (int v : block) comps.insert(c.component[v - 1]);
    w.blocks.emplace_back(comps.begin(), comps.end());
  }
  auto phi = canonical_partition(orientation_from_partition(c.quotient, w));
  std::size_t i = 0;
  while (i < w.blocks.size() && w.blocks[i] == phi.blocks[i]) ++i;
  if (i == w.blocks.size()) return pi;
  const int b = phi.blocks[i][0];
  std::size_t j = i;
  while (std::find(w.blocks[j].begin(), w.blocks[j].end(), b) == w.blocks[j].end()) ++j;
  if (w.blocks[j].size() >= 2) {
    auto& block = w.blocks[j];
    block.erase(std::find(block.begin(), block.end(), b));
    w.blocks.insert(w.blocks.begin() + j + 1, std::vector<int>{b});
  } else {
    auto& prev = w.blocks[j - 1];
    prev.push_back(b);
    std::sort(prev.begin(), prev.end());
    w.blocks.erase(w.blocks.begin() + j);
  }
  return lift(w, c.component);
}

}  // namespace hopf
