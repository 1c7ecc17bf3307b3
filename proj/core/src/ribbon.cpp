#include "hopf/ribbon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopf {

std::vector<Join> joins(const Composition& a) {
  std::vector<Join> j;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) j.push_back(Join::vertical);
    for (int c = 1; c < a[i]; ++c) j.push_back(Join::horizontal);
  }
  return j;
}

Composition from_joins(const std::vector<Join>& j) {
  std::vector<int> parts{1};
  for (Join x : j) {
    if (x == Join::horizontal)
      ++parts.back();
    else
      parts.push_back(1);
  }
  return Composition(std::move(parts));
}

Composition sub_ribbon(const Composition& a, std::size_t first_cell, std::size_t last_cell) {
  auto j = joins(a);
  if (first_cell > last_cell || last_cell >= j.size() + 1) throw std::out_of_range("cell range outside ribbon");
  return from_joins(std::vector<Join>(j.begin() + first_cell, j.begin() + last_cell));
}

std::vector<std::pair<int, int>> ribbon_cells(const Composition& a) {
  std::vector<std::pair<int, int>> cells;
  if (a.empty()) return cells;
  const int top = static_cast<int>(a.length()) - 1;
  int row = top, col = 0;
  cells.emplace_back(row, col);
  for (Join x : joins(a)) {
    if (x == Join::horizontal)
      ++col;
    else
      --row;
    cells.emplace_back(row, col);
  }
  return cells;
}

std::vector<std::pair<Composition, Composition>> cut_edge_splits(const Composition& a) {
  std::vector<std::pair<Composition, Composition>> out;
  const std::size_t n = static_cast<std::size_t>(a.size());
  out.emplace_back(Composition{}, a);
  for (std::size_t i = 1; i < n; ++i) out.emplace_back(sub_ribbon(a, 0, i - 1), sub_ribbon(a, i, n - 1));
  if (n > 0) out.emplace_back(a, Composition{});
  return out;
}

std::vector<std::pair<Composition, Composition>> cut_cell_splits(const Composition& a) {
  if (a.empty()) throw std::invalid_argument("cut-cell splits need a nonempty composition");
  std::vector<std::pair<Composition, Composition>> out;
  const std::size_t n = static_cast<std::size_t>(a.size());
  for (std::size_t c = 0; c < n; ++c) out.emplace_back(sub_ribbon(a, 0, c), sub_ribbon(a, c, n - 1));
  return out;
}

Composition transpose(const Composition& a) {
  if (a.empty()) return a;
  auto j = joins(a);
  std::reverse(j.begin(), j.end());
  for (Join& x : j) x = x == Join::horizontal ? Join::vertical : Join::horizontal;
  return from_joins(j);
}

Tableau superstandard_fill(const Composition& a) {
  std::vector<std::vector<int>> rows(a.length());
  int next = 1;
  for (std::size_t r = 0; r < a.length(); ++r) {
    const int len = a[a.length() - 1 - r];
    for (int c = 0; c < len; ++c) rows[r].push_back(next++);
  }
  return Tableau(std::move(rows));
}

Word canonical_model(const Composition& a) { return row_word(superstandard_fill(a)); }

namespace {

// Path positions: cell i sits at 2i, the edge after cell i at 2i+1.
void decomp_rec(const Composition& a, std::size_t n, std::size_t max_cuts, std::size_t min_pos,
                std::vector<std::size_t>& cuts, std::vector<Decomposition>& out) {
  {
    Decomposition d{a, {}, {}};
    std::size_t start = 0;
    for (std::size_t p : cuts) {
      std::size_t cell = p / 2;
      d.pieces.push_back(sub_ribbon(a, start, cell));
      if (p % 2 == 0) {
        d.cuts.push_back(Cut::cell);
        start = cell;
      } else {
        d.cuts.push_back(Cut::edge);
        start = cell + 1;
      }
    }
    d.pieces.push_back(sub_ribbon(a, start, n - 1));
    out.push_back(std::move(d));
  }
  if (cuts.size() == max_cuts) return;
  for (std::size_t p = min_pos; p <= 2 * n - 2; ++p) {
    cuts.push_back(p);
    // A cell may be cut again, an edge only once.
    decomp_rec(a, n, max_cuts, p % 2 == 0 ? p : p + 1, cuts, out);
    cuts.pop_back();
  }
}

}  // namespace

std::vector<Decomposition> decompositions(const Composition& a, std::size_t max_pieces) {
  if (a.empty()) throw std::invalid_argument("decompositions need a nonempty composition");
  if (max_pieces == 0) return {};
  std::vector<Decomposition> out;
  std::vector<std::size_t> cuts;
  decomp_rec(a, static_cast<std::size_t>(a.size()), max_pieces - 1, 0, cuts, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> components(const Decomposition& d) {
  std::vector<Composition> out;
  std::vector<Join> current = joins(d.pieces[0]);
  for (std::size_t i = 0; i < d.cuts.size(); ++i) {
    auto next = joins(d.pieces[i + 1]);
    if (d.cuts[i] == Cut::cell) {
      current.insert(current.end(), next.begin(), next.end());
    } else {
      out.push_back(from_joins(current));
      current = std::move(next);
    }
  }
  out.push_back(from_joins(current));
  return out;
}

std::vector<Word> superstandard_piece_words(const Decomposition& d) {
  auto cells = ribbon_cells(d.whole);
  const std::size_t n = cells.size();
  // Cell range covered by each piece along the path.
  std::vector<std::pair<std::size_t, std::size_t>> range;
  std::size_t start = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    std::size_t len = static_cast<std::size_t>(d.pieces[i].size());
    range.emplace_back(start, start + len - 1);
    if (i < d.cuts.size()) start = d.cuts[i] == Cut::cell ? start + len - 1 : start + len;
  }
  if (range.back().second != n - 1) throw std::logic_error("decomposition does not cover its composition");
  // Copies of each cell, one per piece containing it, in piece order.
  std::vector<std::vector<std::size_t>> owners(n);
  for (std::size_t i = 0; i < range.size(); ++i)
    for (std::size_t c = range[i].first; c <= range[i].second; ++c) owners[c].push_back(i);
  std::map<std::pair<std::size_t, std::size_t>, int> label;  // (cell, piece) -> label
  int next = 1;
  int top = cells.front().first;
  for (int row = 0; row <= top; ++row)
    for (std::size_t c = 0; c < n; ++c)
      if (cells[c].first == row)
        for (std::size_t piece : owners[c]) label[{c, piece}] = next++;
  std::vector<Word> words;
  for (std::size_t i = 0; i < range.size(); ++i) {
    std::vector<int> w;
    for (std::size_t c = range[i].first; c <= range[i].second; ++c) w.push_back(label.at({c, i}));
    words.emplace_back(std::move(w));
  }
  return words;
}

std::string format(const Decomposition& d) {
  std::string s;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (i) s += d.cuts[i - 1] == Cut::cell ? "*" : "|";
    s += "(" + format_comma(d.pieces[i].parts()) + ")";
  }
  return s;
}

std::uint64_t collapse_count(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 1 : 0;
  auto ja = joins(a);
  auto jb = joins(b);
  // Each collapse keeps a subsequence of the joins of a; count embeddings.
  std::vector<std::uint64_t> ways(jb.size() + 1, 0);
  ways[0] = 1;
  for (Join x : ja)
    for (std::size_t k = jb.size(); k-- > 0;)
      if (jb[k] == x) ways[k + 1] += ways[k];
  return ways[jb.size()];
}

}  // namespace hopf
