#include "hopf/tableau.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hopf/combinatorics.hpp"
#include "hopf/errors.hpp"

namespace hopf {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return s;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

Tableau parse_tableau(std::string_view text) {
  if (text == "-" || text.empty()) return {};
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    std::string_view piece = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    if (piece.empty()) throw ParseError("empty tableau row", start);
    std::vector<int> row;
    std::size_t i = 0;
    while (i < piece.size()) {
      std::size_t j = i;
      long value = 0;
      while (j < piece.size() && piece[j] >= '0' && piece[j] <= '9') {
        value = value * 10 + (piece[j] - '0');
        if (value > 1000000) throw ParseError("number too large", start + i);
        ++j;
      }
      if (j == i) throw ParseError("expected number", start + i);
      if (value < 1) throw ParseError("entries must be positive", start + i);
      row.push_back(static_cast<int>(value));
      if (j < piece.size()) {
        if (piece[j] != ',') throw ParseError("expected ',' or '/'", start + j);
        ++j;
        if (j == piece.size()) throw ParseError("expected number", start + j);
      }
      i = j;
    }
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows));
}

std::string format(const Tableau& t) {
  if (t.empty()) return "-";
  std::string s;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (r) s += '/';
    s += format_comma(t.rows()[r]);
  }
  return s;
}

Word row_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return Word(std::move(w));
}

Tableau from_row_word(const Word& w, const std::vector<int>& shape) {
  int total = 0;
  for (int s : shape) total += s;
  if (total != static_cast<int>(w.length())) throw std::invalid_argument("shape does not match word length");
  std::vector<std::vector<int>> rows(shape.size());
  std::size_t pos = 0;
  for (std::size_t r = shape.size(); r-- > 0;) {
    rows[r].assign(w.begin() + pos, w.begin() + pos + shape[r]);
    pos += shape[r];
  }
  return Tableau(std::move(rows));
}

bool is_partition(const std::vector<int>& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1) return false;
    if (i && shape[i] > shape[i - 1]) return false;
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_partition(t.shape())) return false;
  std::vector<int> all;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      all.push_back(rows[r][c]);
      if (c && rows[r][c] <= rows[r][c - 1]) return false;
      if (r && rows[r][c] <= rows[r - 1][c]) return false;
    }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool is_dual_immaculate(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (rows[r][c] <= rows[r][c - 1]) return false;
    if (r && rows[r][0] < rows[r - 1][0]) return false;
  }
  return true;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> co;
  for (const auto& r : t.rows())
    for (int x : r) {
      if (x > static_cast<int>(co.size())) co.resize(x, 0);
      ++co[x - 1];
    }
  return co;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> c;
  if (lambda.empty()) return c;
  for (int j = 0; j < lambda[0]; ++j) {
    int count = 0;
    for (int p : lambda)
      if (p > j) ++count;
    c.push_back(count);
  }
  return c;
}

Tableau column_superstandard(const std::vector<int>& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("column superstandard tableau needs a partition");
  std::vector<std::vector<int>> rows(lambda.size());
  int next = 1;
  for (int col : conjugate(lambda))
    for (int r = 0; r < col; ++r) rows[r].push_back(next++);
  return Tableau(std::move(rows));
}

Tableau transpose(const Tableau& t) {
  auto conj = conjugate(t.shape());
  std::vector<std::vector<int>> rows(conj.size());
  for (const auto& r : t.rows())
    for (std::size_t c = 0; c < r.size(); ++c) rows[c].push_back(r[c]);
  return Tableau(std::move(rows));
}

Tableau rsk_insert(const Word& w) {
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    int carry = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        break;
      }
      std::swap(carry, *it);
    }
  }
  return Tableau(std::move(rows));
}

bool is_row_word(const Word& w) { return row_word(rsk_insert(w)) == w; }

std::vector<Permutation> knuth_class(const Tableau& p) {
  if (!is_standard(p)) throw std::invalid_argument("knuth_class needs a standard tableau");
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  auto start = row_word(p).letters();
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      int a = w[i], b = w[i + 1], c = w[i + 2];
      auto visit = [&](std::size_t x, std::size_t y) {
        auto v = w;
        std::swap(v[x], v[y]);
        if (seen.insert(v).second) queue.push_back(std::move(v));
      };
      if (std::min(b, c) < a && a < std::max(b, c)) visit(i + 1, i + 2);
      if (std::min(a, b) < c && c < std::max(a, b)) visit(i, i + 1);
    }
  }
  std::vector<Permutation> out;
  for (const auto& v : seen) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Tableau standardize(const Tableau& t) {
  std::vector<int> all;
  for (const auto& r : t.rows()) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  auto rows = t.rows();
  for (auto& r : rows)
    for (int& x : r) x = static_cast<int>(std::lower_bound(all.begin(), all.end(), x) - all.begin()) + 1;
  return Tableau(std::move(rows));
}

namespace {

void syt_rec(std::vector<int>& shape, int n, std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  if (n == 0) {
    out.emplace_back(rows);
    return;
  }
  // Remove n from an outer corner.
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] == 0) continue;
    bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    rows[r][shape[r] - 1] = n;
    --shape[r];
    syt_rec(shape, n - 1, rows, out);
    ++shape[r];
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const std::vector<int>& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("standard tableaux need a partition shape");
  std::vector<std::vector<int>> rows;
  int n = 0;
  for (int p : lambda) {
    rows.emplace_back(p, 0);
    n += p;
  }
  std::vector<int> shape = lambda;
  std::vector<Tableau> out;
  syt_rec(shape, n, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> standard_tableaux(int n) {
  std::vector<Tableau> out;
  for (const auto& lambda : partitions_of(n)) {
    auto part = standard_tableaux(lambda);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SkewTableau skew_difference(const Tableau& outer, const Tableau& inner_tableau) {
  SkewTableau s;
  const auto& inner_shape = inner_tableau.shape();
  for (std::size_t r = 0; r < outer.num_rows(); ++r) {
    int in = r < inner_shape.size() ? inner_shape[r] : 0;
    const auto& row = outer.rows()[r];
    if (in > static_cast<int>(row.size())) throw std::invalid_argument("inner shape does not fit");
    for (int c = 0; c < in; ++c)
      if (row[c] != inner_tableau.rows()[r][c]) throw std::invalid_argument("not a subtableau");
    s.inner.push_back(in);
    std::vector<std::optional<int>> cells(row.size());
    for (std::size_t c = in; c < row.size(); ++c) cells[c] = row[c];
    s.rows.push_back(std::move(cells));
  }
  if (inner_shape.size() > outer.num_rows()) throw std::invalid_argument("inner shape does not fit");
  return s;
}

Word skew_reading_word(const SkewTableau& s) {
  std::vector<int> w;
  for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it)
    for (const auto& cell : *it)
      if (cell) w.push_back(*cell);
  return Word(std::move(w));
}

Tableau jdt_rectify(SkewTableau s) {
  auto& grid = s.rows;
  auto filled = [&](std::size_t r, std::size_t c) {
    return r < grid.size() && c < grid[r].size() && grid[r][c].has_value() &&
           static_cast<int>(c) >= s.inner[r];
  };
  while (true) {
    std::size_t r = s.inner.size();
    while (r > 0 && s.inner[r - 1] == 0) --r;
    if (r == 0) break;
    --r;
    std::size_t c = s.inner[r] - 1;
    --s.inner[r];
    grid[r][c].reset();
    // Slide the hole toward the outer boundary.
    while (true) {
      bool right = filled(r, c + 1);
      bool below = filled(r + 1, c);
      if (!right && !below) break;
      if (right && (!below || *grid[r][c + 1] < *grid[r + 1][c])) {
        grid[r][c] = grid[r][c + 1];
        ++c;
      } else {
        grid[r][c] = grid[r + 1][c];
        ++r;
      }
      grid[r][c].reset();
    }
    grid[r].erase(grid[r].begin() + c);
    while (!grid.empty() && grid.back().empty()) {
      grid.pop_back();
      s.inner.pop_back();
    }
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : grid) {
    std::vector<int> out;
    for (const auto& cell : row) out.push_back(*cell);
    rows.push_back(std::move(out));
  }
  return Tableau(std::move(rows));
}

namespace {

void dual_imm_rec(std::vector<int>& remaining, std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  std::size_t j = 0;
  while (j < remaining.size() && remaining[j] == 0) ++j;
  if (j == remaining.size()) {
    out.emplace_back(rows);
    return;
  }
  // The next row must start with the smallest letter still to be placed,
  // otherwise that letter could never appear later.
  std::vector<int> larger;
  for (std::size_t k = j + 1; k < remaining.size(); ++k)
    if (remaining[k] > 0) larger.push_back(static_cast<int>(k));
  const std::size_t m = larger.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> row{static_cast<int>(j) + 1};
    --remaining[j];
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1ul << b)) {
        row.push_back(larger[b] + 1);
        --remaining[larger[b]];
      }
    rows.push_back(row);
    dual_imm_rec(remaining, rows, out);
    rows.pop_back();
    for (int x : row) ++remaining[x - 1];
  }
}

}  // namespace

std::vector<Tableau> dual_immaculate_tableaux(const std::vector<int>& co) {
  for (int v : co)
    if (v < 0) throw std::invalid_argument("content entries must be nonnegative");
  std::vector<int> remaining = co;
  std::vector<std::vector<int>> rows;
  std::vector<Tableau> out;
  dual_imm_rec(remaining, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const FrozenSpec& spec) {
  const auto& rows = spec.rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw std::invalid_argument("frozen rows must be nonempty");
    for (std::size_t c = 0; c + 1 < row.size(); ++c)
      if (!row[c]) throw std::invalid_argument("forced-empty cell must end its row");
    if (!row[0]) {
      if (r + 1 != rows.size()) throw std::invalid_argument("empty first-column cell must be at the bottom");
      if (row.size() != 1) throw std::invalid_argument("empty first-column cell must be alone in its row");
    }
  }
  if (spec.content.empty()) throw std::invalid_argument("content must be nonempty");
  std::vector<int> co(spec.content.size(), 0);
  for (const auto& row : rows)
    for (const auto& cell : row)
      if (cell) {
        if (*cell < 1 || *cell > static_cast<int>(co.size()))
          throw std::invalid_argument("frozen entry outside the content alphabet");
        ++co[*cell - 1];
      }
  const std::size_t m = co.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (co[i] != spec.content[i]) throw std::invalid_argument("frozen content must match all but the last letter");
  if (co[m - 1] > spec.content[m - 1]) throw std::invalid_argument("frozen content exceeds the last letter");
}

bool agrees_with(const Tableau& t, const FrozenSpec& spec) {
  const auto& trows = t.rows();
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    const auto& frow = spec.rows[r];
    for (std::size_t c = 0; c < frow.size(); ++c) {
      bool present = r < trows.size() && c < trows[r].size();
      if (!frow[c]) {
        if (present) return false;
      } else if (!present || trows[r][c] != *frow[c]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Tableau> frozen_set(const FrozenSpec& spec) {
  validate(spec);
  std::vector<Tableau> out;
  for (auto& t : dual_immaculate_tableaux(spec.content))
    if (agrees_with(t, spec)) out.push_back(std::move(t));
  return out;
}

}  // namespace hopf
