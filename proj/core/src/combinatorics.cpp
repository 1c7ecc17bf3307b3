#include "hopf/combinatorics.hpp"

#include "hopf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopf {

std::vector<int> composition_to_set(const Composition& a) {
  std::vector<int> s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    acc += a[i];
    s.push_back(acc);
  }
  return s;
}

Composition set_to_composition(const std::vector<int>& s, int n) {
  if (n == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  const unsigned limit = 1u << (n - 1);
  for (unsigned mask = 0; mask < limit; ++mask) {
    std::vector<int> s;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    out.push_back(set_to_composition(s, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out;
  for (int m = 0; m <= n; ++m) {
    auto c = compositions_of(m);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

int OrderedSetPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

namespace {

void osp_rec(const std::vector<int>& rest, std::vector<std::vector<int>>& blocks,
             std::vector<OrderedSetPartition>& out) {
  if (rest.empty()) {
    out.push_back({blocks});
    return;
  }
  const std::size_t m = rest.size();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> block, remaining;
    for (std::size_t i = 0; i < m; ++i) (mask & (1ul << i) ? block : remaining).push_back(rest[i]);
    blocks.push_back(std::move(block));
    osp_rec(remaining, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<OrderedSetPartition> ordered_set_partitions(const std::vector<int>& ground) {
  std::vector<int> g = ground;
  std::sort(g.begin(), g.end());
  std::vector<OrderedSetPartition> out;
  std::vector<std::vector<int>> blocks;
  osp_rec(g, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedSetPartition> ordered_set_partitions(int n) {
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 1);
  return ordered_set_partitions(g);
}

std::string format(const OrderedSetPartition& pi) {
  std::string s = "(";
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (b) s += ',';
    const auto& block = pi.blocks[b];
    bool small = std::all_of(block.begin(), block.end(), [](int x) { return x >= 1 && x <= 9; });
    if (small) {
      for (int x : block) s += static_cast<char>('0' + x);
    } else {
      s += '{';
      for (std::size_t i = 0; i < block.size(); ++i) s += (i ? " " : "") + std::to_string(block[i]);
      s += '}';
    }
  }
  return s + ")";
}

OrderedSetPartition parse_osp(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("ordered set partition must be enclosed in parentheses", 0);
  OrderedSetPartition pi;
  if (text.size() == 2) return pi;
  std::size_t i = 1;
  const std::size_t end = text.size() - 1;
  while (true) {
    std::vector<int> block;
    if (text[i] == '{') {
      ++i;
      while (true) {
        std::size_t start = i;
        long v = 0;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        if (i == start) throw ParseError("expected number", i);
        block.push_back(static_cast<int>(v));
        if (i < end && text[i] == ' ') {
          ++i;
          continue;
        }
        if (i >= end || text[i] != '}') throw ParseError("expected '}'", i);
        ++i;
        break;
      }
    } else {
      while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) block.push_back(text[i++] - '0');
      if (block.empty()) throw ParseError("expected block", i);
    }
    std::sort(block.begin(), block.end());
    pi.blocks.push_back(std::move(block));
    if (i == end) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  std::vector<int> all;
  for (const auto& b : pi.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1) throw ParseError("blocks must partition 1..n", 0);
  return pi;
}

std::vector<int> descent_set(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    if (w[i] == w[i + 1]) throw std::invalid_argument("descent set needs adjacent letters to differ");
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

Composition descent_composition(const Word& w) {
  return set_to_composition(descent_set(w), static_cast<int>(w.length()));
}

Composition reversal(const Composition& a) {
  std::vector<int> v(a.parts().rbegin(), a.parts().rend());
  return Composition(std::move(v));
}

Word reversal(const Word& w) {
  std::vector<int> v(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(v));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.begin(), b.end());
  return Composition(std::move(v));
}

Word concat(const Word& a, const Word& b) {
  std::vector<int> v = a.letters();
  v.insert(v.end(), b.begin(), b.end());
  return Word(std::move(v));
}

std::vector<Composition> coarsenings(const Composition& a) {
  const std::size_t l = a.length();
  if (l == 0) return {a};
  std::vector<Composition> out;
  for (unsigned long mask = 0; mask < (1ul << (l - 1)); ++mask) {
    std::vector<int> parts{a[0]};
    for (std::size_t i = 1; i < l; ++i) {
      if (mask & (1ul << (i - 1)))
        parts.back() += a[i];
      else
        parts.push_back(a[i]);
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> refinements(const Composition& a) {
  std::vector<std::vector<int>> acc{{}};
  for (int p : a) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc)
      for (const auto& c : compositions_of(p)) {
        auto v = prefix;
        v.insert(v.end(), c.begin(), c.end());
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  for (auto& v : acc) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coarsening(const Composition& coarse, const Composition& fine) {
  if (coarse.size() != fine.size()) return false;
  auto a = composition_to_set(coarse);
  auto b = composition_to_set(fine);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void shuffle_rec(const std::vector<int>& v, std::size_t i, const std::vector<int>& w, std::size_t j,
                 std::vector<int>& cur, LinComb<Word>& out) {
  if (i == v.size() && j == w.size()) {
    out.add_term(Word(cur), 1);
    return;
  }
  if (i < v.size()) {
    cur.push_back(v[i]);
    shuffle_rec(v, i + 1, w, j, cur, out);
    cur.pop_back();
  }
  if (j < w.size()) {
    cur.push_back(w[j]);
    shuffle_rec(v, i, w, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LinComb<Word> shuffle(const Word& v, const Word& w) {
  LinComb<Word> out;
  std::vector<int> cur;
  cur.reserve(v.length() + w.length());
  shuffle_rec(v.letters(), 0, w.letters(), 0, cur, out);
  return out;
}

LinComb<Word> shuffle(const LinComb<Word>& v, const LinComb<Word>& w) {
  LinComb<Word> out;
  for (const auto& [a, ca] : v)
    for (const auto& [b, cb] : w) out.add_scaled(shuffle(a, b), ca * cb);
  return out;
}

LinComb<Word> concat(const LinComb<Word>& a, const LinComb<Word>& b) {
  LinComb<Word> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_term(concat(x, y), cx * cy);
  return out;
}

namespace {

void quasi_rec(int p, int i, int q, int j, QuasiVector& cur, std::vector<QuasiVector>& out) {
  if (i == p && j == q) {
    out.push_back(cur);
    return;
  }
  if (i < p) {
    cur.push_back({{0, i}});
    quasi_rec(p, i + 1, q, j, cur, out);
    cur.pop_back();
  }
  if (i < p && j < q) {
    cur.push_back({{0, i}, {1, j}});
    quasi_rec(p, i + 1, q, j + 1, cur, out);
    cur.pop_back();
  }
  if (j < q) {
    cur.push_back({{1, j}});
    quasi_rec(p, i, q, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<QuasiVector> quasishuffle(int p, int q) {
  std::vector<QuasiVector> out;
  QuasiVector cur;
  quasi_rec(p, 0, q, 0, cur, out);
  return out;
}

LinComb<Composition> quasishuffle_compositions(const Composition& a, const Composition& b) {
  LinComb<Composition> out;
  for (const auto& v : quasishuffle(static_cast<int>(a.length()), static_cast<int>(b.length()))) {
    std::vector<int> parts;
    parts.reserve(v.size());
    for (const auto& comp : v) {
      int s = 0;
      for (auto [side, pos] : comp) s += side == 0 ? a[pos] : b[pos];
      parts.push_back(s);
    }
    out.add_term(Composition(std::move(parts)), 1);
  }
  return out;
}

namespace {

struct MultiState {
  const std::vector<int>* v;
  const std::vector<int>* w;
  std::size_t max_len;
  std::set<Word>* out;
};

// i and j count the letters of v and w that have appeared so far; the most
// recent one on each side may be repeated.
void multi_rec(const MultiState& st, std::size_t i, std::size_t j, std::vector<int>& cur) {
  const auto& v = *st.v;
  const auto& w = *st.w;
  if (i == v.size() && j == w.size()) st.out->insert(Word(cur));
  if (cur.size() == st.max_len) return;
  auto try_letter = [&](int letter, std::size_t ni, std::size_t nj) {
    if (!cur.empty() && cur.back() == letter) return;
    cur.push_back(letter);
    multi_rec(st, ni, nj, cur);
    cur.pop_back();
  };
  if (i > 0) try_letter(v[i - 1], i, j);
  if (i < v.size()) try_letter(v[i], i + 1, j);
  if (j > 0) try_letter(w[j - 1], i, j);
  if (j < w.size()) try_letter(w[j], i, j + 1);
}

}  // namespace

std::vector<Word> multishuffle(const Word& v, const Word& w, std::size_t max_len) {
  std::set<int> left(v.begin(), v.end());
  for (int a : w)
    if (left.count(a)) throw std::invalid_argument("multishuffle needs disjoint alphabets");
  std::set<Word> found;
  std::vector<int> cur;
  MultiState st{&v.letters(), &w.letters(), max_len, &found};
  multi_rec(st, 0, 0, cur);
  return {found.begin(), found.end()};
}

Permutation standardize(const Word& w) {
  std::vector<int> idx(w.length());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  std::vector<int> out(w.length());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

Word shift(const Word& w, int m) {
  std::vector<int> v = w.letters();
  for (int& a : v) a += m;
  return Word(std::move(v));
}

Word shift(const Permutation& p, int m) { return shift(p.as_word(), m); }

Permutation rotate180(const Permutation& p) {
  const int n = p.n();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n + 1 - p[n - 1 - i];
  return Permutation(std::move(v));
}

bool has_distinct_letters(const Word& w) {
  std::set<int> s(w.begin(), w.end());
  return s.size() == w.length();
}

Word eta(int k, int l) {
  std::vector<int> v;
  for (int a = k; a <= l; ++a) v.push_back(a);
  return Word(std::move(v));
}

Word delta(int l, int k) {
  std::vector<int> v;
  for (int a = l; a >= k; --a) v.push_back(a);
  return Word(std::move(v));
}

std::optional<Composition> colayered_layers(const Word& v) {
  if (v.empty()) return Composition{};
  if (!has_distinct_letters(v)) return std::nullopt;
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (*hi - *lo + 1 != static_cast<int>(v.length())) return std::nullopt;
  std::vector<int> layers{1};
  for (std::size_t i = 1; i < v.length(); ++i) {
    if (v[i] == v[i - 1] + 1) {
      ++layers.back();
      continue;
    }
    // The new run must sit directly below the run just closed.
    int run_start = v[i - layers.back()];
    int next_run_len = 1;
    while (i + next_run_len < v.length() && v[i + next_run_len] == v[i + next_run_len - 1] + 1)
      ++next_run_len;
    if (v[i] + next_run_len != run_start) return std::nullopt;
    layers.push_back(1);
  }
  return Composition(std::move(layers));
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace hopf
