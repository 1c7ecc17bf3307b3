#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/sequence.hpp"

namespace hopf {

// Rows listed top to bottom (English convention), entries left to right.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::vector<int> shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }

  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// "1,4/2,5/3"; "-" is the empty tableau.
Tableau parse_tableau(std::string_view text);
std::string format(const Tableau& t);

// Rows concatenated from the bottom row up.
Word row_word(const Tableau& t);
// Inverse of row_word for a known shape (row lengths, top to bottom).
Tableau from_row_word(const Word& w, const std::vector<int>& shape);

bool is_partition(const std::vector<int>& shape);
bool is_standard(const Tableau& t);
bool is_dual_immaculate(const Tableau& t);
// co(T): entry i-1 counts the occurrences of i, up to the largest entry.
std::vector<int> content(const Tableau& t);

std::vector<std::vector<int>> partitions_of(int n);
std::vector<int> conjugate(const std::vector<int>& lambda);
Tableau column_superstandard(const std::vector<int>& lambda);
Tableau transpose(const Tableau& t);

// Row insertion tableau of a word with distinct letters.
Tableau rsk_insert(const Word& w);
inline Tableau rsk_insert(const Permutation& p) { return rsk_insert(p.as_word()); }
// True when w equals the row word of its own insertion tableau.
bool is_row_word(const Word& w);

// All permutations with insertion tableau P, found by Knuth moves from w_P.
std::vector<Permutation> knuth_class(const Tableau& p);

// Replace entries by their ranks 1..n.
Tableau standardize(const Tableau& t);
std::vector<Tableau> standard_tableaux(int n);
std::vector<Tableau> standard_tableaux(const std::vector<int>& lambda);

// A standard skew filling: row r leaves its first inner[r] cells empty.
struct SkewTableau {
  std::vector<int> inner;
  std::vector<std::vector<std::optional<int>>> rows;
};
SkewTableau skew_difference(const Tableau& outer, const Tableau& inner_tableau);
Tableau jdt_rectify(SkewTableau skew);
// Reading word of the filled cells, bottom row first.
Word skew_reading_word(const SkewTableau& s);

// Every dual immaculate tableau with the given content (zeros allowed).
std::vector<Tableau> dual_immaculate_tableaux(const std::vector<int>& content);

// A frozen tableau: nullopt marks a cell forced to stay empty.
struct FrozenSpec {
  std::vector<std::vector<std::optional<int>>> rows;
  std::vector<int> content;
};
// Throws std::invalid_argument when the frozen shape or content is malformed.
void validate(const FrozenSpec& spec);
bool agrees_with(const Tableau& t, const FrozenSpec& spec);
std::vector<Tableau> frozen_set(const FrozenSpec& spec);

}  // namespace hopf
