#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopf/sequence.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

// A ribbon is walked cell by cell from its southwest end: the first part is the
// bottom row, and each later part starts directly above the last cell of the
// previous one.
enum class Join { horizontal, vertical };

std::vector<Join> joins(const Composition& a);
// Composition with n = joins.size() + 1 cells.
Composition from_joins(const std::vector<Join>& j);
Composition sub_ribbon(const Composition& a, std::size_t first_cell, std::size_t last_cell);

// Matrix coordinates (row 0 at the top) of each cell in path order.
std::vector<std::pair<int, int>> ribbon_cells(const Composition& a);

// All (beta, gamma) with alpha = beta | gamma, including the two trivial splits.
std::vector<std::pair<Composition, Composition>> cut_edge_splits(const Composition& a);
// One (beta, gamma) per cell, beta and gamma both containing that cell.
std::vector<std::pair<Composition, Composition>> cut_cell_splits(const Composition& a);

// Reflection of the ribbon in the main diagonal.
Composition transpose(const Composition& a);

// Labels 1..n left to right in each row starting with the top row.
// Rows of the result are listed top to bottom.
Tableau superstandard_fill(const Composition& a);
// Row word of superstandard_fill: the canonical word modelling a.
Word canonical_model(const Composition& a);

enum class Cut { edge, cell };

struct Decomposition {
  Composition whole;
  std::vector<Composition> pieces;
  std::vector<Cut> cuts;  // pieces.size() - 1 separators

  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

// Every decomposition of a nonempty composition into at most max_pieces
// pieces. Cells may be cut repeatedly, so the cap is mandatory.
std::vector<Decomposition> decompositions(const Composition& a, std::size_t max_pieces);
// Groups of pieces joined by cell cuts, each reassembled.
std::vector<Composition> components(const Decomposition& d);
// Word of each piece under the superstandard labelling of the split diagram.
std::vector<Word> superstandard_piece_words(const Decomposition& d);
std::string format(const Decomposition& d);

// Number of ways to collapse edge-connected groups of cells of a onto b.
std::uint64_t collapse_count(const Composition& a, const Composition& b);

}  // namespace hopf
