#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/lincomb.hpp"
#include "hopf/sequence.hpp"

namespace hopf {

// All compositions of n, ordered by the key order of Composition.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_up_to(int n);

// Subset of [n-1] associated with a composition of n, and back.
std::vector<int> composition_to_set(const Composition& a);
Composition set_to_composition(const std::vector<int>& s, int n);

struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;  // each block sorted ascending

  std::size_t num_blocks() const { return blocks.size(); }
  int ground_size() const;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

std::vector<OrderedSetPartition> ordered_set_partitions(int n);
// "(13,2)": blocks separated by commas, each block written as its digits;
// blocks with an entry above 9 are written "{10 11}".
std::string format(const OrderedSetPartition& pi);
OrderedSetPartition parse_osp(std::string_view text);
std::vector<OrderedSetPartition> ordered_set_partitions(const std::vector<int>& ground);

// Descent composition of a word whose adjacent letters differ.
Composition descent_composition(const Word& w);
inline Composition descent_composition(const Permutation& p) { return descent_composition(p.as_word()); }
std::vector<int> descent_set(const Word& w);

Composition reversal(const Composition& a);
Word reversal(const Word& w);
Composition concat(const Composition& a, const Composition& b);
Word concat(const Word& a, const Word& b);

std::vector<Composition> coarsenings(const Composition& a);
std::vector<Composition> refinements(const Composition& a);
bool is_coarsening(const Composition& coarse, const Composition& fine);

LinComb<Word> shuffle(const Word& v, const Word& w);
LinComb<Word> shuffle(const LinComb<Word>& v, const LinComb<Word>& w);
LinComb<Word> concat(const LinComb<Word>& a, const LinComb<Word>& b);

// A quasishuffle component is a sorted set of (side, position) variables:
// side 0 is the left sequence, side 1 the right, positions are 0-based.
using QuasiComponent = std::vector<std::pair<int, int>>;
using QuasiVector = std::vector<QuasiComponent>;
std::vector<QuasiVector> quasishuffle(int p, int q);
// Quasishuffle with each component replaced by the sum of the parts it merges.
LinComb<Composition> quasishuffle_compositions(const Composition& a, const Composition& b);

// Words x of length <= max_len that are shuffles of multiwords on v and w with
// no two equal adjacent letters. v and w must use disjoint letters.
std::vector<Word> multishuffle(const Word& v, const Word& w, std::size_t max_len);

Permutation standardize(const Word& w);
Word shift(const Word& w, int m);
Word shift(const Permutation& p, int m);
Permutation rotate180(const Permutation& p);
bool has_distinct_letters(const Word& w);

// eta(k,l) = k(k+1)...l and delta(l,k) = l(l-1)...k, empty when k > l.
Word eta(int k, int l);
Word delta(int l, int k);

// Layer lengths of a colayered word on an interval, or nullopt.
std::optional<Composition> colayered_layers(const Word& v);

std::vector<Permutation> permutations_of(int n);

}  // namespace hopf
