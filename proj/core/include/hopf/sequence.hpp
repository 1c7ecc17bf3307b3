#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

// Shared storage for the three sequence keys. Ordering is by weight first
// (size for compositions, length for words) and then lexicographic.
template <class Derived>
class SequenceBase {
 public:
  SequenceBase() = default;
  explicit SequenceBase(std::vector<int> v) : v_(std::move(v)) {}

  const std::vector<int>& values() const { return v_; }
  std::size_t length() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const SequenceBase& a, const SequenceBase& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const SequenceBase& a, const SequenceBase& b) {
    auto wa = static_cast<const Derived&>(a).weight();
    auto wb = static_cast<const Derived&>(b).weight();
    if (auto c = wa <=> wb; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 protected:
  std::vector<int> v_;
};

class Composition : public SequenceBase<Composition> {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return v_; }
  int size() const;
  std::size_t weight() const { return static_cast<std::size_t>(size()); }
};

class Word : public SequenceBase<Word> {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const { return v_; }
  std::size_t weight() const { return v_.size(); }
};

class Permutation : public SequenceBase<Permutation> {
 public:
  Permutation() = default;
  // Requires the values to be exactly 1..n.
  explicit Permutation(std::vector<int> oneline);
  Permutation(std::initializer_list<int> oneline) : Permutation(std::vector<int>(oneline)) {}

  static Permutation identity(int n);
  const std::vector<int>& oneline() const { return v_; }
  int n() const { return static_cast<int>(v_.size()); }
  std::size_t weight() const { return v_.size(); }
  Permutation inverse() const;
  Word as_word() const { return Word(v_); }
};

// Text grammar shared with the command line: "3,1,2"; words and permutations
// may also be written as a digit string "3142"; "-" is the empty sequence.
std::vector<int> parse_int_list(std::string_view text);
Composition parse_composition(std::string_view text);
Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);

std::string format_comma(const std::vector<int>& v);
// Digits when every entry is a single digit, comma form otherwise.
std::string format_compact(const std::vector<int>& v);
inline std::string format(const Composition& a) { return a.empty() ? "-" : format_comma(a.parts()); }
inline std::string format(const Word& w) { return w.empty() ? "-" : format_compact(w.letters()); }
inline std::string format(const Permutation& p) { return p.empty() ? "-" : format_compact(p.oneline()); }

}  // namespace hopf
