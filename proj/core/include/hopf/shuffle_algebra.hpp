#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopf/combinatorics.hpp"
#include "hopf/hopf_core.hpp"

namespace hopf {

// Words with the shuffle product and deconcatenation coproduct.
class ShuffleAlgebra {
 public:
  using key_type = Word;

  std::size_t degree(const Word& w) const { return w.length(); }
  LinComb<Word> product(const Word& a, const Word& b) const { return shuffle(a, b); }
  LinComb<Tensor2<Word>> coproduct(const Word& w) const;
  Word unit() const { return {}; }
  std::optional<std::size_t> degree_cap() const { return std::nullopt; }

  // (-1)^{l(w)} rev w
  LinComb<Word> antipode_closed(const Word& w) const;

  // Letters 1..26 print as a..z; otherwise "(27,1)". The empty word is "1".
  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;
};

// Every word of length at most max_len over the letters 1..alphabet.
std::vector<Word> words_up_to(int alphabet, int max_len);

}  // namespace hopf
