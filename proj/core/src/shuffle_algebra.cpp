#include "hopf/shuffle_algebra.hpp"

#include <algorithm>

#include "hopf/errors.hpp"

namespace hopf {

LinComb<Tensor2<Word>> ShuffleAlgebra::coproduct(const Word& w) const {
  LinComb<Tensor2<Word>> out;
  const auto& v = w.letters();
  for (std::size_t i = 0; i <= v.size(); ++i)
    out.add_term({Word(std::vector<int>(v.begin(), v.begin() + i)), Word(std::vector<int>(v.begin() + i, v.end()))}, 1);
  return out;
}

LinComb<Word> ShuffleAlgebra::antipode_closed(const Word& w) const {
  return LinComb<Word>::term(reversal(w), w.length() % 2 == 0 ? 1 : -1);
}

std::string ShuffleAlgebra::format(const Word& w) const {
  if (w.empty()) return "1";
  if (std::all_of(w.begin(), w.end(), [](int a) { return a <= 26; })) {
    std::string s;
    for (int a : w) s += static_cast<char>('a' + a - 1);
    return s;
  }
  return "(" + format_comma(w.letters()) + ")";
}

Word ShuffleAlgebra::parse(std::string_view text) const {
  if (text == "1" || text == "-") return {};
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("expected ')'", text.size());
    auto inner = text.substr(1, text.size() - 2);
    if (inner.empty()) return {};
    try {
      return parse_word(inner);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.position() + 1);
    }
  }
  std::vector<int> v;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < 'a' || c > 'z') throw ParseError("expected a letter a-z", i);
    v.push_back(c - 'a' + 1);
  }
  if (v.empty()) throw ParseError("empty word", 0);
  return Word(std::move(v));
}

std::vector<Word> words_up_to(int alphabet, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int a = 1; a <= alphabet; ++a) {
        auto x = w;
        x.push_back(a);
        out.emplace_back(x);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopf
