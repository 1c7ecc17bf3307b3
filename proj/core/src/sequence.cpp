#include "hopf/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hopf/errors.hpp"

namespace hopf {

Composition::Composition(std::vector<int> parts) : SequenceBase(std::move(parts)) {
  for (int p : v_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(v_.begin(), v_.end(), 0); }

Word::Word(std::vector<int> letters) : SequenceBase(std::move(letters)) {
  for (int a : v_)
    if (a < 1) throw std::invalid_argument("word letters must be positive");
}

Permutation::Permutation(std::vector<int> oneline) : SequenceBase(std::move(oneline)) {
  std::vector<char> seen(v_.size() + 1, 0);
  for (int a : v_) {
    if (a < 1 || a > static_cast<int>(v_.size()) || seen[a])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[a] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) inv[v_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text == "-" || text.empty()) return out;
  bool has_comma = text.find(',') != std::string_view::npos;
  if (!has_comma) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected digit", i);
      out.push_back(text[i] - '0');
    }
    return out;
  }
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ParseError("number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected number", i);
    out.push_back(static_cast<int>(value));
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return out;
}

namespace {

std::size_t first_nonpositive(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 1) return i;
  return v.size();
}

// Character offset of entry i in the text form parsed by parse_int_list.
std::size_t entry_offset(std::string_view text, std::size_t i) {
  if (text.find(',') == std::string_view::npos) return i;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < i; ++k) pos = text.find(',', pos) + 1;
  return pos;
}

}  // namespace

Composition parse_composition(std::string_view text) {
  auto v = parse_int_list(text);
  bool digits_only = text.find(',') == std::string_view::npos && text != "-";
  // "31" is read as the single part 31, never as (3,1).
  if (digits_only && !text.empty()) {
    long value = 0;
    for (char c : text) value = value * 10 + (c - '0');
    if (value < 1) throw ParseError("composition parts must be positive", 0);
    return Composition({static_cast<int>(value)});
  }
  if (auto i = first_nonpositive(v); i < v.size())
    throw ParseError("composition parts must be positive", entry_offset(text, i));
  return Composition(std::move(v));
}

Word parse_word(std::string_view text) {
  auto v = parse_int_list(text);
  if (auto i = first_nonpositive(v); i < v.size()) throw ParseError("letters must be positive", entry_offset(text, i));
  return Word(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
  auto v = parse_int_list(text);
  try {
    return Permutation(std::move(v));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a permutation of 1..n", 0);
  }
}

std::string format_comma(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_compact(const std::vector<int>& v) {
  bool small = std::all_of(v.begin(), v.end(), [](int a) { return a >= 0 && a <= 9; });
  if (!small) return format_comma(v);
  std::string s;
  for (int a : v) s += static_cast<char>('0' + a);
  return s;
}

}  // namespace hopf
