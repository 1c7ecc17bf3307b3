#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

#include <functional>
#include <map>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

using Scalar = boost::multiprecision::cpp_int;

// Sparse formal sum over an ordered key type. Zero coefficients are never stored.
template <class K>
class LinComb {
 public:
  using key_type = K;
  using map_type = std::map<K, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;

  static LinComb term(K key, Scalar coeff = 1) {
    LinComb r;
    r.add_term(std::move(key), std::move(coeff));
    return r;
  }

  void add_term(const K& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_term(K&& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  void add_scaled(const LinComb& other, const Scalar& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add_term(k, v * c);
  }

  Scalar coefficient(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, -1);
    return *this;
  }
  LinComb& operator*=(const Scalar& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

  // Drop every term whose key fails the predicate.
  template <class Pred>
  LinComb filtered(Pred keep) const {
    LinComb r;
    for (const auto& [k, v] : terms_)
      if (keep(k)) r.terms_.emplace_hint(r.terms_.end(), k, v);
    return r;
  }

 private:
  map_type terms_;
};

template <class K>
LinComb<K> add(const LinComb<K>& a, const LinComb<K>& b) {
  return a + b;
}

template <class K>
LinComb<K> scale(const Scalar& c, const LinComb<K>& a) {
  return c * a;
}

template <class K>
Scalar coefficient(const LinComb<K>& a, const K& key) {
  return a.coefficient(key);
}

template <class K, class F>
auto linear_extend(F&& f, const LinComb<K>& a) -> decltype(f(std::declval<const K&>())) {
  decltype(f(std::declval<const K&>())) r;
  for (const auto& [k, v] : a) r.add_scaled(f(k), v);
  return r;
}

// Keys of an arity-k tensor power.
template <class K>
using TensorKey = std::vector<K>;

template <class K>
using Tensor2 = std::pair<K, K>;

// "2*x - y", "0" for the empty sum. Keys are rendered by fmt.
template <class K, class Fmt>
std::string render(const LinComb<K>& a, Fmt&& fmt) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : a) {
    Scalar mag = v < 0 ? Scalar(-v) : v;
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += fmt(k);
    first = false;
  }
  return out;
}

// Inverse of render: terms separated by " + " or " - ", each an optional
// "c*" multiplier followed by a key read by parse_key.
template <class K, class Parse>
LinComb<K> parse_lincomb(std::string_view text, Parse&& parse_key) {
  LinComb<K> out;
  if (text == "0") return out;
  std::size_t pos = 0;
  bool negative = false;
  if (text.size() > 1 && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (true) {
    std::size_t next = text.size();
    bool next_negative = false;
    for (std::size_t i = pos; i + 2 < text.size(); ++i)
      if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
        next = i;
        next_negative = text[i + 1] == '-';
        break;
      }
    std::string_view term = text.substr(pos, next - pos);
    if (term.empty()) throw ParseError("empty term", pos);
    Scalar c = 1;
    std::size_t star = term.find('*');
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (star != std::string_view::npos && star == digits && digits > 0) {
      c = Scalar(std::string(term.substr(0, digits)));
      term = term.substr(star + 1);
      pos += star + 1;
    }
    K key;
    try {
      key = parse_key(term);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), pos + e.position());
    }
    out.add_term(std::move(key), negative ? Scalar(-c) : c);
    if (next == text.size()) break;
    pos = next + 3;
    negative = next_negative;
  }
  return out;
}

}  // namespace hopf
