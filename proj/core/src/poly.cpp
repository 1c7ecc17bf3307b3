#include "hopf/poly.hpp"

#include <algorithm>
#include <cctype>

#include "hopf/errors.hpp"

namespace hopf {

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Scalar r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LinComb<PolyKey> PolyAlgebra::product(const PolyKey& a, const PolyKey& b) const {
  return LinComb<PolyKey>::term({a.exponent + b.exponent});
}

LinComb<Tensor2<PolyKey>> PolyAlgebra::coproduct(const PolyKey& a) const {
  LinComb<Tensor2<PolyKey>> out;
  for (int i = 0; i <= a.exponent; ++i) out.add_term({PolyKey{i}, PolyKey{a.exponent - i}}, binomial(a.exponent, i));
  return out;
}

LinComb<PolyKey> PolyAlgebra::antipode_closed(const PolyKey& a) const {
  return LinComb<PolyKey>::term(a, a.exponent % 2 == 0 ? 1 : -1);
}

std::string PolyAlgebra::format(const PolyKey& k) const {
  if (k.exponent == 0) return "1";
  if (k.exponent == 1) return "x";
  return "x^" + std::to_string(k.exponent);
}

PolyKey PolyAlgebra::parse(std::string_view text) const {
  if (text == "1") return {0};
  if (text == "x") return {1};
  std::string_view digits = text;
  if (text.rfind("x^", 0) == 0) digits = text.substr(2);
  if (digits.empty()) throw ParseError("expected exponent", text.size());
  long v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw ParseError("expected digit", text.size() - digits.size() + i);
    v = v * 10 + (digits[i] - '0');
    if (v > 100000) throw ParseError("exponent too large", 0);
  }
  return {static_cast<int>(v)};
}

OrderedSetPartition poly_involution_step(const OrderedSetPartition& pi) {
  const auto& b = pi.blocks;
  for (std::size_t l = 0; l < b.size(); ++l) {
    if (b[l].size() >= 2) {
      OrderedSetPartition out = pi;
      int a = out.blocks[l].front();
      out.blocks[l].erase(out.blocks[l].begin());
      out.blocks.insert(out.blocks.begin() + l, std::vector<int>{a});
      return out;
    }
    if (l + 1 < b.size() && b[l][0] < b[l + 1].front()) {
      OrderedSetPartition out = pi;
      auto& merged = out.blocks[l];
      merged.insert(merged.end(), b[l + 1].begin(), b[l + 1].end());
      std::sort(merged.begin(), merged.end());
      out.blocks.erase(out.blocks.begin() + l + 1);
      return out;
    }
  }
  return pi;
}

SignedSet<OrderedSetPartition> poly_signed_set(int n) {
  SignedSet<OrderedSetPartition> s;
  s.elements = ordered_set_partitions(n);
  s.sign = [](const OrderedSetPartition& p) { return p.num_blocks() % 2 == 0 ? 1 : -1; };
  s.involution = poly_involution_step;
  return s;
}

}  // namespace hopf
