#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/lincomb.hpp"

namespace hopf {

// A graded connected bialgebra given on a basis. A degree cap marks a filtered
// algebra whose elements are only kept up to that degree.
template <class H>
concept HopfAlgebra = requires(const H& h, const typename H::key_type& k) {
  typename H::key_type;
  { h.degree(k) } -> std::convertible_to<std::size_t>;
  { h.product(k, k) } -> std::same_as<LinComb<typename H::key_type>>;
  { h.coproduct(k) } -> std::same_as<LinComb<Tensor2<typename H::key_type>>>;
  { h.unit() } -> std::same_as<typename H::key_type>;
  { h.degree_cap() } -> std::same_as<std::optional<std::size_t>>;
};

template <HopfAlgebra H>
Scalar counit(const H& h, const typename H::key_type& k) {
  return h.degree(k) == 0 ? Scalar(1) : Scalar(0);
}

template <HopfAlgebra H>
LinComb<typename H::key_type> truncate(const H& h, const LinComb<typename H::key_type>& a) {
  auto cap = h.degree_cap();
  if (!cap) return a;
  return a.filtered([&](const auto& k) { return h.degree(k) <= *cap; });
}

template <HopfAlgebra H>
LinComb<typename H::key_type> multiply(const H& h, const LinComb<typename H::key_type>& a,
                                       const LinComb<typename H::key_type>& b) {
  LinComb<typename H::key_type> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(h.product(x, y), cx * cy);
  return truncate(h, out);
}

// Left-nested iterated coproduct Delta^{k-1}: arity-k tensors.
template <HopfAlgebra H>
LinComb<TensorKey<typename H::key_type>> iterated_coproduct(const H& h, const typename H::key_type& key,
                                                            std::size_t k) {
  using K = typename H::key_type;
  if (k == 0) throw std::invalid_argument("iterated coproduct arity must be positive");
  LinComb<TensorKey<K>> cur = LinComb<TensorKey<K>>::term(TensorKey<K>{key});
  for (std::size_t step = 1; step < k; ++step) {
    LinComb<TensorKey<K>> next;
    for (const auto& [t, c] : cur) {
      for (const auto& [pair, d] : h.coproduct(t.front())) {
        TensorKey<K> nt;
        nt.reserve(t.size() + 1);
        nt.push_back(pair.first);
        nt.push_back(pair.second);
        nt.insert(nt.end(), t.begin() + 1, t.end());
        next.add_term(std::move(nt), c * d);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Takeuchi's alternating sum with per-instance memo tables. Tensor terms
// containing a degree-0 factor are dropped, and with a degree cap tensor terms
// and products above the cap are discarded as they appear.
template <HopfAlgebra H>
class TakeuchiEvaluator {
 public:
  using K = typename H::key_type;

  explicit TakeuchiEvaluator(const H& h) : h_(h) {}

  // Arity-k part of pi^{(x)k} Delta^{k-1}(key).
  const LinComb<TensorKey<K>>& projected_coproduct(const K& key, std::size_t k) {
    auto mk = std::make_pair(key, k);
    if (auto it = proj_.find(mk); it != proj_.end()) return it->second;
    LinComb<TensorKey<K>> out;
    const std::size_t d = h_.degree(key);
    if (k == 1) {
      if (d > 0 && within_cap(d)) out.add_term(TensorKey<K>{key}, 1);
    } else if (d > 0) {
      for (const auto& [pair, c] : h_.coproduct(key)) {
        const std::size_t db = h_.degree(pair.second);
        if (db == 0 || h_.degree(pair.first) == 0) continue;
        if (!within_cap(db)) continue;
        const auto& left = projected_coproduct(pair.first, k - 1);
        for (const auto& [t, e] : left) {
          if (!within_cap(tensor_degree(t) + db)) continue;
          TensorKey<K> nt = t;
          nt.push_back(pair.second);
          out.add_term(std::move(nt), c * e);
        }
      }
    }
    return proj_.emplace(mk, std::move(out)).first->second;
  }

  // Left-to-right product of the factors of a tensor.
  const LinComb<K>& product_of(const TensorKey<K>& t) {
    if (auto it = prod_.find(t); it != prod_.end()) return it->second;
    LinComb<K> out;
    if (t.size() == 1) {
      out.add_term(t.front(), 1);
    } else {
      TensorKey<K> prefix(t.begin(), t.end() - 1);
      const LinComb<K>& left = product_of(prefix);
      for (const auto& [x, c] : left) out.add_scaled(h_.product(x, t.back()), c);
      out = truncate(h_, out);
    }
    return prod_.emplace(t, std::move(out)).first->second;
  }

  LinComb<K> antipode(const K& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LinComb<K> out;
    const std::size_t d = h_.degree(key);
    if (d == 0) {
      out.add_term(h_.unit(), 1);
    } else {
      auto cap = h_.degree_cap();
      // k positive-degree factors have total degree at least k.
      const std::size_t max_k = cap ? *cap : d;
      for (std::size_t k = 1; k <= max_k; ++k) {
        const auto& terms = projected_coproduct(key, k);
        if (terms.empty()) {
          if (!cap) break;
          continue;
        }
        const Scalar sign = k % 2 == 1 ? -1 : 1;
        for (const auto& [t, c] : terms) out.add_scaled(product_of(t), sign * c);
      }
      out = truncate(h_, out);
    }
    memo_.emplace(key, out);
    return out;
  }

  LinComb<K> antipode(const LinComb<K>& a) {
    LinComb<K> out;
    for (const auto& [k, c] : a) out.add_scaled(antipode(k), c);
    return out;
  }

 private:
  bool within_cap(std::size_t d) const {
    auto cap = h_.degree_cap();
    return !cap || d <= *cap;
  }
  std::size_t tensor_degree(const TensorKey<K>& t) const {
    std::size_t s = 0;
    for (const auto& x : t) s += h_.degree(x);
    return s;
  }

  const H& h_;
  std::map<std::pair<K, std::size_t>, LinComb<TensorKey<K>>> proj_;
  std::map<TensorKey<K>, LinComb<K>> prod_;
  std::map<K, LinComb<K>> memo_;
};

template <HopfAlgebra H>
LinComb<typename H::key_type> takeuchi_antipode(const H& h, const typename H::key_type& key) {
  TakeuchiEvaluator<H> ev(h);
  return ev.antipode(key);
}

// Checks m(S (x) id) Delta(key) = eps(key) 1, modulo the degree cap if any.
template <HopfAlgebra H, class S>
bool antipode_axiom_check(const H& h, const typename H::key_type& key, S&& antipode) {
  using K = typename H::key_type;
  LinComb<K> lhs;
  for (const auto& [pair, c] : h.coproduct(key)) {
    LinComb<K> s = antipode(pair.first);
    lhs.add_scaled(multiply(h, s, LinComb<K>::term(pair.second)), c);
  }
  lhs = truncate(h, lhs);
  LinComb<K> rhs;
  rhs.add_term(h.unit(), counit(h, key));
  return lhs == truncate(h, rhs);
}

// Signed set with a candidate involution.
template <class T>
struct SignedSet {
  std::vector<T> elements;
  std::function<int(const T&)> sign;
  std::function<T(const T&)> involution;
};

template <class T>
struct InvolutionReport {
  bool ok = true;
  std::vector<T> fixed_points;
  Scalar signed_sum = 0;
  Scalar fixed_sum = 0;
  std::optional<T> violation;
  std::string message;
};

template <class T>
InvolutionReport<T> verify_involution(const SignedSet<T>& s) {
  InvolutionReport<T> r;
  std::map<T, int> index;
  for (std::size_t i = 0; i < s.elements.size(); ++i) index.emplace(s.elements[i], static_cast<int>(i));
  for (const auto& a : s.elements) {
    const int sa = s.sign(a);
    r.signed_sum += sa;
    T b = s.involution(a);
    if (!index.count(b)) {
      if (r.ok) {
        r.ok = false;
        r.violation = a;
        r.message = "image lies outside the set";
      }
      continue;
    }
    if (b == a) {
      r.fixed_points.push_back(a);
      r.fixed_sum += sa;
      continue;
    }
    if (r.ok && !(s.involution(b) == a)) {
      r.ok = false;
      r.violation = a;
      r.message = "map is not an involution";
    } else if (r.ok && s.sign(b) != -sa) {
      r.ok = false;
      r.violation = a;
      r.message = "two-cycle does not reverse sign";
    }
  }
  if (r.ok && r.signed_sum != r.fixed_sum) {
    r.ok = false;
    r.message = "signed sum differs from fixed-point sum";
  }
  return r;
}

}  // namespace hopf
