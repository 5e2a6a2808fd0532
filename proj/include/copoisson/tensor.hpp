#pragma once

// Sparse elements of A = k[x1..xd] and of its tensor powers A^{(x)n}.
//
// A Poly is a finite map Monomial -> Rational and a TensorN<n> a finite map
// (Monomial, ..., Monomial) -> Rational. Zero coefficients are never stored,
// so two elements are equal iff their maps are equal. Keys iterate in
// graded-lex order (componentwise for tuples).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "copoisson/monomial.hpp"
#include "copoisson/rational.hpp"

namespace copoisson {

template <std::size_t N>
using MonoTuple = std::array<Monomial, N>;

template <class Key>
class Sparse {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;

  Sparse() = default;
  Sparse(const Key& k, const Rational& c) { add(k, c); }

  /// terms[k] += c, erasing the entry if it cancels.
  void add(const Key& k, const Rational& c) {
    if (copoisson::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (copoisson::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const Sparse& other, const Rational& c) {
    if (copoisson::is_zero(c)) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Sparse& operator+=(const Sparse& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  Sparse& operator*=(const Rational& c) {
    if (copoisson::is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Sparse operator+(Sparse a, const Sparse& b) { return a += b; }
  friend Sparse operator-(Sparse a, const Sparse& b) { return a -= b; }
  friend Sparse operator-(Sparse a) { return a *= Rational(-1); }
  friend Sparse operator*(Sparse a, const Rational& c) { return a *= c; }
  friend Sparse operator*(const Rational& c, Sparse a) { return a *= c; }
  friend bool operator==(const Sparse& a, const Sparse& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

using Poly = Sparse<Monomial>;
template <std::size_t N>
using TensorN = Sparse<MonoTuple<N>>;
using Tensor2 = TensorN<2>;
using Tensor3 = TensorN<3>;
using Tensor4 = TensorN<4>;
using Tensor5 = TensorN<5>;

// ---------------------------------------------------------------------------
// Key plumbing

inline Monomial key_product(const Monomial& a, const Monomial& b) { return a * b; }

template <std::size_t N>
MonoTuple<N> key_product(const MonoTuple<N>& a, const MonoTuple<N>& b) {
  MonoTuple<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] * b[i];
  return r;
}

template <class K>
struct KeyArity;
template <>
struct KeyArity<Monomial> {
  static constexpr std::size_t value = 1;
};
template <std::size_t N>
struct KeyArity<MonoTuple<N>> {
  static constexpr std::size_t value = N;
};

template <class K>
inline constexpr std::size_t key_arity_v = KeyArity<K>::value;

template <class K>
const Monomial& key_factor(const K& k, std::size_t i) {
  if constexpr (std::is_same_v<K, Monomial>) {
    return k;
  } else {
    return k[i];
  }
}

// ---------------------------------------------------------------------------
// Algebra structure of A^{(x)n}

/// Product in the algebra A^{(x)n}: (a(x)b)(c(x)d) = ac (x) bd, bilinearly.
template <class K>
Sparse<K> operator*(const Sparse<K>& u, const Sparse<K>& v) {
  Sparse<K> r;
  for (const auto& [ku, cu] : u) {
    for (const auto& [kv, cv] : v) r.add(key_product(ku, kv), cu * cv);
  }
  return r;
}

inline Tensor2 tensor2_mul(const Tensor2& u, const Tensor2& v) { return u * v; }

/// Outer product u (x) v.
template <class KA, class KB>
auto outer(const Sparse<KA>& u, const Sparse<KB>& v) {
  constexpr std::size_t na = key_arity_v<KA>;
  constexpr std::size_t nb = key_arity_v<KB>;
  TensorN<na + nb> r;
  for (const auto& [ka, ca] : u) {
    for (const auto& [kb, cb] : v) {
      MonoTuple<na + nb> k;
      for (std::size_t i = 0; i < na; ++i) k[i] = key_factor(ka, i);
      for (std::size_t i = 0; i < nb; ++i) k[na + i] = key_factor(kb, i);
      r.add(k, ca * cb);
    }
  }
  return r;
}

inline Poly constant(std::size_t nvars, const Rational& c) { return Poly(Monomial(nvars), c); }
inline Poly monomial_poly(const Monomial& m) { return Poly(m, Rational(1)); }
inline Poly variable(std::size_t nvars, std::size_t i) {
  return monomial_poly(Monomial::variable(nvars, i));
}

template <std::size_t N>
TensorN<N> pure_tensor(const MonoTuple<N>& k, const Rational& c = Rational(1)) {
  return TensorN<N>(k, c);
}

/// Output factor i is input factor perm[i].
template <std::size_t N>
TensorN<N> permute(const TensorN<N>& t, const std::array<std::size_t, N>& perm) {
  TensorN<N> r;
  for (const auto& [k, c] : t) {
    MonoTuple<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = k[perm[i]];
    r.add(out, c);
  }
  return r;
}

/// t_2: a (x) b -> b (x) a.
inline Tensor2 t2_swap(const Tensor2& t) { return permute<2>(t, {1, 0}); }

/// t_3: a (x) b (x) c -> c (x) a (x) b.
inline Tensor3 t3_cycle(const Tensor3& t) { return permute<3>(t, {2, 0, 1}); }

/// (1 + t_3 + t_3^2) t.
inline Tensor3 cyclic_sum(const Tensor3& t) {
  Tensor3 once = t3_cycle(t);
  return t + once + t3_cycle(once);
}

/// Applies a linear map (given on monomials) to tensor factor `pos`, splicing its
/// output factors in place. f: Monomial -> Sparse<K>.
template <std::size_t N, class F>
auto map_factor(const TensorN<N>& t, std::size_t pos, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const Monomial&>()))>;
  using KOut = typename Out::key_type;
  constexpr std::size_t m = key_arity_v<KOut>;
  TensorN<N - 1 + m> r;
  for (const auto& [k, c] : t) {
    Out image = f(k[pos]);
    for (const auto& [ki, ci] : image) {
      MonoTuple<N - 1 + m> out;
      std::size_t w = 0;
      for (std::size_t i = 0; i < pos; ++i) out[w++] = k[i];
      for (std::size_t j = 0; j < m; ++j) out[w++] = key_factor(ki, j);
      for (std::size_t i = pos + 1; i < N; ++i) out[w++] = k[i];
      r.add(out, c * ci);
    }
  }
  return r;
}

/// Same, for a linear map on a polynomial (pos must be 0).
template <class F>
auto map_poly(const Poly& p, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const Monomial&>()))>;
  Out r;
  for (const auto& [m, c] : p) r.add_scaled(f(m), c);
  return r;
}

/// Applies a scalar-valued functional to factor `pos` of a 2-tensor.
template <class F>
Poly contract(const Tensor2& t, std::size_t pos, F&& functional) {
  Poly r;
  for (const auto& [k, c] : t) {
    Rational v = functional(k[pos]);
    if (!copoisson::is_zero(v)) r.add(k[1 - pos], c * v);
  }
  return r;
}

/// Largest degree appearing in tensor factor `pos`; -1 for the zero tensor.
template <std::size_t N>
long max_factor_degree(const TensorN<N>& t, std::size_t pos) {
  long best = -1;
  for (const auto& [k, c] : t) best = std::max(best, static_cast<long>(k[pos].degree()));
  return best;
}

inline long max_degree(const Poly& p) {
  long best = -1;
  for (const auto& [m, c] : p) best = std::max(best, static_cast<long>(m.degree()));
  return best;
}

/// Drops every term of total degree > n.
Poly truncate(const Poly& p, std::size_t n);

/// Partial derivative with respect to variable i (0-based).
Poly derivative(const Poly& p, std::size_t i);

/// Substitutes each variable x_i by the embedded variable x_{offset+i} of `nvars`.
Poly embed(const Poly& p, std::size_t nvars, std::size_t offset);

// ---------------------------------------------------------------------------
// Rendering. Terms appear in graded-lex order, e.g. "x1*x2 - 2*x3^2".

std::string to_string(const Poly& p, const std::vector<std::string>& names);

template <std::size_t N>
std::string to_string(const TensorN<N>& t, const std::vector<std::string>& names) {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += to_string(mag) + "*";
    s += "(";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += " ⊗ ";
      s += to_string(k[i], names);
    }
    s += ")";
  }
  return s;
}

}  // namespace copoisson
