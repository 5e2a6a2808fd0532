#include "copoisson/hopf.hpp"

#include <algorithm>
#include <string>

namespace copoisson {

namespace {

int sign_of_degree(std::uint64_t degree) { return degree % 2 == 0 ? 1 : -1; }

void require_in_bound(std::size_t degree, std::size_t bound, const char* what) {
  if (degree > bound) {
    throw BoundError(std::string(what) + ": degree " + std::to_string(degree) +
                         " exceeds table bound " + std::to_string(bound),
                     degree);
  }
}

}  // namespace

Tensor2 comult(const Monomial& a) {
  Tensor2 r;
  for (const auto& b : divisors(a)) r.add({b, a / b}, Rational(binomial(a, b)));
  return r;
}

Tensor2 comult(const Poly& f) {
  return map_poly(f, [](const Monomial& m) { return comult(m); });
}

Tensor3 comult2(const Monomial& a) {
  Tensor3 r;
  for (const auto& b : divisors(a)) {
    Monomial rest = a / b;
    for (const auto& c : divisors(rest)) {
      Monomial e = rest / c;
      r.add({b, c, e}, Rational(multinomial(a, {b, c, e})));
    }
  }
  return r;
}

Tensor4 comult3(const Monomial& a) {
  Tensor4 r;
  for (const auto& b : divisors(a)) {
    Monomial r1 = a / b;
    for (const auto& c : divisors(r1)) {
      Monomial r2 = r1 / c;
      for (const auto& e : divisors(r2)) {
        Monomial f = r2 / e;
        r.add({b, c, e, f}, Rational(multinomial(a, {b, c, e, f})));
      }
    }
  }
  return r;
}

Tensor3 comult_left(const Tensor2& t) {
  return map_factor(t, 0, [](const Monomial& m) { return comult(m); });
}

Tensor3 comult_right(const Tensor2& t) {
  return map_factor(t, 1, [](const Monomial& m) { return comult(m); });
}

Rational counit(const Monomial& a) { return a.is_one() ? Rational(1) : Rational(0); }

Rational counit(const Poly& f) {
  Rational r = 0;
  for (const auto& [m, c] : f) {
    if (m.is_one()) r += c;
  }
  return r;
}

Poly antipode(const Monomial& a) { return Poly(a, Rational(sign_of_degree(a.degree()))); }

Poly antipode(const Poly& f) {
  Poly r;
  for (const auto& [m, c] : f) r.add(m, c * sign_of_degree(m.degree()));
  return r;
}

Tensor2 antipode2(const Tensor2& t) {
  Tensor2 r;
  for (const auto& [k, c] : t) r.add(k, c * sign_of_degree(k[0].degree() + k[1].degree()));
  return r;
}

Tensor2 cocommutator(const Monomial& a) {
  Tensor2 d = comult(a);
  return d - t2_swap(d);
}

Poly multiply(const Tensor2& t) {
  Poly r;
  for (const auto& [k, c] : t) r.add(k[0] * k[1], c);
  return r;
}

// ---------------------------------------------------------------------------

const Tensor2& QMap::at(const Monomial& a) const {
  static const Tensor2 kZero;
  require_in_bound(a.degree(), bound_, "q-table lookup");
  auto it = values_.find(a);
  return it == values_.end() ? kZero : it->second;
}

void QMap::set(const Monomial& a, Tensor2 value) {
  if (a.nvars() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
  require_in_bound(a.degree(), bound_, "q-table assignment");
  if (value.is_zero()) {
    values_.erase(a);
  } else {
    values_[a] = std::move(value);
  }
}

Tensor2 QMap::apply(const Poly& f) const {
  Tensor2 r;
  for (const auto& [m, c] : f) r.add_scaled(at(m), c);
  return r;
}

const Poly& PMap::at(const Monomial& a, const Monomial& b) const {
  static const Poly kZero;
  require_in_bound(std::max(a.degree(), b.degree()), bound_, "p-table lookup");
  auto it = values_.find({a, b});
  return it == values_.end() ? kZero : it->second;
}

void PMap::set(const Monomial& a, const Monomial& b, Poly value) {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw std::invalid_argument("monomial has wrong variable count");
  }
  require_in_bound(std::max(a.degree(), b.degree()), bound_, "p-table assignment");
  if (value.is_zero()) {
    values_.erase({a, b});
  } else {
    values_[{a, b}] = std::move(value);
  }
}

Poly PMap::apply(const Poly& f, const Poly& g) const {
  Poly r;
  for (const auto& [ma, ca] : f) {
    for (const auto& [mb, cb] : g) r.add_scaled(at(ma, mb), ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// sum_{b | a} C(a,b) sign(|a/b|)^alternate * table(b) Delta(a/b)
Tensor2 splitting_sum(const QMap& table, const Monomial& a, bool alternate) {
  require_in_bound(a.degree(), table.bound(), "reciprocity transform");
  Tensor2 r;
  for (const auto& b : divisors(a)) {
    const Tensor2& head = table.at(b);
    if (head.is_zero()) continue;
    Monomial rest = a / b;
    Rational w(binomial(a, b));
    if (alternate) w *= sign_of_degree(rest.degree());
    r.add_scaled(head * comult(rest), w);
  }
  return r;
}

Poly double_splitting_sum(const PMap& table, const Monomial& a, const Monomial& b,
                          bool alternate) {
  require_in_bound(std::max(a.degree(), b.degree()), table.bound(), "reciprocity transform");
  Poly r;
  for (const auto& a1 : divisors(a)) {
    Monomial a2 = a / a1;
    for (const auto& b1 : divisors(b)) {
      const Poly& head = table.at(a1, b1);
      if (head.is_zero()) continue;
      Monomial b2 = b / b1;
      Rational w(binomial(a, a1) * binomial(b, b1));
      if (alternate) w *= sign_of_degree(a2.degree() + b2.degree());
      r.add_scaled(head * monomial_poly(a2 * b2), w);
    }
  }
  return r;
}

}  // namespace

Tensor2 q_from_i(const QMap& i_map, const Monomial& a) { return splitting_sum(i_map, a, false); }

Tensor2 i_from_q(const QMap& q, const Monomial& a) { return splitting_sum(q, a, true); }

QMap q_from_i(const QMap& i_map) {
  QMap q(i_map.nvars(), i_map.bound());
  for (const auto& a : monomials_up_to(i_map.nvars(), i_map.bound())) q.set(a, q_from_i(i_map, a));
  return q;
}

QMap i_from_q(const QMap& q) {
  QMap i_map(q.nvars(), q.bound());
  for (const auto& a : monomials_up_to(q.nvars(), q.bound())) i_map.set(a, i_from_q(q, a));
  return i_map;
}

Poly p_from_j(const PMap& j_map, const Monomial& a, const Monomial& b) {
  return double_splitting_sum(j_map, a, b, false);
}

Poly j_from_p(const PMap& p_map, const Monomial& a, const Monomial& b) {
  return double_splitting_sum(p_map, a, b, true);
}

PMap p_from_j(const PMap& j_map) {
  PMap p(j_map.nvars(), j_map.bound());
  auto monos = monomials_up_to(j_map.nvars(), j_map.bound());
  for (const auto& a : monos) {
    for (const auto& b : monos) p.set(a, b, p_from_j(j_map, a, b));
  }
  return p;
}

PMap j_from_p(const PMap& p_map) {
  PMap j(p_map.nvars(), p_map.bound());
  auto monos = monomials_up_to(p_map.nvars(), p_map.bound());
  for (const auto& a : monos) {
    for (const auto& b : monos) j.set(a, b, j_from_p(p_map, a, b));
  }
  return j;
}

Tensor3 turn_identity_lhs(const Monomial& a) {
  Tensor3 r;
  for (const auto& [k, c] : comult3(a)) {
    int s = sign_of_degree(k[0].degree() + k[1].degree());
    r.add({k[0] * k[2], k[1], k[3]}, c * s);
  }
  return r;
}

Tensor3 turn_identity_rhs(const Monomial& a) {
  Tensor3 r;
  for (const auto& [k, c] : comult(a)) {
    r.add({Monomial(a.nvars()), k[0], k[1]}, c * sign_of_degree(k[0].degree()));
  }
  return r;
}

}  // namespace copoisson
