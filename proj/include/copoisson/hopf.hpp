#pragma once

// Hopf algebra structure of A = k[x1..xd] with primitive generators, and the
// reciprocity transforms between a map q: A -> A(x)A and its "I" form, and
// between a map p: A(x)A -> A and its "J" form.
//
// Sweedler sums over Delta(a) = sum_{b | a} C(a,b) x^b (x) x^{a/b} are
// evaluated by iterating the divisors b of a with binomial weights.

#include <cstddef>
#include <map>
#include <utility>

#include "copoisson/errors.hpp"
#include "copoisson/monomial.hpp"
#include "copoisson/tensor.hpp"

namespace copoisson {

Tensor2 comult(const Monomial& a);
Tensor2 comult(const Poly& f);

/// (Delta (x) 1) Delta = (1 (x) Delta) Delta, via multinomial weights a!/(b!c!e!).
Tensor3 comult2(const Monomial& a);

/// Three-fold iterated comultiplication, multinomial weights.
Tensor4 comult3(const Monomial& a);

/// (Delta (x) 1) and (1 (x) Delta) on 2-tensors.
Tensor3 comult_left(const Tensor2& t);
Tensor3 comult_right(const Tensor2& t);

Rational counit(const Monomial& a);
Rational counit(const Poly& f);

/// S(x^a) = (-1)^{|a|} x^a.
Poly antipode(const Monomial& a);
Poly antipode(const Poly& f);
/// S (x) S.
Tensor2 antipode2(const Tensor2& t);

/// Delta - t_2 Delta; identically zero because A is cocommutative.
Tensor2 cocommutator(const Monomial& a);

/// mu: A (x) A -> A.
Poly multiply(const Tensor2& t);

/// A linear map A -> A(x)A known on all monomials of degree <= bound.
/// Unset monomials map to zero. Requests above the bound throw BoundError.
class QMap {
 public:
  QMap() = default;
  QMap(std::size_t nvars, std::size_t bound) : nvars_(nvars), bound_(bound) {}

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t bound() const noexcept { return bound_; }

  const Tensor2& at(const Monomial& a) const;
  void set(const Monomial& a, Tensor2 value);
  Tensor2 apply(const Poly& f) const;

  /// Nonzero values only, graded-lex.
  const std::map<Monomial, Tensor2>& values() const noexcept { return values_; }

  friend bool operator==(const QMap&, const QMap&) = default;

 private:
  std::size_t nvars_ = 0;
  std::size_t bound_ = 0;
  std::map<Monomial, Tensor2> values_;
};

/// A linear map A(x)A -> A known on monomial pairs with both degrees <= bound.
class PMap {
 public:
  using Key = std::pair<Monomial, Monomial>;

  PMap() = default;
  PMap(std::size_t nvars, std::size_t bound) : nvars_(nvars), bound_(bound) {}

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t bound() const noexcept { return bound_; }

  const Poly& at(const Monomial& a, const Monomial& b) const;
  void set(const Monomial& a, const Monomial& b, Poly value);
  Poly apply(const Poly& f, const Poly& g) const;

  const std::map<Key, Poly>& values() const noexcept { return values_; }

  friend bool operator==(const PMap&, const PMap&) = default;

 private:
  std::size_t nvars_ = 0;
  std::size_t bound_ = 0;
  std::map<Key, Poly> values_;
};

/// q(a) = sum I(a_1) Delta(a_2).
Tensor2 q_from_i(const QMap& i_map, const Monomial& a);
/// I(a) = sum (-1)^{|a_2|} q(a_1) Delta(a_2).
Tensor2 i_from_q(const QMap& q, const Monomial& a);

/// Whole-table versions over every monomial of degree <= bound.
QMap q_from_i(const QMap& i_map);
QMap i_from_q(const QMap& q);

/// p(a (x) b) = sum J(a_1 (x) b_1) a_2 b_2.
Poly p_from_j(const PMap& j_map, const Monomial& a, const Monomial& b);
/// J(a (x) b) = sum (-1)^{|a_2|+|b_2|} p(a_1 (x) b_1) a_2 b_2.
Poly j_from_p(const PMap& p_map, const Monomial& a, const Monomial& b);

PMap p_from_j(const PMap& j_map);
PMap j_from_p(const PMap& p_map);

/// Both sides of the identity
///   sum (-1)^{|a_1|+|a_2|} a_1 a_3 (x) a_2 (x) a_4 = sum (-1)^{|a_1|} 1 (x) a_1 (x) a_2
/// over the iterated coproducts of a.
Tensor3 turn_identity_lhs(const Monomial& a);
Tensor3 turn_identity_rhs(const Monomial& a);

}  // namespace copoisson
