#pragma once

// The degree-truncated dual of A = k[x1..xd] as power series in X1..Xd.
//
// X^b pairs with x^a as <X^b, x^a> = a! delta_{ab}, so the convolution product
// on A* is ordinary series multiplication. A truncated series is read as the
// functional vanishing on monomials of degree > N.

#include <cstddef>

#include "copoisson/checks.hpp"
#include "copoisson/hopf.hpp"
#include "copoisson/structures.hpp"
#include "copoisson/tensor.hpp"

namespace copoisson {

class SeriesElement {
 public:
  SeriesElement() = default;
  SeriesElement(std::size_t nvars, std::size_t truncation) : nvars_(nvars), truncation_(truncation) {}
  /// Drops terms of degree > truncation.
  SeriesElement(std::size_t nvars, std::size_t truncation, const Poly& terms);

  static SeriesElement one(std::size_t nvars, std::size_t truncation);
  static SeriesElement variable(std::size_t nvars, std::size_t truncation, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t truncation() const noexcept { return truncation_; }
  const Poly& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.is_zero(); }

  SeriesElement& operator+=(const SeriesElement& o);
  SeriesElement& operator-=(const SeriesElement& o);
  friend SeriesElement operator+(SeriesElement a, const SeriesElement& b) { return a += b; }
  friend SeriesElement operator-(SeriesElement a, const SeriesElement& b) { return a -= b; }
  friend SeriesElement operator*(const Rational& c, const SeriesElement& f) {
    return SeriesElement(f.nvars_, f.truncation_, f.terms_ * c);
  }

  friend bool operator==(const SeriesElement&, const SeriesElement&) = default;

 private:
  std::size_t nvars_ = 0;
  std::size_t truncation_ = 0;
  Poly terms_;
};

/// <f, a>, bilinear.
Rational pairing(const SeriesElement& f, const Poly& a);
Rational pairing(const SeriesElement& f, const Monomial& a);

/// Convolution product; truncations must agree.
SeriesElement dual_mul(const SeriesElement& f, const SeriesElement& g);

/// {f, g}: the functional c -> (f (x) g) q(c), written in the X^c basis.
/// Requires q.bound() >= the common truncation.
SeriesElement dual_bracket(const QMap& q, const SeriesElement& f, const SeriesElement& g);

/// Builds q from a bracket table truncated at N, checks the co-Poisson axioms
/// at the affordable degree, and recovers every f_ij through dual_bracket.
CheckReport verify_series_roundtrip(const BracketTable& b, std::size_t n,
                                   const CheckOptions& opts = {});

}  // namespace copoisson
