#pragma once

// Terse constructors for test expressions.

#include <initializer_list>

#include "copoisson/monomial.hpp"
#include "copoisson/tensor.hpp"

namespace testhelpers {

using namespace copoisson;

inline Monomial M(std::initializer_list<Monomial::Exponent> e) { return Monomial(e); }
inline Poly P(const Monomial& m, const Rational& c = 1) { return Poly(m, c); }
inline Poly X(std::size_t d, std::size_t i) { return variable(d, i); }
inline Poly one(std::size_t d) { return constant(d, 1); }
inline Tensor2 T(const Poly& a, const Poly& b) { return outer(a, b); }
inline Tensor3 T(const Poly& a, const Poly& b, const Poly& c) { return outer(outer(a, b), c); }

}  // namespace testhelpers
