#pragma once

// Random structure generators shared by the unit and acceptance binaries.

#include <cstddef>
#include <random>
#include <vector>

#include "copoisson/hopf.hpp"
#include "copoisson/monomial.hpp"
#include "copoisson/structures.hpp"
#include "copoisson/tensor.hpp"

namespace testsupport {

using namespace copoisson;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small nonzero-biased rationals p/q with |p| <= 3, 1 <= q <= 3.
inline Rational small_rational(Rng& rng, bool allow_zero = true) {
  long p = 0;
  do {
    p = uniform(rng, -3, 3);
  } while (!allow_zero && p == 0);
  Rational r(p, uniform(rng, 1, 3));
  r.canonicalize();
  return r;
}

inline Monomial random_monomial(Rng& rng, std::size_t d, std::size_t max_degree) {
  auto all = monomials_up_to(d, max_degree);
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(all.size()) - 1))];
}

/// Sparse random Tensor2 over monomials of degree <= max_degree.
inline Tensor2 random_tensor2(Rng& rng, std::size_t d, std::size_t max_degree, int terms) {
  Tensor2 t;
  for (int k = 0; k < terms; ++k) {
    t.add({random_monomial(rng, d, max_degree), random_monomial(rng, d, max_degree)}, small_rational(rng, false));
  }
  return t;
}

/// Arbitrary linear map on monomials of degree <= bound (no axioms imposed).
inline QMap random_qmap(Rng& rng, std::size_t d, std::size_t bound, int rows) {
  QMap q(d, bound);
  for (int r = 0; r < rows; ++r) {
    Monomial a = random_monomial(rng, d, bound);
    q.set(a, random_tensor2(rng, d, std::max<std::size_t>(1, a.degree()), 3));
  }
  return q;
}

inline PMap random_pmap(Rng& rng, std::size_t d, std::size_t bound, int entries) {
  PMap p(d, bound);
  for (int r = 0; r < entries; ++r) {
    Poly f;
    for (int k = 0; k < 3; ++k) f.add(random_monomial(rng, d, bound), small_rational(rng, false));
    p.set(random_monomial(rng, d, bound), random_monomial(rng, d, bound), f);
  }
  return p;
}

/// ITable with `rows` random rows; entries i<j drawn independently.
inline ITable random_itable(Rng& rng, std::size_t d, std::size_t bound, int rows) {
  ITable t(d, bound);
  for (int r = 0; r < rows; ++r) {
    Monomial a = random_monomial(rng, d, bound);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) t.set_entry(a, i, j, small_rational(rng));
    }
  }
  return t;
}

/// {x_i, x_j} = phi * eps_ijk dC/dx_k on three variables; Jacobi holds for every phi and C.
inline BracketTable nambu_bracket(const Poly& phi, const Poly& casimir) {
  BracketTable b(3);
  b.set(0, 1, phi * derivative(casimir, 2));
  b.set(1, 2, phi * derivative(casimir, 0));
  b.set(0, 2, -(phi * derivative(casimir, 1)));
  return b;
}

inline Poly random_poly(Rng& rng, std::size_t d, std::size_t min_degree, std::size_t max_degree, int terms) {
  Poly p;
  for (int k = 0; k < terms; ++k) {
    Monomial m = random_monomial(rng, d, max_degree);
    if (m.degree() >= min_degree) p.add(m, small_rational(rng, false));
  }
  return p;
}

/// {x_i, x_j} = c_ij x_i x_j with c skew; quadratic and Jacobi.
inline BracketTable log_canonical(Rng& rng, std::size_t d) {
  BracketTable b(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      b.set(i, j, Poly(Monomial::variable(d, i) * Monomial::variable(d, j), small_rational(rng)));
    }
  }
  return b;
}

/// Copies the entries of a polynomial bracket into a series table truncated at N.
inline BracketTable as_series(const BracketTable& b, std::size_t truncation) {
  BracketTable s = BracketTable::series(b.nvars(), truncation);
  for (const auto& [ij, f] : b.entries()) s.set(ij.first, ij.second, f);
  return s;
}

inline StructConsts so3() {
  StructConsts c(3);
  c.set(0, 1, 2, Rational(1));
  c.set(1, 2, 0, Rational(1));
  c.set(2, 0, 1, Rational(1));
  return c;
}

/// Conjugates a Lie algebra by a random upper unitriangular integer matrix T:
/// y_i = sum_a T_ia x_a, so T^{-1} is integral too.
inline StructConsts random_lie(Rng& rng, const StructConsts& base) {
  const std::size_t d = base.nvars();
  std::vector<std::vector<Rational>> t(d, std::vector<Rational>(d)), inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    t[i][i] = 1;
    for (std::size_t j = i + 1; j < d; ++j) t[i][j] = uniform(rng, -2, 2);
  }
  // Back substitution for the unitriangular inverse.
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t ii = d; ii-- > 0;) {
      Rational s = ii == col ? Rational(1) : Rational(0);
      for (std::size_t k = ii + 1; k < d; ++k) s -= t[ii][k] * inv[k][col];
      inv[ii][col] = s;
    }
  }
  StructConsts out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        Rational v = 0;
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t c = 0; c < d; ++c) v += t[i][a] * t[j][b] * base(a, b, c) * inv[c][l];
          }
        }
        out.set(i, j, l, v);
      }
    }
  }
  return out;
}

/// Base Lie algebras to conjugate: so(3), Heisenberg, and the 2-dim nonabelian one padded.
inline StructConsts base_lie(std::size_t which) {
  StructConsts c(3);
  switch (which % 3) {
    case 0: return so3();
    case 1: c.set(0, 1, 2, Rational(1)); return c;
    default: c.set(0, 1, 1, Rational(1)); c.set(0, 2, 2, Rational(2)); return c;
  }
}

}  // namespace testsupport
