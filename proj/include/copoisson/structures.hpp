#pragma once

// Concrete Poisson and co-Poisson structure objects on k[x1..xd].
//
// Variable indices in this API are 0-based; the file format and reports use
// 1-based indices.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "copoisson/hopf.hpp"
#include "copoisson/tensor.hpp"

namespace copoisson {

/// d x d rational matrix with m(i,j) = -m(j,i).
class SkewMatrix {
 public:
  explicit SkewMatrix(std::size_t dim = 0) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  /// Sets (i,j) and (j,i) together. Nonzero diagonal values are rejected.
  void set(std::size_t i, std::size_t j, const Rational& v);
  bool is_zero() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// The coefficient family lambda_a^{ij}: a linear map I: A -> span{x_i(x)x_j - x_j(x)x_i}
/// known on all monomials of degree <= bound. Absent rows are zero.
class ITable {
 public:
  ITable() = default;
  ITable(std::size_t nvars, std::size_t bound) : nvars_(nvars), bound_(bound), zero_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t bound() const noexcept { return bound_; }

  const SkewMatrix& row(const Monomial& a) const;
  void set_row(const Monomial& a, SkewMatrix m);
  /// lambda_a^{ij} = v and lambda_a^{ji} = -v.
  void set_entry(const Monomial& a, std::size_t i, std::size_t j, const Rational& v);

  /// I(a) = sum_{i,j} lambda_a^{ij} x_i (x) x_j.
  Tensor2 value(const Monomial& a) const;
  QMap as_map() const;

  /// Nonzero rows, graded-lex.
  const std::map<Monomial, SkewMatrix>& rows() const noexcept { return rows_; }

  friend bool operator==(const ITable&, const ITable&) = default;

 private:
  std::size_t nvars_ = 0;
  std::size_t bound_ = 0;
  SkewMatrix zero_;
  std::map<Monomial, SkewMatrix> rows_;
};

enum class BracketMode { polynomial, series };

/// Brackets {x_i, x_j} = f_ij with the skew completion implied. In series
/// mode every f_ij and every computed bracket is reduced modulo degree > N.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t nvars) : nvars_(nvars) {}
  static BracketTable series(std::size_t nvars, std::size_t truncation);

  std::size_t nvars() const noexcept { return nvars_; }
  BracketMode mode() const noexcept { return truncation_ ? BracketMode::series : BracketMode::polynomial; }
  std::optional<std::size_t> truncation() const noexcept { return truncation_; }

  Poly f(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Poly value);

  /// Stored entries with i < j, nonzero only.
  const std::map<std::pair<std::size_t, std::size_t>, Poly>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t nvars_ = 0;
  std::optional<std::size_t> truncation_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> entries_;
};

/// Structure constants {x_i, x_j} = sum_l lambda^{ij}_l x_l.
class StructConsts {
 public:
  StructConsts() = default;
  explicit StructConsts(std::size_t nvars) : nvars_(nvars), lambda_(nvars * nvars * nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t l) const {
    return lambda_[(i * nvars_ + j) * nvars_ + l];
  }
  /// Sets lambda^{ij}_l = v and lambda^{ji}_l = -v.
  void set(std::size_t i, std::size_t j, std::size_t l, const Rational& v);

  friend bool operator==(const StructConsts&, const StructConsts&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Rational> lambda_;
};

/// {f, g} = sum_{i,j} (df/dx_i)(dg/dx_j) f_ij.
Poly poisson_bracket(const BracketTable& b, const Poly& f, const Poly& g);

/// q(a) = I(a_1) Delta(a_2) materialized on every monomial of degree <= bound.
QMap make_copoisson(const ITable& i_table);

BracketTable linear_poisson(const StructConsts& c);

/// alpha_a^{ij} = a! * (coefficient of a in f_ij); the table's truncation becomes the bound.
ITable copoisson_from_series(const BracketTable& b);

/// Inverse of copoisson_from_series: f_ij = sum_a (alpha_a^{ij} / a!) a.
BracketTable series_from_copoisson(const ITable& i_table);

/// I(x_s) = sum_{ij} lambda^{ij}_s x_i (x) x_j, I zero on every other monomial.
ITable copoisson_hopf_from_consts(const StructConsts& c, std::size_t bound);

struct Rationality {
  bool rational = false;
  /// Least n with every row of degree >= n zero (only degrees <= bound are inspected).
  std::optional<std::size_t> degree;
};

Rationality is_rational(const ITable& i_table);

/// Co-Poisson structure of C (x) D on k[x_1..x_{d1}, y_1..y_{d2}], identifying a (x) b with ab.
QMap tensor_copoisson(const QMap& q_c, const QMap& q_d);

/// Bracket on the joint variables: blocks unchanged, cross-block brackets zero.
BracketTable tensor_poisson(const BracketTable& a, const BracketTable& b);

}  // namespace copoisson
