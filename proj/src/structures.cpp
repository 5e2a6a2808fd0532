#include "copoisson/structures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace copoisson {

void SkewMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("skew matrix index out of range");
  if (i == j) {
    if (!copoisson::is_zero(v)) throw std::invalid_argument("skew matrix diagonal must be zero");
    return;
  }
  entries_[i * dim_ + j] = v;
  entries_[j * dim_ + i] = -v;
}

bool SkewMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!copoisson::is_zero(e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

const SkewMatrix& ITable::row(const Monomial& a) const {
  if (a.degree() > bound_) {
    throw BoundError("I-table lookup: degree " + std::to_string(a.degree()) +
                         " exceeds table bound " + std::to_string(bound_),
                     a.degree());
  }
  auto it = rows_.find(a);
  return it == rows_.end() ? zero_ : it->second;
}

void ITable::set_row(const Monomial& a, SkewMatrix m) {
  if (a.nvars() != nvars_ || m.dim() != nvars_) {
    throw std::invalid_argument("I-table row has wrong variable count");
  }
  if (a.degree() > bound_) {
    throw BoundError("I-table row above bound " + std::to_string(bound_), a.degree());
  }
  if (m.is_zero()) {
    rows_.erase(a);
  } else {
    rows_[a] = std::move(m);
  }
}

void ITable::set_entry(const Monomial& a, std::size_t i, std::size_t j, const Rational& v) {
  SkewMatrix m = row(a);
  m.set(i, j, v);
  set_row(a, std::move(m));
}

Tensor2 ITable::value(const Monomial& a) const {
  const SkewMatrix& m = row(a);
  Tensor2 t;
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (i == j) continue;
      t.add({Monomial::variable(nvars_, i), Monomial::variable(nvars_, j)}, m(i, j));
    }
  }
  return t;
}

QMap ITable::as_map() const {
  QMap m(nvars_, bound_);
  for (const auto& [a, row] : rows_) m.set(a, value(a));
  return m;
}

// ---------------------------------------------------------------------------

BracketTable BracketTable::series(std::size_t nvars, std::size_t truncation) {
  BracketTable b(nvars);
  b.truncation_ = truncation;
  return b;
}

Poly BracketTable::f(std::size_t i, std::size_t j) const {
  if (i >= nvars_ || j >= nvars_) throw std::out_of_range("bracket index out of range");
  if (i == j) return {};
  bool flip = i > j;
  auto it = entries_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == entries_.end()) return {};
  return flip ? -it->second : it->second;
}

void BracketTable::set(std::size_t i, std::size_t j, Poly value) {
  if (i >= nvars_ || j >= nvars_) throw std::out_of_range("bracket index out of range");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("{x_i, x_i} must be zero");
    return;
  }
  if (truncation_) value = truncate(value, *truncation_);
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  if (value.is_zero()) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = std::move(value);
  }
}

void StructConsts::set(std::size_t i, std::size_t j, std::size_t l, const Rational& v) {
  if (i >= nvars_ || j >= nvars_ || l >= nvars_) {
    throw std::out_of_range("structure constant index out of range");
  }
  if (i == j) {
    if (!copoisson::is_zero(v)) throw std::invalid_argument("lambda^{ii}_l must be zero");
    return;
  }
  lambda_[(i * nvars_ + j) * nvars_ + l] = v;
  lambda_[(j * nvars_ + i) * nvars_ + l] = -v;
}

// ---------------------------------------------------------------------------

Poly poisson_bracket(const BracketTable& b, const Poly& f_in, const Poly& g_in) {
  const std::size_t d = b.nvars();
  Poly f = f_in;
  Poly g = g_in;
  if (auto n = b.truncation()) {
    f = truncate(f, *n);
    g = truncate(g, *n);
  }
  std::vector<Poly> df(d), dg(d);
  for (std::size_t i = 0; i < d; ++i) {
    df[i] = derivative(f, i);
    dg[i] = derivative(g, i);
  }
  Poly r;
  for (std::size_t i = 0; i < d; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j || dg[j].is_zero()) continue;
      Poly fij = b.f(i, j);
      if (fij.is_zero()) continue;
      r += df[i] * dg[j] * fij;
    }
  }
  if (auto n = b.truncation()) r = truncate(r, *n);
  return r;
}

QMap make_copoisson(const ITable& i_table) { return q_from_i(i_table.as_map()); }

BracketTable linear_poisson(const StructConsts& c) {
  const std::size_t d = c.nvars();
  BracketTable b(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Poly f;
      for (std::size_t l = 0; l < d; ++l) f.add(Monomial::variable(d, l), c(i, j, l));
      b.set(i, j, std::move(f));
    }
  }
  return b;
}

ITable copoisson_from_series(const BracketTable& b) {
  auto n = b.truncation();
  if (!n) throw std::invalid_argument("copoisson_from_series needs a truncated (series-mode) table");
  ITable table(b.nvars(), *n);
  for (const auto& [ij, f] : b.entries()) {
    for (const auto& [a, coeff] : f) {
      if (a.degree() > *n) continue;
      table.set_entry(a, ij.first, ij.second, coeff * Rational(factorial(a)));
    }
  }
  return table;
}

BracketTable series_from_copoisson(const ITable& i_table) {
  const std::size_t d = i_table.nvars();
  BracketTable b = BracketTable::series(d, i_table.bound());
  std::map<std::pair<std::size_t, std::size_t>, Poly> acc;
  for (const auto& [a, m] : i_table.rows()) {
    Rational inv_fact(1, 1);
    inv_fact /= Rational(factorial(a));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) acc[{i, j}].add(a, m(i, j) * inv_fact);
    }
  }
  for (auto& [ij, f] : acc) b.set(ij.first, ij.second, std::move(f));
  return b;
}

ITable copoisson_hopf_from_consts(const StructConsts& c, std::size_t bound) {
  const std::size_t d = c.nvars();
  ITable table(d, bound);
  if (bound == 0) return table;
  for (std::size_t s = 0; s < d; ++s) {
    SkewMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) m.set(i, j, c(i, j, s));
    }
    table.set_row(Monomial::variable(d, s), std::move(m));
  }
  return table;
}

Rationality is_rational(const ITable& i_table) {
  std::size_t least = 0;
  for (const auto& [a, m] : i_table.rows()) least = std::max<std::size_t>(least, a.degree() + 1);
  if (least > i_table.bound()) return {false, std::nullopt};
  return {true, least};
}

QMap tensor_copoisson(const QMap& q_c, const QMap& q_d) {
  if (q_c.bound() != q_d.bound()) {
    throw std::invalid_argument("tensor_copoisson: degree bounds differ (" +
                                std::to_string(q_c.bound()) + " vs " +
                                std::to_string(q_d.bound()) + ")");
  }
  const std::size_t d1 = q_c.nvars();
  const std::size_t d2 = q_d.nvars();
  const std::size_t d = d1 + d2;
  auto embed2 = [d](const Tensor2& t, std::size_t offset) {
    Tensor2 r;
    for (const auto& [k, c] : t) r.add({k[0].embed(d, offset), k[1].embed(d, offset)}, c);
    return r;
  };
  QMap q(d, q_c.bound());
  for (const auto& m : monomials_up_to(d, q_c.bound())) {
    Monomial a(d1), b(d2);
    for (std::size_t i = 0; i < d1; ++i) a.set(i, m[i]);
    for (std::size_t i = 0; i < d2; ++i) b.set(i, m[d1 + i]);
    Tensor2 value = embed2(q_c.at(a), 0) * embed2(comult(b), d1);
    value += embed2(comult(a), 0) * embed2(q_d.at(b), d1);
    q.set(m, std::move(value));
  }
  return q;
}

BracketTable tensor_poisson(const BracketTable& a, const BracketTable& b) {
  if (a.mode() != BracketMode::polynomial || b.mode() != BracketMode::polynomial) {
    throw std::invalid_argument("tensor_poisson is defined for polynomial-mode tables");
  }
  const std::size_t d1 = a.nvars();
  const std::size_t d = d1 + b.nvars();
  BracketTable r(d);
  for (const auto& [ij, f] : a.entries()) r.set(ij.first, ij.second, embed(f, d, 0));
  for (const auto& [ij, f] : b.entries()) r.set(d1 + ij.first, d1 + ij.second, embed(f, d, d1));
  return r;
}

}  // namespace copoisson
