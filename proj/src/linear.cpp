#include "copoisson/linear.hpp"

#include <stdexcept>
#include <utility>

namespace copoisson {

Rref rref(std::vector<Vec> rows, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("rref: row length mismatch");
  }
  Rref out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && copoisson::is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    Rational inv = 1 / rows[top][col];
    for (auto& v : rows[top]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || copoisson::is_zero(rows[r][col])) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (!copoisson::is_zero(rows[top][c])) rows[r][c] -= factor * rows[top][c];
      }
    }
    out.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

Vec LinearFamily::member(const std::vector<Rational>& t) const {
  if (t.size() != basis.size()) throw std::invalid_argument("family parameter count mismatch");
  Vec r = offset.empty() ? Vec(ambient_dim) : offset;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (copoisson::is_zero(t[k])) continue;
    for (std::size_t i = 0; i < ambient_dim; ++i) r[i] += t[k] * basis[k][i];
  }
  return r;
}

LinearFamily nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
  Rref e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  LinearFamily fam;
  fam.ambient_dim = ncols;
  fam.offset = Vec(ncols);
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    fam.basis.push_back(std::move(v));
  }
  return fam;
}

std::vector<Vec> probe_matrix(const std::function<Vec(const Vec&)>& f, std::size_t ncols) {
  std::vector<Vec> columns;
  columns.reserve(ncols);
  std::size_t nrows = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    Vec unit(ncols);
    unit[c] = 1;
    columns.push_back(f(unit));
    if (c == 0) {
      nrows = columns.back().size();
    } else if (columns.back().size() != nrows) {
      throw std::logic_error("probe_matrix: residual length varies");
    }
  }
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < nrows; ++r) {
    Vec row(ncols);
    bool any = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      row[c] = columns[c][r];
      if (!copoisson::is_zero(row[c])) any = true;
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols) {
  return rref(rows, ncols).rows.size();
}

}  // namespace copoisson
