#pragma once

// Exact rational Gaussian elimination.

#include <cstddef>
#include <functional>
#include <vector>

#include "copoisson/rational.hpp"

namespace copoisson {

using Vec = std::vector<Rational>;

struct Rref {
  /// Nonzero rows of the reduced row echelon form.
  std::vector<Vec> rows;
  /// Pivot column of each row.
  std::vector<std::size_t> pivots;
};

/// Pivots on the first nonzero entry in column order.
Rref rref(std::vector<Vec> rows, std::size_t ncols);

/// Solution space of a homogeneous (offset zero) or affine linear system.
struct LinearFamily {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;
  Vec offset;

  std::size_t dimension() const noexcept { return basis.size(); }
  /// offset + sum_k t_k basis_k.
  Vec member(const std::vector<Rational>& t) const;
};

/// Null space of the matrix with the given rows: one basis vector per free
/// column, with 1 in that column and 0 in every other free column.
LinearFamily nullspace(const std::vector<Vec>& rows, std::size_t ncols);

/// Matrix of a linear map k^ncols -> k^m given as a function, read off at unit vectors.
/// Rows that vanish identically are dropped.
std::vector<Vec> probe_matrix(const std::function<Vec(const Vec&)>& f, std::size_t ncols);

std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols);

}  // namespace copoisson
