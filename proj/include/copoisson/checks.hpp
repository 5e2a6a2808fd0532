#pragma once

// Degree-bounded verdicts for the Poisson / co-Poisson axioms on k[x1..xd].
//
// A pass certifies the identity on every monomial (pair, index triple) up to
// `degree_checked`; nothing is claimed beyond it. Failures carry witnesses
// whose residuals are exact nonzero values.

#include <cstddef>
#include <string>
#include <vector>

#include "copoisson/hopf.hpp"
#include "copoisson/structures.hpp"

namespace copoisson {

enum class Verdict { pass, fail, not_applicable };

std::string to_string(Verdict v);

struct Witness {
  std::string input;
  std::string residual;
};

struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::pass;
  std::size_t degree_checked = 0;
  std::vector<Witness> witnesses;
  /// Total violations found; witnesses holds at most the configured cap.
  std::size_t violation_count = 0;
  std::string note;

  bool passed() const noexcept { return verdict != Verdict::fail; }
};

struct CheckOptions {
  std::size_t witness_cap = 10;
  /// Variable names for rendering; empty means x1..xd.
  std::vector<std::string> names;
};

enum class CoLeibnizForm { definition, form1, form2 };

std::string to_string(CoLeibnizForm f);

/// (1 + t_2) q(a) = 0.
CheckReport check_skew(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// (1 + t_3 + t_3^2)(q (x) 1) q(a) = 0. Throws BoundError naming the bound
/// that the left tensor factors of q(a) actually require.
CheckReport check_cojacobi(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// Largest n <= q.bound() for which check_cojacobi has every value it needs.
std::size_t affordable_cojacobi_degree(const QMap& q);

/// definition: (Delta (x) 1) q = (1 (x) q) Delta - t_3^2 (q (x) 1) Delta
/// form1:      (1 (x) Delta) q = (q (x) 1) Delta - t_3 (1 (x) q) Delta
/// form2:      (Delta (x) 1) q = (1 - t_3)(1 (x) q) Delta   (cocommutative carriers)
CheckReport check_coleibniz(const QMap& q, std::size_t n, CoLeibnizForm form,
                            const CheckOptions& opts = {});

/// (eps (x) 1) q = (1 (x) eps) q = 0.
CheckReport check_counit_kill(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// q(ab) = q(a) Delta(b) + Delta(a) q(b) for monomials with |a| + |b| <= n.
CheckReport check_delta_derivation(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// Coefficient form of co-Jacobi for q = make_copoisson(I): for every |a| <= n
/// and i < j < k,
///   sum_{a_1 a_2 = a} sum_s lambda_{a_1}^{sk} lambda_{x_s a_2}^{ij}
///                         + lambda_{a_1}^{si} lambda_{x_s a_2}^{jk}
///                         + lambda_{a_1}^{sj} lambda_{x_s a_2}^{ki} = 0.
/// Agrees with check_cojacobi at the same n. Needs rows to degree n, and to
/// n + 1 when I(1) != 0.
CheckReport check_cojacobi_coeffs(const ITable& i_table, std::size_t n,
                                  const CheckOptions& opts = {});

/// sum_l f_lk d_l f_ij + f_li d_l f_jk + f_lj d_l f_ki = 0 for i < j < k
/// (modulo degree > n in series mode).
CheckReport check_jacobi(const BracketTable& b, std::size_t n, const CheckOptions& opts = {});

/// Delta{a,b} = sum {a_1,b_1} (x) a_2 b_2 + a_1 b_1 (x) {a_2,b_2} for |a| + |b| <= n.
/// Rejects series-mode tables with std::invalid_argument.
CheckReport check_poisson_hopf_compat(const BracketTable& b, std::size_t n,
                                      const CheckOptions& opts = {});

/// sum_l lambda^{ij}_l lambda^{lk}_s + lambda^{jk}_l lambda^{li}_s + lambda^{ki}_l lambda^{lj}_s = 0.
CheckReport check_linear_relations(const StructConsts& c, const CheckOptions& opts = {});

/// Every row off the degree-1 monomials is zero.
CheckReport check_support_condition(const ITable& i_table, const CheckOptions& opts = {});

/// eps{a,b} = 0 and S{a,b} = {S(b), S(a)}. Not applicable unless the table
/// passes check_poisson_hopf_compat at the same degree.
CheckReport check_eps_s_morphisms(const BracketTable& b, std::size_t n,
                                  const CheckOptions& opts = {});

/// q(S(a)) = t_2 (S (x) S) q(a).
CheckReport check_antipode_coanti(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// (q (x) Delta') Delta = (Delta' (x) q) Delta and the companion 5-fold identity
/// (Delta' (x) (1 (x) q) Delta) Delta = (q (x) (1 (x) Delta') Delta) Delta.
CheckReport check_dual_of_abcd(const QMap& q, std::size_t n, const CheckOptions& opts = {});

/// X lies in span{x_i (x) x_j - x_j (x) x_i}, tested through the criterion
/// (1 + t_2) X = 0 and (Delta (x) 1) X = (1 - t_3)(1 (x) X).
bool satisfies_primitive_wedge_criterion(const Tensor2& x);

/// Same membership, read directly off the terms.
bool in_primitive_wedge(const Tensor2& x);

}  // namespace copoisson
