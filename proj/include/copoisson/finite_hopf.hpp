#pragma once

// Finite-dimensional Hopf algebras given by structure constants, and exact
// classification of Poisson / co-Poisson structures on them.
//
// An element of H^{(x)k} is a dense vector of length n^k; factor 0 is the
// most significant digit of the index.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "copoisson/checks.hpp"
#include "copoisson/linear.hpp"
#include "copoisson/rational.hpp"

namespace copoisson {

std::size_t dense_size(std::size_t n, std::size_t k);
Vec dense_basis(std::size_t n, std::size_t k, std::size_t index);
Vec dense_outer(const Vec& a, const Vec& b);
/// Output factor i is input factor perm[i].
Vec dense_permute(const Vec& t, std::size_t n, const std::vector<std::size_t>& perm);
/// Applies a linear map H -> H^{(x)m} (images of basis vectors) to factor `pos` of t in H^{(x)k}.
Vec dense_apply_at(const Vec& t, std::size_t n, std::size_t k, std::size_t pos,
                   const std::vector<Vec>& images, std::size_t m);
bool dense_is_zero(const Vec& v);
Vec dense_sub(Vec a, const Vec& b);
Vec dense_add(Vec a, const Vec& b);
Vec dense_scale(Vec a, const Rational& c);

class FinHopf {
 public:
  /// mult[(i*n+j)*n+k]: coefficient of e_k in e_i e_j.
  /// comult[(i*n+j)*n+k]: coefficient of e_j (x) e_k in Delta(e_i).
  /// antipode[i*n+j]: coefficient of e_j in S(e_i).
  /// Throws std::invalid_argument naming the first failing Hopf axiom.
  FinHopf(std::vector<std::string> basis_names, Vec mult, Vec unit, Vec comult, Vec counit,
          Vec antipode);

  std::size_t dim() const noexcept { return n_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const Vec& mult_table() const noexcept { return mult_; }
  const Vec& unit() const noexcept { return unit_; }
  const Vec& comult_table() const noexcept { return comult_; }
  const Vec& counit() const noexcept { return counit_; }
  const Vec& antipode_table() const noexcept { return antipode_; }

  Vec product(const Vec& a, const Vec& b) const;
  /// Componentwise product in H (x) H.
  Vec product2(const Vec& a, const Vec& b) const;
  Vec coproduct(const Vec& a) const;
  Rational counit_of(const Vec& a) const;
  Vec antipode_of(const Vec& a) const;

  /// Images of the basis under Delta, S, and eps (the latter as length-1 vectors).
  const std::vector<Vec>& comult_images() const noexcept { return comult_images_; }
  const std::vector<Vec>& antipode_images() const noexcept { return antipode_images_; }
  const std::vector<Vec>& counit_images() const noexcept { return counit_images_; }

  /// e.g. "1⊗x - x⊗1" for an element of H^{(x)k}.
  std::string render(const Vec& t, std::size_t k) const;

 private:
  void validate() const;

  std::size_t n_;
  std::vector<std::string> names_;
  Vec mult_, unit_, comult_, counit_, antipode_;
  std::vector<Vec> comult_images_, antipode_images_, counit_images_;
};

/// Basis {1, g, x, gx}.
FinHopf sweedler_h4();
/// Basis {1, g}.
FinHopf group_algebra_z2();

/// Skew bracket on H; table[(i*n+j)*n+k] is the coefficient of e_k in {e_i, e_j}.
struct FinBracket {
  std::size_t n = 0;
  Vec table;
  Vec operator()(const Vec& a, const Vec& b) const;
};

/// Unknown vector layout: for each pair i < j (lexicographic) the n coordinates of {e_i, e_j}.
std::size_t bracket_unknowns(std::size_t n);
FinBracket bracket_from_unknowns(std::size_t n, const Vec& u);

/// q(e_i) for each basis vector, each of length n^2.
using CoBracket = std::vector<Vec>;
/// Unknown vector layout: q(e_0), q(e_1), ... concatenated.
std::size_t cobracket_unknowns(std::size_t n);
CoBracket cobracket_from_unknowns(std::size_t n, const Vec& u);
Vec cobracket_apply(const FinHopf& h, const CoBracket& q, const Vec& a);

/// Residual vectors; every identity holds iff its residual is zero.
Vec leibniz_residual(const FinHopf& h, const FinBracket& b);
Vec unit_bracket_residual(const FinHopf& h, const FinBracket& b);
Vec poisson_hopf_residual(const FinHopf& h, const FinBracket& b);
Vec jacobi_residual(const FinHopf& h, const FinBracket& b);

Vec coskew_residual(const FinHopf& h, const CoBracket& q);
Vec counit_contraction_residual(const FinHopf& h, const CoBracket& q);
Vec coleibniz_residual(const FinHopf& h, const CoBracket& q);
Vec delta_derivation_residual(const FinHopf& h, const CoBracket& q);
Vec cojacobi_residual(const FinHopf& h, const CoBracket& q);

/// Skew brackets satisfying {1,-} = 0 and Leibniz, plus Hopf compatibility if requested.
LinearFamily solve_poisson_family(const FinHopf& h, bool hopf_compat);
/// Skew q with vanishing counit contractions and co-Leibniz, plus the
/// Delta-derivation rule if requested.
LinearFamily solve_copoisson_family(const FinHopf& h, bool hopf_compat);

enum class QuadraticIdentity { jacobi, cojacobi };

/// r(t) = constant + sum_k t_k linear[k] + sum_{k<=l} t_k t_l quadratic[(k,l)].
struct QuadraticForm {
  std::size_t nparams = 0;
  Vec constant;
  std::vector<Vec> linear;
  std::map<std::pair<std::size_t, std::size_t>, Vec> quadratic;

  Vec evaluate(const std::vector<Rational>& t) const;
  bool identically_zero() const;
};

/// Residual of the chosen identity as a function of the family parameters.
Vec family_residual(const LinearFamily& fam, QuadraticIdentity which, const FinHopf& h,
                    const std::vector<Rational>& t);

/// Coefficients recovered from probes at 0, e_k, 2e_k and e_k + e_l.
QuadraticForm quadratic_residual_family(const LinearFamily& fam, QuadraticIdentity which,
                                        const FinHopf& h);

/// (q (x) Delta') Delta = (Delta' (x) q) Delta and its 5-fold companion, on every basis vector.
CheckReport check_dual_of_abcd(const FinHopf& h, const CoBracket& q, const CheckOptions& opts = {});

/// Change of basis between a solved family and a named parameterization.
struct Presentation {
  std::vector<std::string> parameters;
  /// change_of_basis[p][k]: parameter p of family basis vector k.
  std::vector<Vec> change_of_basis;
  bool matches = false;
  std::string note;
};

/// Reads {g,x} = lambda x + mu gx off each basis vector of the H4 Poisson family.
Presentation present_h4_poisson(const FinHopf& h, const LinearFamily& fam);
/// Writes each basis vector of the H4 co-Poisson family as
/// q(1) = q(g) = 0, q(x) = alpha (1⊗x - x⊗1 + x⊗g - g⊗x), q(gx) = beta (1⊗gx - gx⊗1 + gx⊗g - g⊗gx).
Presentation present_h4_copoisson(const FinHopf& h, const LinearFamily& fam);

}  // namespace copoisson
