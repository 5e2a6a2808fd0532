#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "copoisson/rational.hpp"

namespace copoisson {

inline constexpr std::size_t kMaxVariables = 16;

/// Monic monomial x1^n1 ... xd^nd of k[x1..xd], stored as its exponent vector.
///
/// The ambient variable count d is part of the value; arithmetic between
/// monomials of different d throws std::invalid_argument.
///
/// Ordering is graded lexicographic: lower total degree first, and within a
/// degree the monomial with the larger exponent of x1 (then x2, ...) first.
/// Every map keyed by monomials therefore iterates in the same canonical order.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exponents);
  explicit Monomial(const std::vector<Exponent>& exponents);

  /// x_i as a monomial in `nvars` variables; i is 0-based.
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }

  /// Componentwise b <= a, i.e. b | a.
  bool divides(const Monomial& a) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other | *this.
  Monomial operator/(const Monomial& other) const;

  /// Same exponents embedded in `nvars` variables starting at `offset`.
  Monomial embed(std::size_t nvars, std::size_t offset) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
};

/// prod_i C(a_i, b_i); zero unless b | a.
Integer binomial(const Monomial& a, const Monomial& b);

/// prod_i a_i!
Integer factorial(const Monomial& a);

/// a! / (b_1! ... b_k!) for a = b_1 ... b_k.
Integer multinomial(const Monomial& a, const std::vector<Monomial>& parts);

/// All b with b | a, in graded-lex order.
std::vector<Monomial> divisors(const Monomial& a);

/// All monomials in `nvars` variables of total degree <= max_degree, graded-lex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t max_degree);

/// All monomials of exactly the given degree, graded-lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t degree);

/// "x1^2*x3" style rendering; "1" for the empty monomial.
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

/// Default variable names x1..xd.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace copoisson
