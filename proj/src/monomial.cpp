#include "copoisson/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace copoisson {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("monomials over different variable counts (" +
                                std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()) + ")");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial::Monomial(const std::vector<Exponent>& exponents) : Monomial(exponents.size()) {
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.set(i, 1);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  exps_[i] = e;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& a) const {
  require_same_vars(*this, a);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > a.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_vars(*this, other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] + other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

Monomial Monomial::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw std::invalid_argument("embedding does not fit");
  Monomial r(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[offset + i] = exps_[i];
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Within a degree, larger leading exponents come first.
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  }
  return std::strong_ordering::equal;
}

Integer binomial(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) return 0;
  Integer r = 1;
  Integer c;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    mpz_bin_uiui(c.get_mpz_t(), a[i], b[i]);
    r *= c;
  }
  return r;
}

Integer factorial(const Monomial& a) {
  Integer r = 1;
  Integer f;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    mpz_fac_ui(f.get_mpz_t(), a[i]);
    r *= f;
  }
  return r;
}

Integer multinomial(const Monomial& a, const std::vector<Monomial>& parts) {
  Monomial total(a.nvars());
  Integer denom = 1;
  for (const auto& p : parts) {
    total = total * p;
    denom *= factorial(p);
  }
  if (total != a) throw std::invalid_argument("parts do not multiply to the monomial");
  return factorial(a) / denom;
}

std::vector<Monomial> divisors(const Monomial& a) {
  std::vector<Monomial> out;
  Monomial b(a.nvars());
  // Odometer over the box 0 <= b_i <= a_i.
  while (true) {
    out.push_back(b);
    std::size_t i = 0;
    for (; i < a.nvars(); ++i) {
      if (b[i] < a[i]) {
        b.set(i, b[i] + 1);
        break;
      }
      b.set(i, 0);
    }
    if (i == a.nvars()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Compositions of `degree` into nvars parts, generated with x1 exponent descending.
  auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (i + 1 == nvars) {
      m.set(i, static_cast<Monomial::Exponent>(remaining));
      out.push_back(m);
      return;
    }
    for (std::size_t e = remaining + 1; e-- > 0;) {
      m.set(i, static_cast<Monomial::Exponent>(e));
      self(self, i + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t max_degree) {
  std::vector<Monomial> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace copoisson
