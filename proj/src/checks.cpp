#include "copoisson/checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace copoisson {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

std::string to_string(CoLeibnizForm f) {
  switch (f) {
    case CoLeibnizForm::definition: return "definition";
    case CoLeibnizForm::form1: return "form1";
    case CoLeibnizForm::form2: return "form2";
  }
  return "unknown";
}

namespace {

int sign_of_degree(std::uint64_t degree) { return degree % 2 == 0 ? 1 : -1; }

class Collector {
 public:
  Collector(std::string name, std::size_t degree, const CheckOptions& opts, std::size_t nvars)
      : opts_(opts), names_(opts.names.empty() ? default_names(nvars) : opts.names) {
    report_.check_name = std::move(name);
    report_.degree_checked = degree;
  }

  const std::vector<std::string>& names() const { return names_; }

  void violation(std::string input, std::string residual) {
    ++report_.violation_count;
    report_.verdict = Verdict::fail;
    if (report_.witnesses.size() < std::max<std::size_t>(opts_.witness_cap, 1)) {
      report_.witnesses.push_back({std::move(input), std::move(residual)});
    }
  }

  std::string mono(const Monomial& a) const { return to_string(a, names_); }

  template <class T>
  std::string render(const T& t) const {
    return to_string(t, names_);
  }

  CheckReport finish(std::string note = {}) {
    report_.note = std::move(note);
    return std::move(report_);
  }

 private:
  const CheckOptions& opts_;
  std::vector<std::string> names_;
  CheckReport report_;
};

void require_degree(std::size_t n, std::size_t bound, const std::string& what) {
  if (n > bound) {
    throw BoundError(what + ": degree " + std::to_string(n) + " exceeds table bound " +
                         std::to_string(bound),
                     n);
  }
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(i,j,k) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(k + 1) + ")";
}

// (q (x) 1) Delta(a) and (1 (x) q) Delta(a).
Tensor3 q_left_of_comult(const QMap& q, const Monomial& a) {
  return map_factor(comult(a), 0, [&](const Monomial& m) { return q.at(m); });
}

Tensor3 q_right_of_comult(const QMap& q, const Monomial& a) {
  return map_factor(comult(a), 1, [&](const Monomial& m) { return q.at(m); });
}

Tensor2 cocommutator_of(const Monomial& m) { return cocommutator(m); }

}  // namespace

CheckReport check_skew(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "skew check");
  Collector c("skew", n, opts, q.nvars());
  for (const auto& a : monomials_up_to(q.nvars(), n)) {
    const Tensor2& v = q.at(a);
    Tensor2 r = v + t2_swap(v);
    if (!r.is_zero()) c.violation("a = " + c.mono(a), c.render(r));
  }
  return c.finish();
}

std::size_t affordable_cojacobi_degree(const QMap& q) {
  std::size_t best = 0;
  bool any = false;
  for (std::size_t n = 0; n <= q.bound(); ++n) {
    bool ok = true;
    for (const auto& a : monomials_of_degree(q.nvars(), n)) {
      long need = max_factor_degree(q.at(a), 0);
      if (need > static_cast<long>(q.bound())) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    best = n;
    any = true;
  }
  return any ? best : 0;
}

CheckReport check_cojacobi(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "co-Jacobi check");
  auto monos = monomials_up_to(q.nvars(), n);
  long need = -1;
  for (const auto& a : monos) need = std::max(need, max_factor_degree(q.at(a), 0));
  if (need > static_cast<long>(q.bound())) {
    throw BoundError("co-Jacobi up to degree " + std::to_string(n) + " evaluates q in degree " +
                         std::to_string(need) + "; table bound is " +
                         std::to_string(q.bound()),
                     static_cast<std::size_t>(need));
  }
  Collector c("cojacobi", n, opts, q.nvars());
  for (const auto& a : monos) {
    Tensor3 inner = map_factor(q.at(a), 0, [&](const Monomial& m) { return q.at(m); });
    Tensor3 r = cyclic_sum(inner);
    if (!r.is_zero()) c.violation("a = " + c.mono(a), c.render(r));
  }
  return c.finish();
}

CheckReport check_coleibniz(const QMap& q, std::size_t n, CoLeibnizForm form,
                            const CheckOptions& opts) {
  require_degree(n, q.bound(), "co-Leibniz check");
  Collector c("coleibniz_" + to_string(form), n, opts, q.nvars());
  for (const auto& a : monomials_up_to(q.nvars(), n)) {
    const Tensor2& v = q.at(a);
    Tensor3 right = q_right_of_comult(q, a);
    Tensor3 left = q_left_of_comult(q, a);
    Tensor3 lhs, rhs;
    switch (form) {
      case CoLeibnizForm::definition:
        lhs = comult_left(v);
        rhs = right - t3_cycle(t3_cycle(left));
        break;
      case CoLeibnizForm::form1:
        lhs = comult_right(v);
        rhs = left - t3_cycle(right);
        break;
      case CoLeibnizForm::form2:
        lhs = comult_left(v);
        rhs = right - t3_cycle(right);
        break;
    }
    Tensor3 r = lhs - rhs;
    if (!r.is_zero()) c.violation("a = " + c.mono(a), c.render(r));
  }
  return c.finish();
}

CheckReport check_counit_kill(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "counit check");
  Collector c("counit_kill", n, opts, q.nvars());
  auto eps = [](const Monomial& m) { return counit(m); };
  for (const auto& a : monomials_up_to(q.nvars(), n)) {
    const Tensor2& v = q.at(a);
    Poly left = contract(v, 0, eps);
    Poly right = contract(v, 1, eps);
    if (!left.is_zero() || !right.is_zero()) {
      c.violation("a = " + c.mono(a), "(eps⊗1)q(a) = " + c.render(left) +
                                          "; (1⊗eps)q(a) = " + c.render(right));
    }
  }
  return c.finish();
}

CheckReport check_delta_derivation(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "Delta-derivation check");
  Collector c("delta_derivation", n, opts, q.nvars());
  auto monos = monomials_up_to(q.nvars(), n);
  for (const auto& a : monos) {
    for (const auto& b : monos) {
      if (a.degree() + b.degree() > n) continue;
      Tensor2 r = q.at(a * b) - q.at(a) * comult(b) - comult(a) * q.at(b);
      if (!r.is_zero()) c.violation("(a, b) = (" + c.mono(a) + ", " + c.mono(b) + ")", c.render(r));
    }
  }
  return c.finish();
}

CheckReport check_cojacobi_coeffs(const ITable& i_table, std::size_t n, const CheckOptions& opts) {
  const std::size_t d = i_table.nvars();
  // Rows of degree n+1 are only read against lambda_1.
  require_degree(n, i_table.bound(), "coefficient co-Jacobi check");
  if (n + 1 > i_table.bound() && !i_table.row(Monomial(d)).is_zero()) {
    throw BoundError("coefficient co-Jacobi up to degree " + std::to_string(n) +
                         " reads rows of degree " + std::to_string(n + 1) +
                         "; table bound is " + std::to_string(i_table.bound()),
                     n + 1);
  }
  Collector c("cojacobi_coeffs", n, opts, d);
  for (const auto& a : monomials_up_to(d, n)) {
    // sum over a_1 a_2 = a of C(a,a_1) * lambda_{a_1}^{s.} lambda_{x_s a_2}^{..}
    std::vector<std::pair<Rational, std::pair<const SkewMatrix*, std::vector<const SkewMatrix*>>>>
        splits;
    for (const auto& b : divisors(a)) {
      const SkewMatrix& head = i_table.row(b);
      if (head.is_zero()) continue;
      Monomial rest = a / b;
      std::vector<const SkewMatrix*> tails(d);
      for (std::size_t s = 0; s < d; ++s) tails[s] = &i_table.row(rest * Monomial::variable(d, s));
      splits.push_back({Rational(binomial(a, b)), {&head, std::move(tails)}});
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
          Rational total = 0;
          for (const auto& [w, parts] : splits) {
            const SkewMatrix& h = *parts.first;
            Rational sum = 0;
            for (std::size_t s = 0; s < d; ++s) {
              const SkewMatrix& t = *parts.second[s];
              sum += h(s, k) * t(i, j) + h(s, i) * t(j, k) + h(s, j) * t(k, i);
            }
            total += w * sum;
          }
          if (!copoisson::is_zero(total)) {
            c.violation("a = " + c.mono(a) + ", " + triple(i, j, k), to_string(total));
          }
        }
      }
    }
  }
  return c.finish();
}

CheckReport check_jacobi(const BracketTable& b, std::size_t n, const CheckOptions& opts) {
  const std::size_t d = b.nvars();
  auto trunc = b.truncation();
  if (trunc) {
    // A constant term in some f_ij lets degree-k output read degree k+1 input.
    bool constants = false;
    for (const auto& [ij, f] : b.entries()) {
      if (!copoisson::is_zero(f.coeff(Monomial(d)))) constants = true;
    }
    std::size_t available = constants ? (*trunc == 0 ? 0 : *trunc - 1) : *trunc;
    if (n > available || (constants && *trunc == 0)) {
      throw BoundError("Jacobi modulo degree > " + std::to_string(n) + " needs brackets to degree " +
                           std::to_string(constants ? n + 1 : n) + "; truncation is " +
                           std::to_string(*trunc),
                       constants ? n + 1 : n);
    }
  }
  std::vector<std::vector<Poly>> f(d, std::vector<Poly>(d));
  std::vector<std::vector<std::vector<Poly>>> df(d, std::vector<std::vector<Poly>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      f[i][j] = b.f(i, j);
      df[i][j].resize(d);
      for (std::size_t l = 0; l < d; ++l) df[i][j][l] = derivative(f[i][j], l);
    }
  }
  std::size_t degree = n;
  Collector c("jacobi", degree, opts, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        Poly r;
        for (std::size_t l = 0; l < d; ++l) {
          r += f[l][k] * df[i][j][l];
          r += f[l][i] * df[j][k][l];
          r += f[l][j] * df[k][i][l];
        }
        if (trunc) r = truncate(r, n);
        if (!r.is_zero()) c.violation(triple(i, j, k), c.render(r));
      }
    }
  }
  return c.finish(trunc ? "modulo degree > " + std::to_string(n) : "exact polynomial identity");
}

namespace {

class BracketCache {
 public:
  explicit BracketCache(const BracketTable& b) : b_(b) {}
  const Poly& operator()(const Monomial& a, const Monomial& c) {
    auto key = std::pair{a, c};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, poisson_bracket(b_, monomial_poly(a), monomial_poly(c)))
        .first->second;
  }

 private:
  const BracketTable& b_;
  std::map<std::pair<Monomial, Monomial>, Poly> cache_;
};

std::string pair_input(const Collector& c, const Monomial& a, const Monomial& b) {
  return "(a, b) = (" + c.mono(a) + ", " + c.mono(b) + ")";
}

}  // namespace

CheckReport check_poisson_hopf_compat(const BracketTable& b, std::size_t n,
                                      const CheckOptions& opts) {
  if (b.mode() != BracketMode::polynomial) {
    throw std::invalid_argument("Hopf compatibility is checked on polynomial-mode tables only");
  }
  const std::size_t d = b.nvars();
  Collector c("poisson_hopf_compat", n, opts, d);
  BracketCache br(b);
  auto monos = monomials_up_to(d, n);
  for (const auto& a : monos) {
    for (const auto& e : monos) {
      if (a.degree() + e.degree() > n) continue;
      Tensor2 lhs = comult(br(a, e));
      Tensor2 rhs;
      for (const auto& a1 : divisors(a)) {
        Monomial a2 = a / a1;
        for (const auto& e1 : divisors(e)) {
          Monomial e2 = e / e1;
          Rational w(binomial(a, a1) * binomial(e, e1));
          for (const auto& [m, k] : br(a1, e1)) rhs.add({m, a2 * e2}, w * k);
          for (const auto& [m, k] : br(a2, e2)) rhs.add({a1 * e1, m}, w * k);
        }
      }
      Tensor2 r = lhs - rhs;
      if (!r.is_zero()) c.violation(pair_input(c, a, e), c.render(r));
    }
  }
  return c.finish();
}

CheckReport check_linear_relations(const StructConsts& sc, const CheckOptions& opts) {
  const std::size_t d = sc.nvars();
  Collector c("linear_relations", 1, opts, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        for (std::size_t s = 0; s < d; ++s) {
          Rational total = 0;
          for (std::size_t l = 0; l < d; ++l) {
            total += sc(i, j, l) * sc(l, k, s) + sc(j, k, l) * sc(l, i, s) +
                     sc(k, i, l) * sc(l, j, s);
          }
          if (!copoisson::is_zero(total)) {
            c.violation(triple(i, j, k) + ", s = " + std::to_string(s + 1), to_string(total));
          }
        }
      }
    }
  }
  return c.finish();
}

CheckReport check_support_condition(const ITable& i_table, const CheckOptions& opts) {
  Collector c("support_condition", i_table.bound(), opts, i_table.nvars());
  for (const auto& [a, row] : i_table.rows()) {
    if (a.degree() == 1) continue;
    c.violation("a = " + c.mono(a), c.render(i_table.value(a)));
  }
  return c.finish();
}

CheckReport check_eps_s_morphisms(const BracketTable& b, std::size_t n, const CheckOptions& opts) {
  const std::size_t d = b.nvars();
  CheckReport compat = check_poisson_hopf_compat(b, n, opts);
  Collector c("eps_s_morphisms", n, opts, d);
  if (!compat.passed()) {
    CheckReport r = c.finish("bracket is not Hopf-compatible up to degree " + std::to_string(n));
    r.verdict = Verdict::not_applicable;
    return r;
  }
  BracketCache br(b);
  auto monos = monomials_up_to(d, n);
  for (const auto& a : monos) {
    for (const auto& e : monos) {
      if (a.degree() + e.degree() > n) continue;
      const Poly& v = br(a, e);
      Rational eps = counit(v);
      if (!copoisson::is_zero(eps)) {
        c.violation(pair_input(c, a, e), "eps{a,b} = " + to_string(eps));
      }
      // S{a,b} - {S(b), S(a)}; S is diagonal on monomials.
      Poly r = antipode(v) - br(e, a) * Rational(sign_of_degree(a.degree() + e.degree()));
      if (!r.is_zero()) c.violation(pair_input(c, a, e), "S{a,b} - {S(b),S(a)} = " + c.render(r));
    }
  }
  return c.finish();
}

CheckReport check_antipode_coanti(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "antipode check");
  Collector c("antipode_coanti", n, opts, q.nvars());
  for (const auto& a : monomials_up_to(q.nvars(), n)) {
    Tensor2 lhs = q.apply(antipode(a));
    Tensor2 rhs = t2_swap(antipode2(q.at(a)));
    Tensor2 r = lhs - rhs;
    if (!r.is_zero()) c.violation("a = " + c.mono(a), c.render(r));
  }
  return c.finish();
}

CheckReport check_dual_of_abcd(const QMap& q, std::size_t n, const CheckOptions& opts) {
  require_degree(n, q.bound(), "dual-identity check");
  Collector c("dual_of_abcd", n, opts, q.nvars());
  auto qv = [&](const Monomial& m) { return q.at(m); };
  for (const auto& a : monomials_up_to(q.nvars(), n)) {
    Tensor4 lhs, rhs;
    for (const auto& [k, w] : comult(a)) {
      lhs.add_scaled(outer(q.at(k[0]), cocommutator_of(k[1])), w);
      rhs.add_scaled(outer(cocommutator_of(k[0]), q.at(k[1])), w);
    }
    Tensor4 r4 = lhs - rhs;
    if (!r4.is_zero()) c.violation("a = " + c.mono(a), c.render(r4));

    Tensor4 d3 = comult3(a);
    Tensor5 x = map_factor(d3, 3, qv);
    Tensor5 y = map_factor(d3, 0, qv);
    Tensor5 lhs5 = x - permute<5>(x, {1, 0, 2, 3, 4});
    Tensor5 rhs5 = y - permute<5>(y, {0, 1, 2, 4, 3});
    Tensor5 r5 = lhs5 - rhs5;
    if (!r5.is_zero()) c.violation("a = " + c.mono(a) + " (5-fold)", c.render(r5));
  }
  return c.finish();
}

bool in_primitive_wedge(const Tensor2& x) {
  for (const auto& [k, c] : x) {
    if (k[0].degree() != 1 || k[1].degree() != 1) return false;
  }
  return (x + t2_swap(x)).is_zero();
}

bool satisfies_primitive_wedge_criterion(const Tensor2& x) {
  if (x.is_zero()) return true;
  if (!(x + t2_swap(x)).is_zero()) return false;
  const std::size_t d = x.begin()->first[0].nvars();
  Tensor3 one_x = outer(constant(d, 1), x);
  return comult_left(x) == one_x - t3_cycle(one_x);
}

}  // namespace copoisson
