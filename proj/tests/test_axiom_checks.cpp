#include <doctest.h>

#include "copoisson/checks.hpp"
#include "helpers.hpp"
#include "support.hpp"

using namespace copoisson;
using namespace testhelpers;

namespace {

QMap single(std::size_t d, std::size_t bound, const Monomial& a, const Tensor2& v) {
  QMap q(d, bound);
  q.set(a, v);
  return q;
}

}  // namespace

TEST_SUITE("axiom_checks") {

TEST_CASE("check_skew") {
  testsupport::Rng rng(1);
  CHECK(check_skew(make_copoisson(testsupport::random_itable(rng, 3, 3, 5)), 3).passed());
  CHECK(check_skew(QMap(2, 2), 2).passed());
  Poly x = X(2, 0), y = X(2, 1);
  CheckReport r = check_skew(single(2, 2, M({1, 0}), T(x, y)), 2);
  CHECK_FALSE(r.passed());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].input == "a = x1");
  CHECK(r.witnesses[0].residual == "(x1 ⊗ x2) + (x2 ⊗ x1)");
}

TEST_CASE("check_cojacobi") {
  testsupport::Rng rng(2);
  for (int k = 0; k < 5; ++k) {
    QMap q = make_copoisson(testsupport::random_itable(rng, 2, 4, 4));
    CHECK(check_cojacobi(q, affordable_cojacobi_degree(q)).passed());
  }
  CHECK(check_cojacobi(QMap(3, 3), 3).passed());

  // Generator rows whose coefficient cyclic sum is nonzero.
  ITable t(3, 3);
  t.set_entry(M({1, 0, 0}), 0, 1, Rational(1));
  t.set_entry(M({0, 1, 0}), 0, 2, Rational(1));
  QMap q = make_copoisson(t);
  CHECK_FALSE(check_cojacobi(q, 1).passed());
}

TEST_CASE("check_cojacobi needs the domain bound") {
  ITable t(2, 2);
  t.set_entry(M({0, 0}), 0, 1, Rational(1));
  QMap q = make_copoisson(t);
  // A nonzero I(1) puts degree n+1 in the left factor.
  CHECK(affordable_cojacobi_degree(q) == 1);
  CHECK_THROWS_AS(check_cojacobi(q, 2), BoundError);
  ITable g(2, 2);
  g.set_entry(M({1, 0}), 0, 1, Rational(1));
  CHECK(affordable_cojacobi_degree(make_copoisson(g)) == 2);
}

TEST_CASE("check_coleibniz") {
  testsupport::Rng rng(3);
  QMap q = make_copoisson(testsupport::random_itable(rng, 3, 3, 6));
  for (auto f : {CoLeibnizForm::definition, CoLeibnizForm::form1, CoLeibnizForm::form2}) {
    CHECK(check_coleibniz(q, 3, f).passed());
    CHECK(check_coleibniz(QMap(2, 2), 2, f).passed());
  }
  QMap delta(2, 2);
  for (const auto& a : monomials_up_to(2, 2)) delta.set(a, comult(a));
  CHECK_FALSE(check_coleibniz(delta, 2, CoLeibnizForm::definition).passed());
  CHECK(check_coleibniz(q, 3, CoLeibnizForm::form1).check_name == "coleibniz_form1");
}

TEST_CASE("check_counit_kill") {
  testsupport::Rng rng(4);
  CHECK(check_counit_kill(make_copoisson(testsupport::random_itable(rng, 3, 3, 5)), 3).passed());
  CHECK(check_counit_kill(QMap(2, 2), 2).passed());
  Poly x = X(2, 0), u = one(2);
  CheckReport r = check_counit_kill(single(2, 1, M({1, 0}), T(u, x) - T(x, u)), 1);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK((r.witnesses[0].residual.find("x1") != std::string::npos));
}

TEST_CASE("check_delta_derivation") {
  ITable gens(3, 3);
  gens.set_entry(M({1, 0, 0}), 1, 2, Rational(1));
  gens.set_entry(M({0, 0, 1}), 0, 1, Rational(2));
  CHECK(check_delta_derivation(make_copoisson(gens), 3).passed());
  ITable deg2 = gens;
  deg2.set_entry(M({1, 1, 0}), 0, 2, Rational(1));
  CHECK_FALSE(check_delta_derivation(make_copoisson(deg2), 3).passed());
  CHECK(check_delta_derivation(QMap(2, 2), 2).passed());
}

TEST_CASE("check_cojacobi_coeffs") {
  testsupport::Rng rng(5);
  CHECK(check_cojacobi_coeffs(testsupport::random_itable(rng, 2, 4, 4), 4).passed());
  BracketTable so3 = testsupport::as_series(linear_poisson(testsupport::so3()), 3);
  CHECK(check_cojacobi_coeffs(copoisson_from_series(so3), 3).passed());

  ITable t(3, 3);
  t.set_entry(M({1, 0, 0}), 1, 2, Rational(1));
  t.set_entry(M({0, 1, 0}), 0, 2, Rational(1));
  QMap q = make_copoisson(t);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(check_cojacobi_coeffs(t, n).passed() == check_cojacobi(q, n).passed());
  }
}

TEST_CASE("tensor and coefficient co-Jacobi agree") {
  testsupport::Rng rng(6);
  int fails = 0;
  for (int k = 0; k < 20; ++k) {
    ITable t = k % 2 ? testsupport::random_itable(rng, 3, 3, 2)
                     : copoisson_hopf_from_consts(testsupport::random_lie(rng, testsupport::base_lie(k)), 3);
    QMap q = make_copoisson(t);
    std::size_t n = affordable_cojacobi_degree(q);
    bool tensor = check_cojacobi(q, n).passed();
    CHECK(tensor == check_cojacobi_coeffs(t, n).passed());
    fails += !tensor;
  }
  CHECK(fails > 0);
}

TEST_CASE("check_jacobi") {
  CHECK(check_jacobi(linear_poisson(testsupport::so3()), 4).passed());
  BracketTable counter(5);
  for (std::size_t i = 1; i + 1 < 5; ++i) counter.set(i, i + 1, X(5, 0));
  CHECK(check_jacobi(counter, 4).passed());

  // {x1,x2} = x3, {x2,x3} = x3 is a Lie algebra; a second term in {x1,x2} breaks it.
  StructConsts lie(3);
  lie.set(0, 1, 2, Rational(1));
  lie.set(1, 2, 2, Rational(1));
  CHECK(check_jacobi(linear_poisson(lie), 3).passed());
  StructConsts c = testsupport::so3();
  c.set(0, 1, 0, Rational(1));
  CheckReport r = check_jacobi(linear_poisson(c), 3);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].input == "(i,j,k) = (1,2,3)");

  // Oracle: cyclic sum of {{x_i,x_j},x_k} on basis triples.
  BracketTable b = linear_poisson(c);
  Poly cyc = poisson_bracket(b, b.f(0, 1), X(3, 2)) + poisson_bracket(b, b.f(1, 2), X(3, 0)) +
             poisson_bracket(b, b.f(2, 0), X(3, 1));
  CHECK(r.witnesses[0].residual == to_string(cyc, default_names(3)));
}

TEST_CASE("check_jacobi in series mode") {
  BracketTable s = testsupport::as_series(linear_poisson(testsupport::so3()), 3);
  CHECK(check_jacobi(s, 3).passed());
  CHECK_THROWS_AS(check_jacobi(s, 4), BoundError);
  BracketTable c = BracketTable::series(2, 3);
  c.set(0, 1, one(2) + X(2, 0));
  CHECK_THROWS_AS(check_jacobi(c, 3), BoundError);
  CHECK(check_jacobi(c, 2).passed());
}

TEST_CASE("check_poisson_hopf_compat") {
  testsupport::Rng rng(7);
  for (int k = 0; k < 5; ++k) {
    CHECK(check_poisson_hopf_compat(linear_poisson(testsupport::random_lie(rng, testsupport::base_lie(k))), 3)
              .passed());
  }
  BracketTable counter(5);
  for (std::size_t i = 1; i + 1 < 5; ++i) counter.set(i, i + 1, X(5, 0));
  CHECK(check_poisson_hopf_compat(counter, 4).passed());
  BracketTable sq(2);
  sq.set(0, 1, P(M({2, 0})));
  CHECK_FALSE(check_poisson_hopf_compat(sq, 2).passed());
  CHECK_THROWS_AS(check_poisson_hopf_compat(BracketTable::series(2, 2), 2), std::invalid_argument);
}

TEST_CASE("check_linear_relations") {
  CHECK(check_linear_relations(testsupport::so3()).passed());
  CHECK(check_linear_relations(StructConsts(3)).passed());
  testsupport::Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    StructConsts c(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        for (std::size_t l = 0; l < 3; ++l) c.set(i, j, l, testsupport::small_rational(rng));
      }
    }
    CHECK(check_linear_relations(c).passed() == check_jacobi(linear_poisson(c), 3).passed());
  }
}

TEST_CASE("check_support_condition") {
  ITable gens(3, 3);
  gens.set_entry(M({1, 0, 0}), 1, 2, Rational(1));
  CHECK(check_support_condition(gens).passed());
  CHECK(check_support_condition(ITable(3, 3)).passed());
  ITable bad = gens;
  bad.set_entry(M({1, 1, 0}), 0, 1, Rational(1));
  CheckReport r = check_support_condition(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.witnesses[0].input == "a = x1*x2");
}

TEST_CASE("check_eps_s_morphisms") {
  CHECK(check_eps_s_morphisms(linear_poisson(testsupport::so3()), 4).verdict == Verdict::pass);
  BracketTable counter(5);
  for (std::size_t i = 1; i + 1 < 5; ++i) counter.set(i, i + 1, X(5, 0));
  CHECK(check_eps_s_morphisms(counter, 3).verdict == Verdict::pass);
  BracketTable sq(2);
  sq.set(0, 1, P(M({2, 0})));
  CheckReport r = check_eps_s_morphisms(sq, 2);
  CHECK(r.verdict == Verdict::not_applicable);
  CHECK(r.passed());
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("check_antipode_coanti") {
  ITable gens(3, 4);
  gens.set_entry(M({1, 0, 0}), 1, 2, Rational(1));
  gens.set_entry(M({0, 1, 0}), 0, 2, Rational(-2));
  QMap q = make_copoisson(gens);
  CHECK(check_antipode_coanti(q, 4).passed());
  CHECK(check_antipode_coanti(QMap(2, 2), 2).passed());
  // At a = x: q(S x) = -q(x), and swap (S (x) S) q(x) = -q(x) for a skew bidegree (1,1) tensor.
  Tensor2 qx = q.at(M({1, 0, 0}));
  CHECK(t2_swap(antipode2(qx)) == -qx);
}

TEST_CASE("check_dual_of_abcd on the polynomial algebra") {
  testsupport::Rng rng(9);
  CHECK(check_dual_of_abcd(make_copoisson(testsupport::random_itable(rng, 2, 3, 4)), 3).passed());
  CHECK(check_dual_of_abcd(QMap(3, 3), 3).passed());
}

TEST_CASE("witness lists are capped") {
  ITable t(3, 3);
  for (const auto& a : monomials_up_to(3, 3)) {
    if (a.degree() >= 2) t.set_entry(a, 0, 1, Rational(1));
  }
  CheckOptions opts;
  opts.witness_cap = 3;
  CheckReport r = check_support_condition(t, opts);
  CHECK(r.witnesses.size() == 3);
  CHECK(r.violation_count > 3);
}

TEST_CASE("primitive wedge membership") {
  Poly x = X(2, 0), y = X(2, 1);
  CHECK(in_primitive_wedge(T(x, y) - T(y, x)));
  CHECK(satisfies_primitive_wedge_criterion(T(x, y) - T(y, x)));
  CHECK_FALSE(in_primitive_wedge(T(x, y)));
  CHECK_FALSE(in_primitive_wedge(T(x * x, y) - T(y, x * x)));
  CHECK_FALSE(satisfies_primitive_wedge_criterion(T(x * x, y) - T(y, x * x)));
}

}  // TEST_SUITE
