#include <doctest.h>

#include "copoisson/hopf.hpp"
#include "helpers.hpp"
#include "support.hpp"

using namespace copoisson;
using namespace testhelpers;

namespace {

// {x^a y^b, x^c y^d} = (ad - bc) x^{a+c-1} y^{b+d-1} for {x,y} = 1.
Poly canonical_bracket(const Monomial& l, const Monomial& r) {
  long a = l[0], b = l[1], c = r[0], d = r[1];
  long coeff = a * d - b * c;
  if (coeff == 0) return {};
  return P(M({static_cast<Monomial::Exponent>(a + c - 1), static_cast<Monomial::Exponent>(b + d - 1)}), coeff);
}

}  // namespace

TEST_SUITE("hopf_poly") {

TEST_CASE("comult on small monomials") {
  Poly x = X(1, 0), u = one(1);
  CHECK(comult(M({0})) == T(u, u));
  CHECK(comult(M({1})) == T(x, u) + T(u, x));
  CHECK(comult(M({2})) == tensor2_mul(comult(M({1})), comult(M({1}))));
  CHECK(comult(M({2})) == T(x * x, u) + Rational(2) * T(x, x) + T(u, x * x));
}

TEST_CASE("comult2 agrees with stepwise iteration") {
  Poly x = X(1, 0), u = one(1);
  CHECK(comult2(M({1})) == T(x, u, u) + T(u, x, u) + T(u, u, x));
  CHECK(comult2(M({0})) == T(u, u, u));
  Tensor3 expected = T(x * x, u, u) + T(u, x * x, u) + T(u, u, x * x) +
                     Rational(2) * (T(x, x, u) + T(x, u, x) + T(u, x, x));
  CHECK(comult2(M({2})) == expected);
  for (const auto& a : monomials_up_to(3, 4)) {
    CHECK(comult2(a) == comult_left(comult(a)));
    CHECK(comult2(a) == comult_right(comult(a)));
  }
}

TEST_CASE("comult3 agrees with three applications") {
  for (const auto& a : monomials_up_to(2, 4)) {
    Tensor3 two = comult2(a);
    Tensor4 expected = map_factor(two, 0, [](const Monomial& m) { return comult(m); });
    CHECK(comult3(a) == expected);
  }
}

TEST_CASE("comult is multiplicative") {
  auto monos = monomials_up_to(2, 3);
  for (const auto& a : monos) {
    for (const auto& b : monos) CHECK(comult(a * b) == tensor2_mul(comult(a), comult(b)));
  }
}

TEST_CASE("counit") {
  CHECK(counit(one(2) + Rational(3) * X(2, 0)) == 1);
  CHECK(counit(P(M({2, 1}))) == 0);
  CHECK(counit(Poly{}) == 0);
}

TEST_CASE("antipode") {
  CHECK(antipode(X(2, 0)) == -X(2, 0));
  CHECK(antipode(P(M({2, 1}))) == -P(M({2, 1})));
  CHECK(antipode(one(2)) == one(2));
  // mu (S (x) 1) Delta = eta epsilon.
  for (const auto& a : monomials_up_to(2, 4)) {
    Tensor2 d = comult(a);
    Tensor2 s = map_factor(d, 0, [](const Monomial& m) { return antipode(m); });
    CHECK(multiply(s) == constant(2, counit(a)));
  }
}

TEST_CASE("cocommutator vanishes") {
  CHECK(cocommutator(M({1, 0})).is_zero());
  CHECK(cocommutator(M({3, 2})).is_zero());
  CHECK(cocommutator(M({0, 0})).is_zero());
}

TEST_CASE("q_from_i on a single generator row") {
  Poly x = X(2, 0), y = X(2, 1);
  QMap i_map(2, 2);
  Tensor2 ix = T(x, y) - T(y, x);
  i_map.set(M({1, 0}), ix);
  CHECK(q_from_i(i_map, M({1, 0})) == ix);
  CHECK(q_from_i(i_map, M({0, 0})).is_zero());
  CHECK(q_from_i(i_map, M({1, 1})) == tensor2_mul(ix, comult(M({0, 1}))));
  CHECK(q_from_i(i_map, M({1, 1})) == T(x * y, y) + T(x, y * y) - T(y * y, x) - T(y, x * y));
}

TEST_CASE("i_from_q") {
  QMap zero(2, 3);
  for (const auto& a : monomials_up_to(2, 3)) CHECK(i_from_q(zero, a).is_zero());

  Poly x = X(2, 0), y = X(2, 1);
  QMap i_map(2, 2);
  i_map.set(M({1, 0}), T(x, y) - T(y, x));
  QMap q = q_from_i(i_map);
  // q(1) (x) stuff vanishes; the signed sum at xy is
  // q(xy) - q(x)Delta(y) - q(y)Delta(x) + q(1)Delta(xy) = 0.
  Tensor2 hand = q.at(M({1, 1})) - tensor2_mul(q.at(M({1, 0})), comult(M({0, 1}))) -
                 tensor2_mul(q.at(M({0, 1})), comult(M({1, 0})));
  CHECK(hand.is_zero());
  CHECK(i_from_q(q, M({1, 1})).is_zero());
  for (const auto& a : monomials_up_to(2, 2)) CHECK(i_from_q(q, a) == i_map.at(a));
}

TEST_CASE("p_from_j") {
  const std::size_t d = 3;
  PMap j(d, 2);
  Poly f01 = X(d, 2) + one(d), f12 = P(M({1, 1, 0}));
  j.set(M({1, 0, 0}), M({0, 1, 0}), f01);
  j.set(M({0, 1, 0}), M({0, 0, 1}), f12);
  CHECK(p_from_j(j, M({1, 0, 0}), M({0, 1, 0})) == f01);
  CHECK(p_from_j(j, M({0, 1, 0}), M({0, 0, 1})) == f12);
  CHECK(p_from_j(PMap(d, 2), M({1, 0, 0}), M({0, 1, 0})).is_zero());

  PMap jj(2, 2);
  jj.set(M({1, 0}), M({0, 1}), one(2));
  CHECK(p_from_j(jj, M({2, 0}), M({0, 1})) == Rational(2) * X(2, 0));
}

TEST_CASE("j_from_p of the canonical bracket is supported in bidegree (1,1)") {
  PMap p(2, 3);
  auto monos = monomials_up_to(2, 3);
  for (const auto& a : monos) {
    for (const auto& b : monos) p.set(a, b, canonical_bracket(a, b));
  }
  CHECK(j_from_p(p, M({2, 0}), M({0, 1})).is_zero());
  CHECK(j_from_p(p, M({1, 0}), M({0, 1})) == one(2));
  for (const auto& a : monos) {
    for (const auto& b : monos) {
      Poly v = j_from_p(p, a, b);
      if (a.degree() != 1 || b.degree() != 1) CHECK(v.is_zero());
    }
  }
  CHECK(j_from_p(PMap(2, 2), M({1, 0}), M({0, 1})).is_zero());
}

TEST_CASE("reciprocity round-trips on random tables") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t d = 2 + trial % 3;
    QMap i_map = testsupport::random_qmap(rng, d, 4, 4);
    CHECK(i_from_q(q_from_i(i_map)) == i_map);
    PMap j = testsupport::random_pmap(rng, d, 3, 3);
    CHECK(j_from_p(p_from_j(j)) == j);
  }
}

TEST_CASE("maps refuse requests above their bound") {
  QMap q(2, 2);
  CHECK_THROWS_AS(q.at(M({3, 0})), BoundError);
  try {
    q.at(M({2, 2}));
  } catch (const BoundError& e) {
    CHECK(e.required_bound() == 4);
  }
  PMap p(2, 1);
  CHECK_THROWS_AS(p.at(M({2, 0}), M({0, 0})), BoundError);
}

TEST_CASE("turn identity") {
  for (std::size_t d : {1u, 2u, 3u}) {
    for (const auto& a : monomials_up_to(d, 6)) CHECK(turn_identity_lhs(a) == turn_identity_rhs(a));
  }
}

}  // TEST_SUITE
