// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "copoisson/checks.hpp"
#include "copoisson/dual.hpp"
#include "copoisson/finite_hopf.hpp"
#include "support.hpp"

using namespace copoisson;
using namespace testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<CheckReport> copoisson_axioms(const QMap& q, std::size_t n) {
  std::vector<CheckReport> r;
  r.push_back(check_skew(q, n));
  for (auto f : {CoLeibnizForm::definition, CoLeibnizForm::form1, CoLeibnizForm::form2}) {
    r.push_back(check_coleibniz(q, n, f));
  }
  r.push_back(check_counit_kill(q, n));
  r.push_back(check_cojacobi(q, std::min(n, affordable_cojacobi_degree(q))));
  return r;
}

std::string first_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return r.check_name + (r.witnesses.empty() ? "" : " at " + r.witnesses[0].input);
  }
  return "";
}

/// Valid co-Poisson tables: duals of Nambu brackets or Hopf tables of random Lie algebras.
ITable valid_itable(Rng& rng, std::size_t bound, std::size_t k) {
  if (k % 2 == 0) {
    Poly phi = random_poly(rng, 3, 0, 1, 2);
    Poly casimir = random_poly(rng, 3, 1, 3, 4);
    return copoisson_from_series(as_series(nambu_bracket(phi, casimir), bound));
  }
  return copoisson_hopf_from_consts(random_lie(rng, base_lie(k / 2)), bound);
}

Outcome criterion1() {
  Rng rng(101);
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + trial % 3;
    std::size_t bound = 6;
    QMap i_map = random_itable(rng, d, bound, 4).as_map();
    t.expect(i_from_q(q_from_i(i_map)) == i_map, "I -> q -> I, trial " + std::to_string(trial));
    QMap q = random_qmap(rng, d, bound, 5);
    t.expect(q_from_i(i_from_q(q)) == q, "q -> I -> q, trial " + std::to_string(trial));
    PMap j = random_pmap(rng, d, 3, 4);
    t.expect(j_from_p(p_from_j(j)) == j, "J -> p -> J, trial " + std::to_string(trial));
    PMap p = random_pmap(rng, d, 3, 4);
    t.expect(p_from_j(j_from_p(p)) == p, "p -> J -> p, trial " + std::to_string(trial));
  }
  return t.outcome("100 trials, d in {2,3,4}, all four round-trips exact");
}

Outcome criterion2() {
  Rng rng(202);
  Tally t;
  int passes = 0, fails = 0;
  for (int trial = 0; trial < 50; ++trial) {
    ITable table = valid_itable(rng, 5, static_cast<std::size_t>(trial));
    if (trial % 3 != 0) {
      Monomial a = random_monomial(rng, 3, 5);
      std::size_t i = static_cast<std::size_t>(uniform(rng, 0, 1));
      table.set_entry(a, i, 2, table.row(a)(i, 2) + small_rational(rng, false));
    }
    QMap q = make_copoisson(table);
    std::string tag = ", trial " + std::to_string(trial);
    t.expect(check_skew(q, 5).passed(), "skew" + tag);
    t.expect(check_coleibniz(q, 5, CoLeibnizForm::definition).passed(), "co-Leibniz" + tag);
    std::size_t n = affordable_cojacobi_degree(q);
    bool tensor = check_cojacobi(q, n).passed();
    bool coeffs = check_cojacobi_coeffs(table, n).passed();
    t.expect(tensor == coeffs, "co-Jacobi disagreement" + tag);
    (tensor ? passes : fails)++;
  }
  t.expect(passes > 0 && fails > 0, "sample lacks both outcomes");
  return t.outcome("50 tables (d=3, M=5): " + std::to_string(passes) + " satisfy co-Jacobi, " +
                   std::to_string(fails) + " violate it, 0 disagreements");
}

Outcome criterion3() {
  Rng rng(303);
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    ITable table = random_itable(rng, 2, 6, 6);
    QMap q = make_copoisson(table);
    std::string f = first_failure(copoisson_axioms(q, 6));
    t.expect(f.empty(), f + ", trial " + std::to_string(trial));
    t.expect(check_cojacobi_coeffs(table, affordable_cojacobi_degree(q)).passed(),
             "coefficient co-Jacobi, trial " + std::to_string(trial));
  }
  return t.outcome("50 tables (d=2, M=6) satisfy every co-Poisson axiom");
}

Outcome criterion4() {
  Tally t;
  StructConsts c = so3();
  BracketTable b = linear_poisson(c);
  t.expect(check_linear_relations(c).passed(), "so(3) linear relations");
  t.expect(check_jacobi(b, 6).passed(), "so(3) Jacobi");
  t.expect(check_poisson_hopf_compat(b, 6).passed(), "so(3) Hopf compatibility");
  StructConsts bad = c;
  bad.set(0, 1, 0, Rational(1));
  CheckReport lr = check_linear_relations(bad);
  CheckReport jr = check_jacobi(linear_poisson(bad), 6);
  t.expect(!lr.passed() && !lr.witnesses.empty(), "perturbed linear relations not caught");
  t.expect(!jr.passed() && !jr.witnesses.empty(), "perturbed Jacobi not caught");
  std::string witness = lr.witnesses.empty() ? "" : lr.witnesses[0].input + " -> " + lr.witnesses[0].residual;
  return t.outcome("so(3) passes to degree 6; perturbation fails at " + witness);
}

Outcome criterion5() {
  Tally t;
  const std::size_t d = 5;
  BracketTable b(d);
  for (std::size_t i = 1; i + 1 < d; ++i) b.set(i, i + 1, variable(d, 0));
  t.expect(check_jacobi(b, 4).passed(), "Jacobi");
  t.expect(check_poisson_hopf_compat(b, 4).passed(), "Hopf compatibility");
  return t.outcome("n=5 bracket passes Jacobi and Hopf compatibility to total degree 4");
}

Outcome criterion6() {
  Rng rng(606);
  Tally t;
  t.expect(verify_series_roundtrip(as_series(linear_poisson(so3()), 4), 4).passed(), "so(3)");
  for (int trial = 0; trial < 20; ++trial) {
    BracketTable b;
    if (trial % 2 == 0) {
      b = log_canonical(rng, 2 + static_cast<std::size_t>(trial / 2) % 3);
    } else {
      Poly cubic;
      for (const auto& m : monomials_of_degree(3, 3)) cubic.add(m, small_rational(rng));
      b = nambu_bracket(constant(3, small_rational(rng, false)), cubic);
    }
    CheckReport r = verify_series_roundtrip(as_series(b, 4), 4);
    t.expect(r.passed(), "trial " + std::to_string(trial) + ": " + r.note +
                             (r.witnesses.empty() ? "" : " " + r.witnesses[0].input));
  }
  return t.outcome("so(3) and 20 quadratic brackets recovered exactly at N=4");
}

Outcome criterion7() {
  Tally t;
  FinHopf h = sweedler_h4();
  LinearFamily pf = solve_poisson_family(h, false);
  LinearFamily ph = solve_poisson_family(h, true);
  LinearFamily cf = solve_copoisson_family(h, false);
  LinearFamily ch = solve_copoisson_family(h, true);
  t.expect(pf.dimension() == 2, "Poisson family dimension");
  t.expect(ph.dimension() == 0, "Poisson Hopf dimension");
  t.expect(cf.dimension() == 2, "co-Poisson family dimension");
  t.expect(ch.dimension() == 0, "co-Poisson Hopf dimension");

  // Basis order 1, g, x, gx; e_i (x) e_j sits at index 4i + j.
  Vec shape(16);
  shape[0 * 4 + 2] = 1;   // 1 (x) x
  shape[2 * 4 + 0] = -1;  // x (x) 1
  shape[2 * 4 + 1] = 1;   // x (x) g
  shape[1 * 4 + 2] = -1;  // g (x) x
  for (const auto& v : cf.basis) {
    CoBracket q = cobracket_from_unknowns(4, v);
    t.expect(dense_is_zero(q[0]) && dense_is_zero(q[1]), "q(1) or q(g) nonzero");
    // q(x) = c * shape for a scalar c read off the 1 (x) x slot.
    t.expect(q[2] == dense_scale(shape, q[2][2]), "q(x) not proportional to 1(x)x - x(x)1 + x(x)g - g(x)x");
  }
  t.expect(present_h4_poisson(h, pf).matches, "Poisson presentation");
  t.expect(quadratic_residual_family(pf, QuadraticIdentity::jacobi, h).identically_zero(), "Jacobi residual");
  t.expect(quadratic_residual_family(cf, QuadraticIdentity::cojacobi, h).identically_zero(),
           "co-Jacobi residual");
  return t.outcome("dimensions 2, 0, 2, 0; q(x) has the expected shape; residuals identically zero");
}

Outcome criterion8() {
  Rng rng(808);
  Tally t;
  for (int trial = 0; trial < 30; ++trial) {
    std::string tag = ", trial " + std::to_string(trial);
    ITable table = trial % 3 == 0 ? random_itable(rng, 2, 4, 4) : valid_itable(rng, 4, static_cast<std::size_t>(trial));
    QMap q = make_copoisson(table);
    t.expect(check_counit_kill(q, 4).passed(), "counit contraction" + tag);
    t.expect(check_dual_of_abcd(q, 4).passed(), "dual-of-abcd on A" + tag);

    StructConsts c = random_lie(rng, base_lie(static_cast<std::size_t>(trial)));
    CheckReport eps = check_eps_s_morphisms(linear_poisson(c), 4);
    t.expect(eps.verdict == Verdict::pass, "eps and S on brackets" + tag);
    t.expect(check_antipode_coanti(make_copoisson(copoisson_hopf_from_consts(c, 4)), 4).passed(),
             "antipode on cobrackets" + tag);
  }
  FinHopf h = sweedler_h4();
  LinearFamily cf = solve_copoisson_family(h, false);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> coords;
    for (std::size_t k = 0; k < cf.dimension(); ++k) coords.push_back(small_rational(rng));
    CoBracket q = cobracket_from_unknowns(4, cf.member(coords));
    t.expect(check_dual_of_abcd(h, q).passed(), "dual-of-abcd on H4, trial " + std::to_string(trial));
  }
  for (std::size_t d : {2u, 3u}) {
    for (const auto& a : monomials_up_to(d, 6)) {
      t.expect(turn_identity_lhs(a) == turn_identity_rhs(a), "turn identity at degree " + std::to_string(a.degree()));
    }
  }
  return t.outcome("30 structures per suite; turn identity on all monomials of degree <= 6");
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(COPOISSON_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome criterion9() {
  Tally t;
  const std::string dir = FIXTURE_DIR;
  const std::vector<std::pair<std::string, int>> cases = {
      {"check " + dir + "/so3.json", 0},
      {"check " + dir + "/counterex5.json", 0},
      {"check " + dir + "/copoisson_d2.json", 0},
      {"check " + dir + "/h4.json", 0},
      {"check " + dir + "/so3_perturbed.json", 1},
      {"check " + dir + "/copoisson_degree2_row.json --checks copoisson-hopf", 1},
      {"--max-degree 9 check " + dir + "/copoisson_d2.json", 2},
      {"check " + dir + "/bad_entry_order.json", 3},
      {"classify-h4 --structure copoisson", 0},
  };
  for (const auto& [args, expected] : cases) {
    Run first = run(args), second = run(args);
    t.expect(first.status == expected, args + ": exit " + std::to_string(first.status));
    t.expect(first.out == second.out, args + ": output differs between runs");
  }
  return t.outcome(std::to_string(cases.size()) + " invocations, byte-identical reruns, expected exit codes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reciprocity round-trips", criterion1},
      {"co-Jacobi equals coefficient condition", criterion2},
      {"two-variable tables are co-Poisson", criterion3},
      {"linear classification", criterion4},
      {"counterexample bracket", criterion5},
      {"series bracket to co-Poisson and back", criterion6},
      {"Sweedler H4 classification", criterion7},
      {"structural property suites", criterion8},
      {"CLI end-to-end", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first
         << "): " << o.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
