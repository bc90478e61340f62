#include "hochkit/suites.hpp"

#include "doctest.h"

using namespace hochkit;

TEST_CASE("Clifford dimension table") {
  for (int n = 1; n <= 3; ++n) {
    const auto t = clifford_table(n);
    Index total = 0;
    for (const auto& [i, d] : t.total_by_degree) total += d;
    CHECK(total == (Index{1} << (2 * n)));
    Index zero = 0;
    for (int p = 0; p <= n; ++p) zero += binomial(n, p) * binomial(n, p);
    CHECK(t.total_by_degree.at(0) == zero);
  }
  CHECK(clifford_table(2).expected.at({1, 2}).degree == -1);
  CHECK(clifford_table(2).expected.at({1, 2}).dim == 2);
}

TEST_CASE("unital vanishing") {
  const Report c = verify_unital_vanishing(builtin_algebra("C"), 4, 4, 1, true);
  CHECK(c["status"] == "PASS");
  for (const auto& [i, d] : c["window_table"]["by_total_degree"].items()) {
    if (i == "0") CHECK(d == 1);
  }
  CHECK(verify_unital_vanishing(builtin_algebra("dual"), 3, 3)["status"] == "PASS");
  CHECK_THROWS_AS(verify_unital_vanishing(builtin_algebra("sq0-n2"), 2, 2), NoUnit);
}

TEST_CASE("S(V)_0 bidegree cohomology") {
  const Report a = verify_sv0_cohomology(1, 1, 1);
  CHECK(a["status"] == "PASS");
  CHECK(a["by_total_degree"]["0"] == 1);
  const Report b = verify_sv0_cohomology(1, 2, 0);
  CHECK(b["status"] == "PASS");
  for (const auto& [i, d] : b["by_total_degree"].items()) CHECK(d == 0);
  const Report c = verify_sv0_cohomology(2, 1, 1);
  CHECK(c["status"] == "PASS");
  CHECK(c["by_total_degree"]["0"] == 4);
}

TEST_CASE("Clifford representatives") {
  const auto r11 = clifford_representatives(1, 1, 1);
  REQUIRE(r11.size() == 1);
  CHECK(r11[0].entry({0}, {0}) == 1);
  CHECK(r11[0].entries().size() == 1);

  const auto r00 = clifford_representatives(1, 0, 0);
  REQUIRE(r00.size() == 1);
  CHECK(r00[0].entry({}, {}) == 1);

  const auto r10 = clifford_representatives(2, 1, 0);
  REQUIRE(r10.size() == 2);
  CHECK(r10[0].entry({0}, {}) == 1);
  CHECK(r10[0].entry({1}, {}) == 0);
  CHECK(r10[1].entry({1}, {}) == 1);

  // x*∧y* evaluated on (x, y) and (y, x).
  const auto r20 = clifford_representatives(2, 2, 0);
  REQUIRE(r20.size() == 1);
  CHECK(r20[0].entry({0, 1}, {}) == -r20[0].entry({1, 0}, {}));
  CHECK(r20[0].entry({0, 0}, {}) == 0);
}

TEST_CASE("Clifford algebra arithmetic") {
  const CliffordMonomial one{}, v{{0}, {}}, vs{{}, {0}}, w{{1}, {}};
  const CliffordElement anti = clifford_supercommutator(v, vs);
  CHECK(anti == CliffordElement{{one, Rational(1)}});
  CHECK(clifford_supercommutator(v, v).empty());
  CHECK(clifford_supercommutator(v, w).empty());
  CHECK(clifford_supercommutator(one, v).empty());
  const CliffordElement vsv = clifford_product({{vs, Rational(1)}}, {{v, Rational(1)}});
  CHECK(vsv == CliffordElement{{one, Rational(1)}, {CliffordMonomial{{0}, {0}}, Rational(-1)}});
}

TEST_CASE("Clifford bracket table reports honestly") {
  const Report t = clifford_bracket_table(1, 1);
  CHECK(t["pair_count"] == 10);
  bool saw_vs_vs = false, saw_v_vs = false;
  for (const auto& p : t["pairs"]) {
    if (p["left"] == "v*_x" && p["right"] == "v*_x") {
      saw_vs_vs = true;
      CHECK(p["computed"].empty());
      CHECK(p["status"] == "MATCH");
    }
    if (p["left"] == "v_x" && p["right"] == "v*_x") {
      saw_v_vs = true;
      // The corner class appears with coefficient 1.
      CHECK(p["computed"]["1"] == "1");
    }
  }
  CHECK(saw_vs_vs);
  CHECK(saw_v_vs);

  const Report t2 = clifford_bracket_table(2, 1);
  for (const auto& p : t2["pairs"]) {
    if (p["left"] == "v_x" && p["right"] == "v_y") CHECK(p["computed"].empty());
  }
}

TEST_CASE("Maurer-Cartan residuals") {
  const auto dual = builtin_algebra("dual");
  CHECK(mc_check({}, dual)["status"] == "PASS");
  CHECK(mc_check({{0, OpSum{}}}, dual)["status"] == "PASS");

  const auto sv0 = builtin_algebra("poly0-n2-D3");
  const auto b1 = lie_poisson_cochain(sv0, builtin_lie("nonabelian2"), Rational(1, 2));
  CHECK(bracket(multiplication_op(sv0), b1).is_zero());
  CHECK(mc_check({{1, OpSum(b1)}}, sv0, 1)["status"] == "PASS");

  std::mt19937_64 rng(21);
  const auto gamma = random_op(dual, 2, 1, rng, 80);
  const Report r = mc_check({{0, OpSum(gamma)}}, dual);
  CHECK(r["status"] == "FAIL");

  // Residual at weight 0 equals the associativity defect of m + γ.
  const OpSum residual = bracket(multiplication_op(dual), gamma) + Rational(1, 2) * bracket(gamma, gamma);
  const auto defect = associativity_defect(gamma);
  const auto* comp = residual.component(3, 1);
  REQUIRE(comp != nullptr);
  CHECK((*comp == defect || *comp == -defect));

  CHECK_THROWS_AS(mc_check({{0, OpSum(MultilinearOp::identity(dual, 1))}}, dual), DegreeViolation);
}

TEST_CASE("Q-complex checks") {
  const Report z = q_complex_check(zero_q_complex(2));
  CHECK(z["betti"] == Report{1, 2, 1});
  CHECK(z["status"] == "PASS");

  const Report na = q_complex_check(ce_differential(builtin_lie("nonabelian2")));
  CHECK(na["betti"] == Report{1, 1, 0});
  CHECK(na["euler_characteristic"] == 0);

  QComplex bad = zero_q_complex(2);
  bad.maps[0] = make_matrix(2, 1, {{0, 0, Rational(1)}});
  bad.maps[1] = make_matrix(1, 2, {{0, 0, Rational(1)}});
  try {
    q_complex_check(bad);
    FAIL("expected NotAComplex");
  } catch (const QNotAComplex& e) {
    CHECK(e.index() == 0);
  }

  QComplex wrong = zero_q_complex(2);
  wrong.maps[0] = Matrix(3, 1);
  CHECK_THROWS_AS(q_complex_check(wrong), ShapeMismatch);

  CHECK(gauge_invariants(zero_q_complex(1)) == std::vector<Index>{1, 1});
  QComplex acyclic = zero_q_complex(1);
  acyclic.maps[0] = make_matrix(1, 1, {{0, 0, Rational(3)}});
  CHECK(gauge_invariants(acyclic) == std::vector<Index>{0, 0});
}

TEST_CASE("Chevalley-Eilenberg differential") {
  CHECK(betti_numbers(ce_differential(builtin_lie("abelian2"))) == std::vector<Index>{1, 2, 1});
  CHECK(betti_numbers(ce_differential(builtin_lie("abelian3"))) == std::vector<Index>{1, 3, 3, 1});

  // Search small antisymmetric tables on three generators for one that
  // breaks Jacobi: [e0, e1] = e0 plus one more bracket.
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i) {
    for (int j = i + 1; j < 3 && !found; ++j) {
      for (int k = 0; k < 3 && !found; ++k) {
        if (i == 0 && j == 1) continue;
        LieStructure g{3, {}};
        g.set(0, 1, 0, Rational(1));
        g.set(1, 0, 0, Rational(-1));
        g.set(i, j, k, Rational(1));
        g.set(j, i, k, Rational(-1));
        if (!jacobi_witness(g)) continue;
        found = true;
        CHECK_THROWS_AS(ce_differential(g), JacobiFailure);
      }
    }
  }
  CHECK(found);

  LieStructure lopsided{2, {}};
  lopsided.set(0, 1, 1, Rational(1));
  CHECK_THROWS_AS(ce_differential(lopsided), std::invalid_argument);
}

TEST_CASE("gauge invariance") {
  std::mt19937_64 rng(8);
  const QComplex q = ce_differential(builtin_lie("nonabelian2"));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<DenseMatrix> gauge;
    for (int i = 0; i <= q.n; ++i) gauge.push_back(random_invertible(binomial(q.n, i), rng));
    const QComplex moved = conjugate(q, gauge);
    CHECK(gauge_invariants(moved) == gauge_invariants(q));
  }
}
