#include "hochkit/bicomplex.hpp"
#include "hochkit/suites.hpp"

#include "doctest.h"

using namespace hochkit;

TEST_CASE("d1 examples") {
  const auto dual = builtin_algebra("dual");
  CHECK(d1(MultilinearOp::identity(dual, 1)) == multiplication_op(dual));
  CHECK(d1(multiplication_op(dual)).is_zero());
  CHECK(d1(multiplication_op(builtin_algebra("T2"))).is_zero());

  // Row l = 0 over C: k+1 equal middle terms with alternating signs.
  const auto c = builtin_algebra("C");
  for (int k = 0; k <= 5; ++k) {
    const MultilinearOp psi = MultilinearOp::from_entries(c, k, 0, {{Word(static_cast<std::size_t>(k), 0), {}, Rational(1)}});
    const Rational value = d1(psi).entry(Word(static_cast<std::size_t>(k + 1), 0), {});
    CHECK(value * value == (k % 2 == 1 ? 1 : 0));
  }
}

TEST_CASE("d2 examples") {
  std::mt19937_64 rng(2);
  const auto t2 = builtin_algebra("T2");
  CHECK(d2(random_op(t2, 2, 1, rng, 80)).is_zero());
  CHECK(d2(random_op(t2, 2, 1, rng, 80)).l() == 0);

  const auto dual = builtin_algebra("dual");
  const auto m = multiplication_op(dual);
  const auto r = d2(MultilinearOp::identity(dual, 2));
  CHECK(r.k() == 2);
  CHECK(r.l() == 1);
  CHECK((r == m || r == -m));

  const auto c = builtin_algebra("C");
  const auto pick = MultilinearOp::from_entries(c, 0, 2, {{{}, {0, 0}, Rational(1)}});
  const auto out = d2(pick);
  CHECK(out.k() == 0);
  CHECK(out.l() == 1);
  CHECK(out.entry({}, {0}) * out.entry({}, {0}) == 1);

  CHECK_THROWS_AS(d2(MultilinearOp::scalar(c, Rational(1))), OperatorError);
}

TEST_CASE("bracket with m decomposes into d1 and d2") {
  const auto c = builtin_algebra("C");
  CHECK(bracket_with_m_decomposition(c, MultilinearOp::identity(c, 1)) == OpSum(multiplication_op(c)));
  CHECK(bracket_with_m_decomposition(c, multiplication_op(c)).is_zero());

  std::mt19937_64 rng(4);
  const auto sq = builtin_algebra("sq0-n2");
  CHECK(bracket_with_m_decomposition(sq, random_op(sq, 2, 2, rng, 80)).is_zero());

  const auto dual = builtin_algebra("dual");
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      const auto psi = random_op(dual, k, l, rng, 60);
      CHECK(bracket_with_m_decomposition(dual, psi) == expected_bracket_with_m(psi));
    }
  }
}

TEST_CASE("row l = 1 of d1 is the Hochschild differential") {
  for (const char* name : {"C", "dual", "sq0-n2", "poly0-n2-D2"}) {
    const auto a = builtin_algebra(name);
    for (int k = 0; k <= 2; ++k) {
      const Matrix h = hochschild_oracle_differential(a, k);
      const Matrix ours = linear_map_matrix(a, k, 1, k + 1, 1, [](const MultilinearOp& op) { return d1(op); });
      CHECK_MESSAGE(equal(h, ours), name << " k=" << k);
    }
  }
  CHECK(is_zero(hochschild_oracle_differential(builtin_algebra("sq0-n3"), 2)));
  CHECK(is_zero(hochschild_oracle_differential(builtin_algebra("C"), 1)) == false);
}

TEST_CASE("bar complex") {
  const auto bar = bar_complex(builtin_algebra("C"), 4);
  REQUIRE(bar.size() == 4);
  CHECK(is_zero(bar[0]));
  CHECK(rank(bar[1]) == 1);
  CHECK(is_zero(bar[2]));
  CHECK(rank(bar[3]) == 1);
  for (const auto& m : bar_complex(builtin_algebra("sq0-n2"), 3)) CHECK(is_zero(m));
}

TEST_CASE("assemble: rectangular and bidegree windows") {
  const auto b = Bicomplex::assemble(builtin_algebra("C"), RectWindow{3, 3});
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) CHECK(b.dim(k, l) == 1);
  for (int k = 0; k < 3; ++k) CHECK((rank(b.d1_map(k, 1)) == 1) == (k % 2 == 1));

  const auto p11 = Bicomplex::assemble(truncated_polynomial_algebra(1, 2), BidegreeWindow{1, 1});
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l) CHECK(p11.dim(k, l) <= 1);
  CHECK(p11.dim(1, 1) == 1);
  CHECK(p11.dim(0, 0) == 0);

  const auto p22 = Bicomplex::assemble(truncated_polynomial_algebra(2, 2), BidegreeWindow{2, 2});
  CHECK(p22.dim(1, 1) == 9);
  CHECK(p22.dim(2, 2) == 16);
  CHECK(p22.dim(1, 2) == 12);
  CHECK(p22.dim(0, 0) == 0);
  CHECK(p22.dim(2, 1) == 12);

  CHECK_THROWS_AS(Bicomplex::assemble(builtin_algebra("C"), BidegreeWindow{1, 1}), WindowError);
  CHECK_THROWS_AS(Bicomplex::assemble(truncated_polynomial_algebra(1, 1), BidegreeWindow{2, 1}), WindowError);
}

TEST_CASE("total cohomology examples") {
  const auto sv = truncated_polynomial_algebra(1, 1);
  const auto t00 = total_cohomology(Bicomplex::assemble(sv, BidegreeWindow{0, 0}));
  CHECK(t00.by_total_degree.at(0) == 1);

  const auto t11 = total_cohomology(Bicomplex::assemble(truncated_polynomial_algebra(1, 1), BidegreeWindow{1, 1}));
  for (const auto& [i, d] : t11.by_total_degree) CHECK(d == (i == 0 ? 1 : 0));

  const auto t21 = total_cohomology(Bicomplex::assemble(truncated_polynomial_algebra(1, 2), BidegreeWindow{2, 1}));
  for (const auto& [i, d] : t21.by_total_degree) CHECK(d == 0);

  const auto rect = total_cohomology(Bicomplex::assemble(builtin_algebra("C"), RectWindow{4, 4}));
  CHECK(rect.by_total_degree.at(0) == 1);
  CHECK(rect.reliable.contains(0));
}
