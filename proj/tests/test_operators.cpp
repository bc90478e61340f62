#include "hochkit/bicomplex.hpp"
#include "hochkit/suites.hpp"

#include "doctest.h"

using namespace hochkit;

namespace {

Matrix scaled_identity(Index n, const Rational& c) {
  std::vector<Triplet> t;
  for (Index i = 0; i < n; ++i) t.emplace_back(i, i, c);
  return make_matrix(n, n, t);
}

}  // namespace

TEST_CASE("insertion of identity and scalars") {
  const auto dual = builtin_algebra("dual");
  CHECK(equal(insertion(MultilinearOp::identity(dual, 1), 2), scaled_identity(4, 2)));
  CHECK(equal(insertion(MultilinearOp::scalar(dual, Rational(5)), 2), scaled_identity(4, 15)));
  CHECK(is_zero(insertion(multiplication_op(builtin_algebra("C")), 3)));
  CHECK_THROWS_AS(insertion(multiplication_op(dual), 1), OperatorError);
}

TEST_CASE("multiplication operator") {
  const auto c = builtin_algebra("C");
  CHECK(multiplication_op(c).entry({0, 0}, {0}) == 1);
  CHECK(multiplication_op(builtin_algebra("sq0-n2")).is_zero());
  const auto m = multiplication_op(builtin_algebra("dual"));
  CHECK(m.entry({0, 0}, {0}) == 1);
  CHECK(m.entry({0, 1}, {1}) == 1);
  CHECK(m.entry({1, 0}, {1}) == 1);
  CHECK(m.entries().size() == 3);
}

TEST_CASE("compose_overlap of (1,1) operators is composition") {
  std::mt19937_64 rng(3);
  const auto a = builtin_algebra("T2");
  const auto f = random_op(a, 1, 1, rng, 70);
  const auto g = random_op(a, 1, 1, rng, 70);
  const auto fg = compose_overlap(f, g, 1);
  for (int i = 0; i < a->dim(); ++i) {
    for (int o = 0; o < a->dim(); ++o) {
      Rational expected = 0;
      for (int t = 0; t < a->dim(); ++t) expected += g.entry({i}, {t}) * f.entry({t}, {o});
      CHECK(fg.entry({i}, {o}) == expected);
    }
  }
  CHECK_THROWS_AS(compose_overlap(f, g, 2), OperatorError);
}

TEST_CASE("bracket of (k,1) operators matches the Gerstenhaber oracle") {
  std::mt19937_64 rng(5);
  for (const char* name : {"dual", "T2", "poly0-n2-D2"}) {
    const auto a = builtin_algebra(name);
    for (int k1 = 0; k1 <= 2; ++k1) {
      for (int k2 = 0; k2 <= 2; ++k2) {
        if (k1 + k2 == 0) continue;
        const auto f = random_op(a, k1, 1, rng);
        const auto g = random_op(a, k2, 1, rng);
        const OpSum got = bracket(f, g);
        const OpSum want = sign_of(static_cast<long long>(f.degree()) * g.degree()) * OpSum(gerstenhaber_oracle(f, g));
        CHECK_MESSAGE(got == want, name << " k1=" << k1 << " k2=" << k2);
      }
    }
  }
}

TEST_CASE("bracket with the identity scales by l - k") {
  std::mt19937_64 rng(9);
  const auto a = builtin_algebra("dual");
  const auto id = MultilinearOp::identity(a, 1);
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 2; ++l) {
      const auto psi = random_op(a, k, l, rng, 60);
      CHECK(bracket(id, psi) == Rational(l - k) * OpSum(psi));
    }
  }
}

TEST_CASE("[m, m] = 0 and [m, id] = m") {
  for (const char* name : {"C", "dual", "T2", "sq0-n2", "poly0-n2-D2", "poly0-n1-D3"}) {
    const auto m = multiplication_op(builtin_algebra(name));
    CHECK_MESSAGE(bracket(m, m).is_zero(), name);
  }
  const auto c = builtin_algebra("C");
  const OpSum r = bracket(multiplication_op(c), MultilinearOp::identity(c, 1));
  CHECK(r == OpSum(multiplication_op(c)));
  CHECK(r.component(1, 0) == nullptr);
}

TEST_CASE("insertion commutator oracle") {
  const auto c = builtin_algebra("C");
  const auto m = multiplication_op(c);
  CHECK(is_zero(insertion_commutator_oracle(m, m, 4)));
  const auto id = MultilinearOp::identity(c, 1);
  CHECK(equal(insertion_commutator_oracle(id, m, 3), insertion(-m, 3)));
  const auto s = MultilinearOp::scalar(c, Rational(2));
  const auto t = MultilinearOp::scalar(c, Rational(-3));
  for (int n = 0; n <= 3; ++n) CHECK(is_zero(insertion_commutator_oracle(s, t, n)));

  std::mt19937_64 rng(17);
  const auto a = builtin_algebra("dual");
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_op(a, 1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 3), rng);
    const auto g = random_op(a, 1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 3), rng);
    const int n = f.k() + g.k();
    CHECK(equal(insertion_commutator_oracle(f, g, n), insertion(bracket(f, g), *a, f.degree() + g.degree(), n)));
  }
}

TEST_CASE("OpSum arithmetic drops zero components") {
  const auto a = builtin_algebra("dual");
  const auto m = multiplication_op(a);
  OpSum s(m);
  s -= OpSum(m);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(OpSum(m) + OpSum(multiplication_op(builtin_algebra("C"))), OperatorError);
}
