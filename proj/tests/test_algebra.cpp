#include "hochkit/algebra.hpp"

#include "doctest.h"

using namespace hochkit;

namespace {

// Brute-force associator on basis triples from the raw table.
bool associative_on(const std::vector<std::vector<std::vector<Rational>>>& c, int i, int j, int k) {
  const int d = static_cast<int>(c.size());
  for (int out = 0; out < d; ++out) {
    Rational left = 0, right = 0;
    for (int t = 0; t < d; ++t) {
      left += c[i][j][t] * c[t][k][out];
      right += c[j][k][t] * c[i][t][out];
    }
    if (left != right) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("builtin algebras load") {
  const auto c = builtin_algebra("C");
  CHECK(c->dim() == 1);
  CHECK(c->unit() == 0);
  CHECK(c->coeff(0, 0, 0) == 1);

  const auto dual = builtin_algebra("dual");
  CHECK(dual->dim() == 2);
  CHECK(dual->coeff(1, 1, 0) == 0);
  CHECK(dual->coeff(1, 1, 1) == 0);
  CHECK(dual->coeff(0, 1, 1) == 1);
  CHECK(dual->coeff(1, 0, 1) == 1);

  CHECK(builtin_algebra("T2")->dim() == 3);
  CHECK_THROWS_AS(builtin_algebra("nonsense"), std::invalid_argument);
}

TEST_CASE("non-associative spec is rejected with a witness") {
  // e·e = e, e·f = f, f·e = 0, f·f = e.
  const std::vector<StructureConstant> mult{
      {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 1, 0, Rational(1)}};
  std::vector<std::vector<std::vector<Rational>>> table(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
  for (const auto& s : mult) table[s.i][s.j][s.k] = s.value;

  AlgebraSpec spec{"bad", {"e", "f"}, mult, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  try {
    make_algebra(spec);
    FAIL("expected NonAssociative");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == AlgebraError::Kind::NonAssociative);
    REQUIRE(e.witness().size() == 3);
    CHECK_FALSE(associative_on(table, e.witness()[0], e.witness()[1], e.witness()[2]));
  }
}

TEST_CASE("unit and grading are validated") {
  AlgebraSpec bad_unit{"u", {"a", "b"}, {{0, 0, 0, Rational(1)}}, 0, std::nullopt, std::nullopt, std::nullopt};
  try {
    make_algebra(bad_unit);
    FAIL("expected BadUnit");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == AlgebraError::Kind::BadUnit);
  }
  AlgebraSpec bad_grading{"g", {"x", "y"}, {{0, 0, 0, Rational(1)}}, std::nullopt, std::vector<int>{1, 2},
                          std::nullopt, std::nullopt};
  try {
    make_algebra(bad_grading);
    FAIL("expected GradingViolation");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == AlgebraError::Kind::GradingViolation);
  }
}

TEST_CASE("truncated polynomial algebras") {
  const auto a = truncated_polynomial_algebra(1, 3);
  REQUIRE(a->dim() == 3);
  CHECK(a->coeff(0, 1, 2) == 1);  // x · x² = x³
  for (int k = 0; k < 3; ++k) CHECK(a->coeff(1, 1, k) == 0);
  CHECK_FALSE(a->unit().has_value());

  // Monomials of degree 1..2 in two variables: 2 + 3.
  CHECK(truncated_polynomial_algebra(2, 2)->dim() == 5);

  const auto sq = truncated_polynomial_algebra(2, 1);
  CHECK(sq->dim() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(sq->product(i, j).empty());
}

TEST_CASE("tensor bases") {
  CHECK(tensor_basis(*builtin_algebra("dual"), 2).size() == 4);

  const auto b = tensor_basis(*truncated_polynomial_algebra(1, 2), 2, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Word{0, 0});

  CHECK(tensor_basis(*truncated_polynomial_algebra(2, 2), 3, 2).size() == 0);
  CHECK(tensor_basis(*builtin_algebra("C"), 0).size() == 1);
  CHECK_THROWS_AS(tensor_basis(*builtin_algebra("C"), 1, 1), AlgebraError);

  const TensorShape s(3, 2);
  for (Index f = 0; f < s.size(); ++f) CHECK(s.flat(s.word(f)) == f);
  CHECK(s.word(5) == Word{1, 2});
}

TEST_CASE("perturbed algebras skip validation") {
  const auto bent = Algebra::perturbed(*builtin_algebra("dual"), 0, 1, 1, Rational(1));
  CHECK(bent->coeff(0, 1, 1) == 2);
  CHECK(bent->associativity_witness().has_value());
}
