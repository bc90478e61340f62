#include "hochkit/exactla.hpp"

#include "doctest.h"

#include <random>

using namespace hochkit;

namespace {

Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<Triplet> t;
  const Index cols = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
    for (Index c = 0; c < cols; ++c) {
      const long long v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v != 0) t.emplace_back(r, c, Rational(v));
    }
  }
  return make_matrix(static_cast<Index>(rows.size()), cols, t);
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(identity_matrix(2)) == 2);
  CHECK(rank(Matrix(2, 2)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(0, 3)) == 0);
  CHECK(rank(from_rows({{0, 0, 3}, {0, 0, 0}, {1, 0, 0}})) == 2);
}

TEST_CASE("sparse rank agrees with fraction-free elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 9);
    const Index cols = 1 + static_cast<Index>(rng() % 9);
    std::vector<Triplet> t;
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) t.emplace_back(r, c, Rational(static_cast<long long>(rng() % 5) - 2, 1 + static_cast<long long>(rng() % 3)));
      }
    }
    // Force dependent rows now and then.
    if (rows >= 3 && trial % 2 == 0) {
      for (const auto& e : std::vector<Triplet>(t)) {
        if (e.row() == 0) t.emplace_back(rows - 1, e.col(), e.value() * 3);
        if (e.row() == 1) t.emplace_back(rows - 1, e.col(), -e.value());
      }
    }
    const Matrix m = make_matrix(rows, cols, t);
    REQUIRE(rank(m) == dense_integer_rank(m));
    REQUIRE(rank(m) == rank(to_dense(m)));
  }
}

TEST_CASE("cohomology_dim") {
  CHECK(cohomology_dim(Matrix(3, 0), Matrix(0, 3)) == 3);
  CHECK(cohomology_dim(Matrix(2, 0), identity_matrix(2)) == 0);
  CHECK(cohomology_dim(from_rows({{1}}), Matrix(0, 1)) == 0);
  CHECK_THROWS_AS(cohomology_dim(Matrix(2, 1), Matrix(1, 3)), DimensionMismatch);
  CHECK_THROWS_AS(cohomology_dim(from_rows({{1}, {0}}), from_rows({{1, 0}})), NotAComplex);
}

TEST_CASE("kernel, solve and inverse") {
  DenseMatrix a = to_dense(from_rows({{1, 2, 3}, {2, 4, 6}}));
  const DenseMatrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK(is_zero(to_sparse(a * k)));

  const DenseMatrix b = to_dense(from_rows({{2, 1}, {1, 1}}));
  const DenseMatrix inv = inverse(b);
  CHECK(equal(to_sparse(b * inv), identity_matrix(2)));

  DenseMatrix rhs(2, 1);
  rhs << Rational(3), Rational(2);
  const auto x = solve(b, rhs);
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == 1);
  CHECK((*x)(1, 0) == 1);

  DenseMatrix bad(2, 1);
  bad << Rational(1), Rational(3);
  CHECK_FALSE(solve(to_dense(from_rows({{1, 2}, {2, 4}})), bad).has_value());
}

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("4/-6")) == "-2/3");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
