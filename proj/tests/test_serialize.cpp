#include "hochkit/serialize.hpp"
#include "hochkit/suites.hpp"

#include "doctest.h"

using namespace hochkit;

TEST_CASE("algebra round trip") {
  for (const char* name : {"C", "dual", "T2", "poly0-n2-D2"}) {
    const auto a = builtin_algebra(name);
    const auto back = make_algebra(algebra_spec_from_json(algebra_to_json(*a)));
    CHECK_MESSAGE(back->same_as(*a), name);
  }
}

TEST_CASE("malformed algebra documents") {
  auto kind_of = [](const Report& doc) {
    try {
      make_algebra(algebra_spec_from_json(doc));
    } catch (const AlgebraError& e) {
      return e.kind();
    }
    FAIL("expected AlgebraError");
    return AlgebraError::Kind::MalformedSpec;
  };
  CHECK(kind_of(Report::array()) == AlgebraError::Kind::MalformedSpec);
  CHECK(kind_of(Report{{"basis", "e"}}) == AlgebraError::Kind::MalformedSpec);
  CHECK(kind_of(Report::parse(R"({"basis":["e"],"mult":[[0,0,0,"1/0"]]})")) == AlgebraError::Kind::MalformedSpec);
}

TEST_CASE("operator round trip") {
  std::mt19937_64 rng(1);
  const auto a = builtin_algebra("T2");
  for (int trial = 0; trial < 10; ++trial) {
    const auto op = random_op(a, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), rng);
    CHECK(op_from_json(a, op_to_json(op)) == op);
  }
  const OpSum s = bracket(multiplication_op(a), MultilinearOp::identity(a, 2));
  CHECK(opsum_from_json(a, opsum_to_json(s)) == s);
  CHECK_THROWS_AS(op_from_json(a, Report::parse(R"({"k":1,"l":1,"entries":[[[7],[0],"1"]]})")), OperatorError);
}

TEST_CASE("reports are deterministic") {
  CHECK(lie_suite(5, 10, 1).dump() == lie_suite(5, 10, 3).dump());
  CHECK(oracle_identity_suite(5, 10, 1).dump() != oracle_identity_suite(6, 10, 1).dump());
}
