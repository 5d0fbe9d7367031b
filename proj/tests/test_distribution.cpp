#include <doctest.h>

#include <sstream>
#include <vector>

#include "unc/distribution.hpp"
#include "unc/error.hpp"

using namespace unc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no unc::Error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("make_distribution accepts normalized input") {
  CHECK(make_distribution({0.5, 0.5}).size() == 2);
  const auto p = make_distribution({0.7, 0.2, 0.1});
  CHECK(p.size() == 3);
  CHECK(p[0] == doctest::Approx(0.7));
}

TEST_CASE("make_distribution rejects bad input") {
  CHECK(code_of([] { make_distribution({0.5, 0.6}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { make_distribution({1.2, -0.2}); }) == ErrorCode::NegativeEntry);
  CHECK(code_of([] { make_distribution(std::vector<double>{}); }) == ErrorCode::Empty);
}

TEST_CASE("make_distribution tolerates roundoff") {
  const auto p = make_distribution({0.5 + 4e-10, 0.5, -1e-13});
  double s = 0.0;
  for (double x : p) {
    CHECK(x >= 0.0);
    s += x;
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("uniform and certain") {
  CHECK(uniform(2) == make_distribution({0.5, 0.5}));
  CHECK(uniform(4) == make_distribution({0.25, 0.25, 0.25, 0.25}));
  CHECK(uniform(1) == make_distribution({1.0}));
  CHECK(certain(3, 0) == make_distribution({1.0, 0.0, 0.0}));
  CHECK(certain(2, 1) == make_distribution({0.0, 1.0}));
  CHECK(code_of([] { certain(2, 5); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { uniform(0); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("majorization") {
  CHECK(majorizes(make_distribution({0.9, 0.1}), make_distribution({0.6, 0.4})));
  CHECK(majorizes(uniform(2), uniform(2)));
  CHECK_FALSE(majorizes(uniform(2), make_distribution({0.9, 0.1})));
  // order of entries does not matter
  CHECK(majorizes(make_distribution({0.1, 0.9}), make_distribution({0.4, 0.6})));
  CHECK(majorizes(certain(4, 2), uniform(4)));
  CHECK(code_of([] { majorizes(uniform(2), uniform(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("random_distribution is deterministic per seed") {
  CHECK(random_distribution(1, 99) == make_distribution({1.0}));
  const auto a = random_distribution(3, 42);
  CHECK(a == random_distribution(3, 42));
  CHECK_FALSE(a == random_distribution(3, 43));
  double s = 0.0;
  for (double x : a) s += x;
  CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("random_majorized_pair always majorizes") {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const auto [p, q] = random_majorized_pair(n, 1 + static_cast<std::size_t>(t % 7), rng);
    REQUIRE(majorizes(p, q));
  }
  const auto [p, q] = random_majorized_pair(2, 1000000, 11);
  CHECK(majorizes(p, q));
  CHECK(code_of([] { random_majorized_pair(3, 0, 1); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("parse and print") {
  const auto p = parse_distribution("0.25, 0.75");
  CHECK(p == make_distribution({0.25, 0.75}));
  CHECK(parse_distribution(to_string(random_distribution(5, 3))) == random_distribution(5, 3));
  CHECK(code_of([] { parse_distribution("0.5,abc"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_distribution(""); }) == ErrorCode::Empty);

  std::istringstream in("# a comment\n\n0.1\n 0.9\n");
  CHECK(read_distribution(in) == make_distribution({0.1, 0.9}));
}
