#include <doctest.h>

#include <cmath>

#include "unc/error.hpp"
#include "unc/uncertainty.hpp"
#include "unc/uncorrected.hpp"

using namespace unc;

namespace {

const auto P = make_distribution({0.75, 0.25});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no unc::Error thrown");
  return ErrorCode::ParseError;
}

double generic(const MeasureId& m, const ProbabilityDistribution& p) {
  const auto g = m.generator();
  return induced_uncertainty(g.spec, g.direction, p);
}

}  // namespace

TEST_CASE("u_up from KL is Shannon entropy") {
  CHECK(u_up(DivergenceSpec::kl(), uniform(2)) == doctest::Approx(1.0));
  CHECK(u_up(DivergenceSpec::kl(), P) == doctest::Approx(0.811278124459133).epsilon(1e-13));
  CHECK(u_up(DivergenceSpec::total_variation(), certain(2, 0)) == doctest::Approx(0.0));
}

TEST_CASE("u_up does not depend on which certain distribution is the reference") {
  const auto p = random_distribution(5, 17);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(u_up(DivergenceSpec::jensen_shannon(), p, k) ==
          doctest::Approx(u_up(DivergenceSpec::jensen_shannon(), p)).epsilon(1e-13));
  }
}

TEST_CASE("u_down") {
  CHECK(u_down(DivergenceSpec::renyi(0.5), P) == doctest::Approx(0.899968626952992).epsilon(1e-12));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_distribution(3, s);
    CHECK(u_down(DivergenceSpec::total_variation(), p) ==
          doctest::Approx(u_up(DivergenceSpec::total_variation(), p)).epsilon(1e-13));
  }
  CHECK(code_of([] { u_down(DivergenceSpec::renyi(2.0), P); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { u_down(DivergenceSpec::tsallis(1.5), P); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { u_down(DivergenceSpec::kl(), P); }) == ErrorCode::InfiniteReference);
}

TEST_CASE("closed forms at fixed points") {
  CHECK(closed_form(MeasureId::absolute(), P) == doctest::Approx(0.25));
  CHECK(closed_form(MeasureId::jensen_shannon(), uniform(2)) ==
        doctest::Approx(3.0 - 1.5 * std::log2(3.0)).epsilon(1e-13));
  CHECK(closed_form(MeasureId::jensen_shannon(), uniform(2)) ==
        doctest::Approx(0.622556248918266).epsilon(1e-13));
  CHECK(closed_form(MeasureId::hellinger(), P) == doctest::Approx(0.517638090205042).epsilon(1e-13));
  CHECK(closed_form(MeasureId::tsallis(2.0), P) == doctest::Approx(0.75));
  CHECK(closed_form(MeasureId::min_entropy(), certain(2, 0)) == 0.0);
  CHECK(closed_form(MeasureId::down_renyi(0.5), P) == doctest::Approx(0.899968626952992).epsilon(1e-12));
  CHECK(closed_form(MeasureId::hartley(), make_distribution({0.5, 0.5, 0.0, 0.0})) == doctest::Approx(1.0));
  CHECK(closed_form(MeasureId::renyi(0.5), uniform(4)) == doctest::Approx(2.0));
}

TEST_CASE("max values") {
  CHECK(max_value(MeasureId::shannon(), 8) == doctest::Approx(3.0));
  CHECK(max_value(MeasureId::absolute(), 2) == doctest::Approx(0.5));
  CHECK(max_value(MeasureId::hellinger(), 2) == doctest::Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("every closed form agrees with its generating divergence") {
  const MeasureId all[] = {MeasureId::shannon(),        MeasureId::renyi(0.3),       MeasureId::renyi(2.0),
                           MeasureId::hartley(),        MeasureId::bhattacharyya(),  MeasureId::min_entropy(),
                           MeasureId::down_renyi(0.3),  MeasureId::jensen_shannon(), MeasureId::tsallis(0.5),
                           MeasureId::tsallis(3.0),     MeasureId::down_tsallis(0.7), MeasureId::hellinger(),
                           MeasureId::absolute()};
  for (const auto& m : all) {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::uint64_t s = 0; s < 25; ++s) {
        const auto p = random_distribution(n, 1000 * n + s);
        CAPTURE(m.label());
        CHECK(std::abs(closed_form(m, p) - generic(m, p)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("down-Renyi relates to Renyi entropy of the same order") {
  for (double g : {0.2, 0.5, 0.8}) {
    const auto p = random_distribution(4, 9);
    CHECK(measures::down_renyi(g, p) == doctest::Approx(((1 - g) / g) * measures::renyi_entropy(g, p)));
  }
}

TEST_CASE("Tsallis entropy at beta = 1 is Shannon") {
  CHECK(measures::tsallis(1.0, P) == doctest::Approx(measures::shannon(P)));
}

TEST_CASE("measure parameter validation") {
  CHECK(code_of([] { MeasureId::down_renyi(1.0); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { MeasureId::down_tsallis(0.0); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { MeasureId::renyi(-1.0); }) == ErrorCode::NegativeOrder);
}

TEST_CASE("uncorrected closed forms disagree in the documented way") {
  const auto c = certain(2, 0);
  CHECK(uncorrected::js_uncertainty(c) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(uncorrected::js_uncertainty(uniform(2)) == doctest::Approx(2.622556248918266).epsilon(1e-12));
  CHECK(uncorrected::hellinger_uncertainty(P) == doctest::Approx(0.375));
  CHECK(uncorrected::down_tsallis(0.3, c) == doctest::Approx(1.0 / 0.7));
  CHECK(closed_form(MeasureId::down_tsallis(0.3), c) == doctest::Approx(0.0));
  CHECK(uncorrected::down_renyi_rescaling(0.5, P) < 0.0);
}
