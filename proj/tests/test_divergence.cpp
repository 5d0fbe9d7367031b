#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "unc/divergence.hpp"
#include "unc/error.hpp"

using namespace unc;

namespace {

const auto P = make_distribution({0.75, 0.25});
const auto C = make_distribution({1.0, 0.0});
const auto D = make_distribution({0.0, 1.0});
const auto U2 = uniform(2);

}  // namespace

TEST_CASE("DivergenceValue") {
  CHECK(DivergenceValue(-1e-12).value() == 0.0);
  CHECK_THROWS_AS(DivergenceValue(-1e-3), std::domain_error);
  CHECK_THROWS_AS(DivergenceValue(std::nan("")), std::domain_error);
  CHECK_FALSE(DivergenceValue::infinity().is_finite());
}

TEST_CASE("Kullback-Leibler") {
  CHECK(kl(U2, U2).value() == 0.0);
  CHECK(kl(P, U2).value() == doctest::Approx(0.188721875540867).epsilon(1e-13));
  CHECK_FALSE(kl(C, D).is_finite());
  CHECK(kl(C, U2).value() == doctest::Approx(1.0));
}

TEST_CASE("Renyi") {
  CHECK(renyi(2.0, P, U2).value() == doctest::Approx(0.321928094887362).epsilon(1e-13));
  CHECK(renyi(kInf, P, U2).value() == doctest::Approx(0.584962500721156).epsilon(1e-13));
  CHECK(renyi(0.5, P, P).value() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(renyi(1.0, P, U2).value() == kl(P, U2).value());
  // order 0: minus log of the q-mass on supp p
  CHECK(renyi(0.0, C, U2).value() == doctest::Approx(1.0));
  CHECK(renyi(0.0, P, U2).value() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_FALSE(renyi(2.0, U2, C).is_finite());
  CHECK(renyi(0.5, U2, C).is_finite());
  CHECK_FALSE(renyi(0.5, C, D).is_finite());
  CHECK_THROWS_AS(DivergenceSpec::renyi(-0.5), Error);
}

TEST_CASE("Jensen-Shannon") {
  CHECK(jensen_shannon(P, P).value() == doctest::Approx(0.0));
  CHECK(jensen_shannon(C, U2).value() == doctest::Approx(0.622556248918266).epsilon(1e-13));
  CHECK(jensen_shannon(C, D).value() == doctest::Approx(2.0));
}

TEST_CASE("Tsallis") {
  CHECK(tsallis(2.0, P, P).value() == doctest::Approx(0.0));
  CHECK(tsallis(2.0, P, U2).value() == doctest::Approx(0.25));
  CHECK(tsallis(1.0, P, U2).value() == doctest::Approx(kl(P, U2).value()).epsilon(1e-8));
  CHECK_THROWS_AS(DivergenceSpec::tsallis(-1.0), Error);
}

TEST_CASE("Hellinger and total variation") {
  CHECK(hellinger(P, P).value() == doctest::Approx(0.0));
  CHECK(hellinger(C, U2).value() == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(hellinger(C, D).value() == doctest::Approx(2.0));
  CHECK(total_variation(P, P).value() == 0.0);
  CHECK(total_variation(P, U2).value() == doctest::Approx(0.25));
  CHECK(total_variation(C, D).value() == doctest::Approx(1.0));
}

TEST_CASE("f-divergence reproduces the named families") {
  CHECK(f_divergence(generators::kl(), P, U2).value() == doctest::Approx(0.188721875540867).epsilon(1e-13));
  CHECK(f_divergence(generators::hellinger(), C, U2).value() == doctest::Approx(0.585786437626905));
  CHECK_FALSE(f_divergence(generators::kl(), C, D).is_finite());
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto p = random_distribution(4, s);
    const auto q = random_distribution(4, s + 1000);
    CHECK(f_divergence(generators::total_variation(), p, q).value() ==
          doctest::Approx(total_variation(p, q).value()).epsilon(1e-12));
    CHECK(f_divergence(generators::hellinger(), p, q).value() ==
          doctest::Approx(hellinger(p, q).value()).epsilon(1e-12));
  }
  // disjoint support is priced by the slope at infinity
  CHECK(f_divergence(generators::total_variation(), C, D).value() == doctest::Approx(1.0));
}

TEST_CASE("generic generators must vanish at 1") {
  ConvexGenerator bad{"t^2", [](double t) { return t * t; }, kInf};
  CHECK_THROWS_AS(DivergenceSpec::generic_f(bad), Error);
  const auto spec = DivergenceSpec::generic_f(generators::hellinger());
  CHECK(divergence(spec, C, U2).value() == doctest::Approx(hellinger(C, U2).value()));
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(kl(P, uniform(3)), Error);
}
