#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "unc/distribution.hpp"

namespace unc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Non-negative extended real. +infinity is an ordinary value, never NaN.
class DivergenceValue {
 public:
  constexpr DivergenceValue() = default;
  /// Clamps rounding residue below zero; rejects NaN.
  explicit DivergenceValue(double v);

  static constexpr DivergenceValue infinity() {
    DivergenceValue d;
    d.value_ = kInf;
    return d;
  }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_finite() const noexcept { return value_ != kInf; }
  constexpr operator double() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

/// Convex generator f for an f-divergence, with f(1) = 0.
/// `slope_at_infinity` is lim_{t->inf} f(t)/t and prices mass of p where q vanishes.
struct ConvexGenerator {
  std::string name;
  std::function<double(double)> f;
  double slope_at_infinity = kInf;
};

enum class DivergenceFamily { KL, Renyi, JensenShannon, Tsallis, Hellinger, TotalVariation, GenericF };

/// Tagged divergence selector. Use the named factories; they validate parameters.
struct DivergenceSpec {
  DivergenceFamily family = DivergenceFamily::KL;
  double alpha = 0.0;  // Renyi order
  double beta = 0.0;   // Tsallis order
  std::optional<ConvexGenerator> generator;

  static DivergenceSpec kl();
  static DivergenceSpec renyi(double alpha);
  static DivergenceSpec jensen_shannon();
  static DivergenceSpec tsallis(double beta);
  static DivergenceSpec hellinger();
  static DivergenceSpec total_variation();
  static DivergenceSpec generic_f(ConvexGenerator g);

  std::string label() const;
};

// All logarithms are base 2.
DivergenceValue kl(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
DivergenceValue renyi(double alpha, const ProbabilityDistribution& p, const ProbabilityDistribution& q);
/// KL(p||m) + KL(q||m) with m the midpoint; no 1/2 prefactor, so the range is [0, 2].
DivergenceValue jensen_shannon(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
DivergenceValue tsallis(double beta, const ProbabilityDistribution& p, const ProbabilityDistribution& q);
DivergenceValue hellinger(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
DivergenceValue total_variation(const ProbabilityDistribution& p, const ProbabilityDistribution& q);
DivergenceValue f_divergence(const ConvexGenerator& g, const ProbabilityDistribution& p,
                             const ProbabilityDistribution& q);

DivergenceValue divergence(const DivergenceSpec& spec, const ProbabilityDistribution& p,
                           const ProbabilityDistribution& q);

namespace generators {
ConvexGenerator kl();               // t log2 t
ConvexGenerator total_variation();  // |t - 1| / 2
ConvexGenerator hellinger();        // (sqrt t - 1)^2
}  // namespace generators

}  // namespace unc
