#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unc {

using Rng = std::mt19937_64;

/// A validated point on the probability simplex.
///
/// Construction goes through make_distribution() (or the uniform/certain/random
/// factories). Entries are non-negative and sum to exactly one in working
/// precision; values within 1e-9 of normalized are rescaled silently.
class ProbabilityDistribution {
 public:
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  auto begin() const noexcept { return probs_.begin(); }
  auto end() const noexcept { return probs_.end(); }

  friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;

 private:
  friend ProbabilityDistribution make_distribution(std::span<const double> values);
  explicit ProbabilityDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kNegativeTolerance = 1e-12;
inline constexpr double kMajorizationTolerance = 1e-12;

ProbabilityDistribution make_distribution(std::span<const double> values);
inline ProbabilityDistribution make_distribution(std::initializer_list<double> values) {
  return make_distribution(std::span<const double>(values.begin(), values.size()));
}

ProbabilityDistribution uniform(std::size_t n);
ProbabilityDistribution certain(std::size_t n, std::size_t index);

/// True iff p majorizes q: descending prefix sums of p dominate those of q.
bool majorizes(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

/// Flat-Dirichlet sample (normalized unit exponentials).
ProbabilityDistribution random_distribution(std::size_t n, Rng& rng);
ProbabilityDistribution random_distribution(std::size_t n, std::uint64_t seed);

/// Returns (P, Q) with Q reached from P by `steps` Robin-Hood transfers, so P majorizes Q.
/// P is flat-Dirichlet on a random support of size 1..n, so certain and
/// sparse starting points are exercised as well as interior ones.
std::pair<ProbabilityDistribution, ProbabilityDistribution>
random_majorized_pair(std::size_t n, std::size_t steps, Rng& rng);
std::pair<ProbabilityDistribution, ProbabilityDistribution>
random_majorized_pair(std::size_t n, std::size_t steps, std::uint64_t seed);

/// "0.5,0.3,0.2"
ProbabilityDistribution parse_distribution(std::string_view csv);
/// One probability per line; blank lines and lines starting with '#' are skipped.
ProbabilityDistribution read_distribution(std::istream& in);

std::string to_string(const ProbabilityDistribution& p);

}  // namespace unc
