#pragma once

#include <cstddef>
#include <string>

#include "unc/distribution.hpp"
#include "unc/divergence.hpp"

namespace unc {

enum class Direction {
  Up,    // D(P_C || P_U) - D(P || P_U)
  Down,  // D(P_U || P_C) - D(P_U || P)
};

/// Uncertainty induced by a divergence, measured against the uniform distribution.
///
/// U_up(P)   = D(P_C || P_U) - D(P || P_U)
/// U_down(P) = D(P_U || P_C) - D(P_U || P)
///
/// P_C is certain(n, reference_index). Every family shipped here is permutation
/// symmetric against P_U, so the index does not change the result; it is a
/// parameter only so that this can be checked.
///
/// Throws InfiniteReference when the constant term diverges, and
/// UnsupportedOrder for u_down with a Renyi or Tsallis order outside (0, 1).
double u_up(const DivergenceSpec& spec, const ProbabilityDistribution& p, std::size_t reference_index = 0);
double u_down(const DivergenceSpec& spec, const ProbabilityDistribution& p, std::size_t reference_index = 0);
double induced_uncertainty(const DivergenceSpec& spec, Direction dir, const ProbabilityDistribution& p);

enum class MeasureKind {
  Shannon,
  Renyi,
  Hartley,
  Bhattacharyya,
  MinEntropy,
  DownRenyi,
  JensenShannonU,
  TsallisU,
  DownTsallis,
  HellingerU,
  AbsoluteU,
};

struct MeasureGenerator {
  DivergenceSpec spec;
  Direction direction;
};

/// A closed-form uncertainty measure together with the (divergence, direction)
/// pair that induces it. `param` is alpha for Renyi, gamma for DownRenyi and
/// beta for the Tsallis measures; unused otherwise.
class MeasureId {
 public:
  static MeasureId shannon() { return MeasureId(MeasureKind::Shannon, 0.0); }
  static MeasureId renyi(double alpha);
  static MeasureId hartley() { return MeasureId(MeasureKind::Hartley, 0.0); }
  static MeasureId bhattacharyya() { return MeasureId(MeasureKind::Bhattacharyya, 0.5); }
  static MeasureId min_entropy() { return MeasureId(MeasureKind::MinEntropy, kInf); }
  /// gamma in (0, 1); induced by Renyi order 1 - gamma in the Down direction.
  static MeasureId down_renyi(double gamma);
  static MeasureId jensen_shannon() { return MeasureId(MeasureKind::JensenShannonU, 0.0); }
  static MeasureId tsallis(double beta);
  /// beta in (0, 1).
  static MeasureId down_tsallis(double beta);
  static MeasureId hellinger() { return MeasureId(MeasureKind::HellingerU, 0.0); }
  static MeasureId absolute() { return MeasureId(MeasureKind::AbsoluteU, 0.0); }

  MeasureKind kind() const noexcept { return kind_; }
  double param() const noexcept { return param_; }
  MeasureGenerator generator() const;
  std::string label() const;

 private:
  MeasureId(MeasureKind kind, double param) : kind_(kind), param_(param) {}

  MeasureKind kind_;
  double param_;
};

double closed_form(const MeasureId& m, const ProbabilityDistribution& p);

/// closed_form at uniform(n); the normalization divisor for plotted curves.
double max_value(const MeasureId& m, std::size_t n);

/// Entries at or below this count as outside the support for Hartley.
inline constexpr double kSupportThreshold = 1e-12;

// Individual closed forms, base-2 logarithms throughout.
namespace measures {
double shannon(const ProbabilityDistribution& p);
double renyi_entropy(double alpha, const ProbabilityDistribution& p);
double hartley(const ProbabilityDistribution& p);
double bhattacharyya(const ProbabilityDistribution& p);
double min_entropy(const ProbabilityDistribution& p);
double down_renyi(double gamma, const ProbabilityDistribution& p);
double jensen_shannon(const ProbabilityDistribution& p);
double tsallis(double beta, const ProbabilityDistribution& p);
double down_tsallis(double beta, const ProbabilityDistribution& p);
double hellinger(const ProbabilityDistribution& p);
double absolute(const ProbabilityDistribution& p);
}  // namespace measures

}  // namespace unc
