#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unc/distribution.hpp"
#include "unc/quantum.hpp"
#include "unc/uncertainty.hpp"

namespace unc::verify {

struct Failure {
  std::string input;  // enough to re-run the case: seed, trial index and the values
  double observed = 0.0;
  double bound = 0.0;
};

struct PropertyReport {
  std::string property;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

/// "PROPERTY <name> trials=N failures=K", then one indented line per failure and per note.
std::string serialize(const PropertyReport& report);

inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kOracleTolerance = 1e-10;
inline constexpr double kSpectralTolerance = 1e-9;

/// Per-trial engine; trial i is reproducible without replaying trials 0..i-1.
Rng trial_rng(std::uint64_t seed, std::size_t trial);

using ClassicalMeasure = std::function<double(const ProbabilityDistribution&)>;

// Classical properties. Failures are data, never exceptions.
PropertyReport check_schur_concavity(const MeasureId& m, std::size_t n, std::size_t trials, std::uint64_t seed);
PropertyReport check_schur_concavity(const std::string& name, const ClassicalMeasure& u, std::size_t n,
                                     std::size_t trials, std::uint64_t seed);
PropertyReport check_faithfulness(const MeasureId& m, std::size_t n, std::size_t trials, std::uint64_t seed);
PropertyReport check_faithfulness(const std::string& name, const ClassicalMeasure& u, std::size_t n,
                                  std::size_t trials, std::uint64_t seed);
PropertyReport check_oracle_equivalence(const MeasureId& m, std::size_t n, std::size_t trials, std::uint64_t seed);
PropertyReport check_permutation_invariance(const MeasureId& m, std::size_t n, std::size_t trials,
                                            std::uint64_t seed);
/// D(P || P_U) >= D(Q || P_U) whenever P majorizes Q.
PropertyReport check_divergence_schur_convexity(const DivergenceSpec& spec, std::size_t n, std::size_t trials,
                                                std::uint64_t seed);

/// The classical value a quantum measure must reproduce on diag(p).
double classical_counterpart(const QDistanceSpec& spec, const ProbabilityDistribution& p);

// Quantum properties.
PropertyReport check_quantum_classical_reduction(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                                 std::uint64_t seed);
PropertyReport check_quantum_oracle(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                    std::uint64_t seed);
/// Includes the constant term: D(W|0><0|W^dagger || I/d) must not depend on W.
PropertyReport check_unitary_invariance(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                        std::uint64_t seed);
/// Passes when some unitary changes the entrywise-l_p uncertainty by more than 1e-6.
PropertyReport find_unitary_violation(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                      std::uint64_t seed);
PropertyReport check_spectral_monotonicity(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                           std::uint64_t seed);
/// Zero on random pure states; random states never exceed I/d.
PropertyReport check_quantum_faithfulness(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                          std::uint64_t seed);
/// Reconstruction and orthonormality on random density matrices; closed-form
/// eigenvalues for d = 2 and d = 3.
PropertyReport check_eigensolver(std::size_t d, std::size_t trials, std::uint64_t seed);

/// Closed-form eigenvalues of a 2x2 or 3x3 Hermitian matrix, descending.
std::vector<double> analytic_eigenvalues(const CMatrix& a);

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t classical_trials = 10000;
  std::size_t oracle_trials = 1000;
  std::size_t quantum_trials = 1000;
  std::size_t unitary_trials = 100;
};

/// The measure list the classical suite certifies.
std::vector<MeasureId> standard_measures();
std::vector<QDistanceSpec> standard_quantum_specs();

std::vector<PropertyReport> run_classical_suite(const SuiteOptions& opts);
std::vector<PropertyReport> run_quantum_suite(const SuiteOptions& opts);
/// Each report passes when the uncorrected closed form disagrees with the
/// construction in the documented way.
std::vector<PropertyReport> run_errata_suite();

}  // namespace unc::verify
