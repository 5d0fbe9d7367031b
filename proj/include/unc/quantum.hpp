#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "unc/cmatrix.hpp"
#include "unc/distribution.hpp"
#include "unc/divergence.hpp"
#include "unc/hermitian_eigen.hpp"

namespace unc {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-9;

/// Hermitian, unit-trace, positive-semidefinite matrix. The spectrum is
/// computed once during validation and kept alongside the entries.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

 private:
  friend DensityMatrix make_density_matrix(const CMatrix& entries);
  DensityMatrix(CMatrix m, Spectrum s) : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  CMatrix matrix_;
  Spectrum spectrum_;
};

/// Throws NotHermitian, NotUnitTrace or NotPSD.
DensityMatrix make_density_matrix(const CMatrix& entries);

DensityMatrix maximally_mixed(std::size_t d);
/// |psi><psi| for a normalized copy of psi.
DensityMatrix pure_state(std::span<const Complex> psi);
DensityMatrix diagonal_state(const ProbabilityDistribution& p);
/// W rho W^dagger
DensityMatrix conjugate(const CMatrix& w, const DensityMatrix& rho);

/// Eigenvalues as a distribution; roundoff-sized ones (at most 1e-13) become zero.
ProbabilityDistribution spectrum_distribution(const DensityMatrix& rho);

/// Same decomposition that validation produced.
const Spectrum& eigen_hermitian(const DensityMatrix& rho);

/// V diag(sqrt(max(lambda, 0))) V^dagger
CMatrix matrix_sqrt(const DensityMatrix& rho);

enum class QDistanceFamily { Bures, QHellinger, SchattenP, EntrywiseLp, HilbertSchmidt, GenRenyi, GenTsallis };

struct QDistanceSpec {
  QDistanceFamily family = QDistanceFamily::HilbertSchmidt;
  double order = 0.0;  // p for the norms, alpha for GenRenyi, beta for GenTsallis

  static QDistanceSpec bures() { return {QDistanceFamily::Bures}; }
  static QDistanceSpec hellinger() { return {QDistanceFamily::QHellinger}; }
  static QDistanceSpec schatten(double p);
  static QDistanceSpec entrywise(double p);
  static QDistanceSpec hilbert_schmidt() { return {QDistanceFamily::HilbertSchmidt}; }
  static QDistanceSpec gen_renyi(double alpha);
  static QDistanceSpec gen_tsallis(double beta);

  /// Everything except EntrywiseLp depends on rho only through its spectrum.
  bool is_spectral() const noexcept { return family != QDistanceFamily::EntrywiseLp; }
  std::string label() const;
};

/// Distances between density matrices (logarithms base 2):
///   Bures           2 - 2 Tr sqrt(sqrt(rho) sigma sqrt(rho))
///   QHellinger      2 - 2 Tr sqrt(rho) sqrt(sigma)
///   SchattenP       (sum |eig(rho - sigma)|^p)^(1/p)
///   EntrywiseLp     (sum_ij |(rho - sigma)_ij|^p)^(1/p), basis dependent
///   HilbertSchmidt  Tr (rho - sigma)^2
///   GenRenyi        log2 Tr (sigma^x rho sigma^x)^alpha / (alpha - 1), x = (1 - alpha) / (2 alpha)
///   GenTsallis      (Tr sigma^y rho^beta sigma^y - 1) / (beta - 1), y = (1 - beta) / 2
/// GenRenyi and GenTsallis at order 1 are the relative entropy Tr rho (log2 rho - log2 sigma).
/// Throws DimensionMismatch, and OrthogonalStates for GenRenyi with alpha > 1
/// and Tr(rho sigma) = 0.
DivergenceValue quantum_distance(const QDistanceSpec& spec, const DensityMatrix& rho, const DensityMatrix& sigma);

/// D(|0><0| || I/d) - D(rho || I/d), both terms evaluated by quantum_distance.
/// Returned unclamped: EntrywiseLp can go negative for states that are not
/// diagonal in the computational basis.
double induced_quantum_uncertainty(const QDistanceSpec& spec, const DensityMatrix& rho);

/// Spectral closed forms of induced_quantum_uncertainty:
///   Bures, QHellinger  (2 / sqrt d)(Tr sqrt rho - 1)
///   SchattenP          [(d-1)^p + d - 1]^(1/p) / d - (sum |lambda_i - 1/d|^p)^(1/p)
///   HilbertSchmidt     1 - Tr rho^2
///   GenRenyi           Renyi entropy of the spectrum
///   GenTsallis         d^(beta-1) (1 - Tr rho^beta) / (beta - 1)
/// Throws UnsupportedFamily for EntrywiseLp.
double quantum_closed_form(const QDistanceSpec& spec, const DensityMatrix& rho);

double von_neumann_entropy(const DensityMatrix& rho);

/// Haar-like unitary: Gram-Schmidt on complex Gaussian columns.
CMatrix random_unitary(std::size_t d, Rng& rng);
/// Mixture of `rank` orthonormal random pure states with flat-Dirichlet weights.
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng);
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, std::uint64_t seed);

/// Text format: first line d, then d rows of d whitespace-separated "re:im" tokens.
DensityMatrix read_density_matrix(std::istream& in);
void write_density_matrix(std::ostream& out, const DensityMatrix& rho);

}  // namespace unc
