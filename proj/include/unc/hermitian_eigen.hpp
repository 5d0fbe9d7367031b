#pragma once

#include <functional>
#include <vector>

#include "unc/cmatrix.hpp"

namespace unc {

/// Eigen-decomposition A = V diag(eigenvalues) V^dagger of a Hermitian matrix.
/// Eigenvalues are sorted descending; column k of `eigenvectors` belongs to eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiOffTolerance = 1e-14;

/// Cyclic complex Jacobi rotations.
///
/// Each (p, q) rotation first removes the phase of a_pq with a diagonal unitary,
/// then applies the real symmetric Jacobi rotation that zeroes it. Iterates
/// until the off-diagonal Frobenius mass falls below 1e-14 * max(1, ||A||_F)
/// or a full sweep performs no rotation. Throws NoConvergence after 100 sweeps
/// and NotHermitian if `a` is not Hermitian to 1e-10 * max(1, max|a_ij|).
Spectrum eigen_hermitian(const CMatrix& a);

/// V f(Lambda) V^dagger
CMatrix spectral_function(const Spectrum& s, const std::function<double(double)>& f);

/// max_ij |A - V Lambda V^dagger|_ij
double reconstruction_error(const CMatrix& a, const Spectrum& s);

}  // namespace unc
