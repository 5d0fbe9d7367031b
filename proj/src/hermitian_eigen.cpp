#include "unc/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unc/error.hpp"

namespace unc {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p, q) by A <- U^dagger A U and accumulates V <- V U, where
// U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u00 = c;
  const Complex u01 = s;
  const Complex u10 = -s * std::conj(phase);
  const Complex u11 = c * std::conj(phase);

  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u00 + akq * u10;
    a(k, q) = akp * u01 + akq * u11;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u00 + vkq * u10;
    v(k, q) = vkp * u01 + vkq * u11;
  }

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

}  // namespace

Spectrum eigen_hermitian(const CMatrix& input) {
  const std::size_t d = input.dim();
  const double scale = std::max(1.0, input.max_abs());
  if (input.hermiticity_defect() > 1e-10 * scale) {
    throw Error(ErrorCode::NotHermitian, "eigen_hermitian needs a Hermitian matrix");
  }

  CMatrix a = input.hermitian_part();
  CMatrix v = CMatrix::identity(d);
  const double threshold = kJacobiOffTolerance * std::max(1.0, a.frobenius_norm());

  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    if (sweep == kMaxJacobiSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi iteration did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Negligible next to both diagonal entries: adding it would not change them.
        const double g = 100.0 * mag;
        const double app = std::abs(a(p, p).real());
        const double aqq = std::abs(a(q, q).real());
        if (sweep > 3 && app + g == app && aqq + g == aqq) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
        rotated = true;
      }
    }
    if (!rotated) {
      ++sweep;
      break;
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum out;
  out.sweeps = sweep;
  out.eigenvalues.resize(d);
  out.eigenvectors = CMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

CMatrix spectral_function(const Spectrum& s, const std::function<double(double)>& f) {
  const std::size_t d = s.eigenvalues.size();
  CMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double fk = f(s.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const Complex vik = s.eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += vik * std::conj(s.eigenvectors(j, k));
    }
  }
  return out;
}

double reconstruction_error(const CMatrix& a, const Spectrum& s) {
  return (a - spectral_function(s, [](double x) { return x; })).max_abs();
}

}  // namespace unc
