#include "unc/uncorrected.hpp"

#include <cmath>

#include "unc/uncertainty.hpp"

namespace unc::uncorrected {

double js_uncertainty(const ProbabilityDistribution& p) {
  const double n = static_cast<double>(p.size());
  double tail = 0.0;
  for (double x : p) {
    const double h = (n * x + 1.0) / 2.0;
    tail += h * std::log2(h);
  }
  return std::log2(4.0 * n * n / std::pow(n + 1.0, (1.0 + n) / n)) + measures::shannon(p) + (2.0 / n) * tail;
}

double hellinger_uncertainty(const ProbabilityDistribution& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return 1.0 - s;
}

double down_tsallis(double beta, const ProbabilityDistribution& p) {
  const double n = static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, 1.0 - beta);
  }
  const double nb = std::pow(n, beta);
  return (1.0 - nb - s) / (nb * (beta - 1.0));
}

double down_renyi_rescaling(double alpha, const ProbabilityDistribution& p) {
  return ((alpha - 1.0) / alpha) * measures::renyi_entropy(alpha, p);
}

double bures_uncertainty(const DensityMatrix& rho) {
  double s = 0.0;
  for (double l : spectrum_distribution(rho)) s += std::sqrt(l);
  return (s - 1.0) / std::sqrt(static_cast<double>(rho.dim()));
}

double gen_tsallis_distance(double beta, const DensityMatrix& rho, const DensityMatrix& sigma) {
  // Same trace functional, prefactor 1/(1-beta) instead of 1/(beta-1).
  return -quantum_distance(QDistanceSpec::gen_tsallis(beta), rho, sigma).value();
}

}  // namespace unc::uncorrected
