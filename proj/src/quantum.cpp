#include "unc/quantum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <numeric>
#include <string>

#include "unc/error.hpp"
#include "unc/uncertainty.hpp"

namespace unc {

namespace {

// Eigenvalues at or below this are treated as the kernel of sigma.
constexpr double kKernelTolerance = 1e-12;
// rho puts more weight than this on ker(sigma) => supp(rho) not inside supp(sigma).
constexpr double kSupportLeakTolerance = 1e-10;

// Eigenvalues this small are rounding noise on a zero eigenvalue. Without the
// floor, sqrt and fractional powers turn 1e-17 noise into errors near 1e-8.
constexpr double kZeroEigenvalue = 1e-13;

double clamp0(double x) { return x > kZeroEigenvalue ? x : 0.0; }

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "density matrices of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

// <v_k| rho |v_k> for column k of the eigenvector matrix.
double diagonal_weight(const CMatrix& rho, const CMatrix& vecs, std::size_t k) {
  const std::size_t d = rho.dim();
  Complex s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += rho(i, j) * vecs(j, k);
    s += std::conj(vecs(i, k)) * row;
  }
  return s.real();
}

bool support_contained(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto& s = sigma.spectrum();
  double leak = 0.0;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    if (s.eigenvalues[k] <= kKernelTolerance) leak += diagonal_weight(rho.matrix(), s.eigenvectors, k);
  }
  return leak <= kSupportLeakTolerance;
}

// sigma^x restricted to the support of sigma.
CMatrix support_power(const DensityMatrix& sigma, double x) {
  return spectral_function(sigma.spectrum(),
                           [x](double l) { return l > kKernelTolerance ? std::pow(l, x) : 0.0; });
}

double sum_sqrt_eigenvalues(const CMatrix& hermitian_psd) {
  const auto s = eigen_hermitian(hermitian_psd.hermitian_part());
  double f = 0.0;
  for (double l : s.eigenvalues) f += std::sqrt(clamp0(l));
  return f;
}

DivergenceValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto& s = sigma.spectrum();
  double cross = 0.0;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    const double w = diagonal_weight(rho.matrix(), s.eigenvectors, k);
    if (s.eigenvalues[k] <= kKernelTolerance) {
      if (w > kSupportLeakTolerance) return DivergenceValue::infinity();
      continue;
    }
    cross += w * std::log2(s.eigenvalues[k]);
  }
  return DivergenceValue(-von_neumann_entropy(rho) - cross);
}

DivergenceValue gen_renyi(double alpha, const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (alpha == 1.0) return relative_entropy(rho, sigma);
  if (alpha > 1.0) {
    if ((rho.matrix() * sigma.matrix()).trace().real() <= kKernelTolerance) {
      throw Error(ErrorCode::OrthogonalStates, "generalized Renyi with alpha > 1 needs non-orthogonal states");
    }
    if (!support_contained(rho, sigma)) return DivergenceValue::infinity();
  }
  const double x = (1.0 - alpha) / (2.0 * alpha);
  const CMatrix sx = support_power(sigma, x);
  const auto s = eigen_hermitian((sx * rho.matrix() * sx).hermitian_part());
  double q = 0.0;
  for (double l : s.eigenvalues) {
    if (l > kZeroEigenvalue) q += std::pow(l, alpha);
  }
  if (q <= 0.0) return DivergenceValue::infinity();
  return DivergenceValue(std::log2(q) / (alpha - 1.0));
}

DivergenceValue gen_tsallis(double beta, const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (beta == 1.0) return relative_entropy(rho, sigma);
  if (beta > 1.0 && !support_contained(rho, sigma)) return DivergenceValue::infinity();
  const CMatrix sy = support_power(sigma, (1.0 - beta) / 2.0);
  const CMatrix rb = spectral_function(rho.spectrum(), [beta](double l) { return std::pow(clamp0(l), beta); });
  const double q = (sy * rb * sy).trace().real();
  return DivergenceValue((q - 1.0) / (beta - 1.0));
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

void require_order_at_least(double v, double lo, bool inclusive, const char* what) {
  const bool ok = std::isfinite(v) && (inclusive ? v >= lo : v > lo);
  if (!ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s order %g must be %s %g and finite", what, v, inclusive ? ">=" : ">", lo);
    throw Error(ErrorCode::UnsupportedOrder, buf);
  }
}

}  // namespace

DensityMatrix make_density_matrix(const CMatrix& entries) {
  if (entries.dim() == 0) throw Error(ErrorCode::InvalidDimension, "density matrix needs d >= 1");
  const double defect = entries.hermiticity_defect();
  if (!(defect <= kHermitianTolerance)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |a_ij - conj(a_ji)| = %.3g", defect);
    throw Error(ErrorCode::NotHermitian, buf);
  }
  const double tr = entries.trace().real();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "trace = %.17g", tr);
    throw Error(ErrorCode::NotUnitTrace, buf);
  }
  CMatrix m = entries.hermitian_part();
  Spectrum s = eigen_hermitian(m);
  if (s.eigenvalues.back() < -kPsdTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "smallest eigenvalue %.3g", s.eigenvalues.back());
    throw Error(ErrorCode::NotPSD, buf);
  }
  return DensityMatrix(std::move(m), std::move(s));
}

DensityMatrix maximally_mixed(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidDimension, "density matrix needs d >= 1");
  return make_density_matrix(CMatrix::identity(d) * Complex(1.0 / static_cast<double>(d)));
}

DensityMatrix pure_state(std::span<const Complex> psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  if (psi.empty() || norm2 <= 0.0) throw Error(ErrorCode::InvalidDimension, "pure state needs a non-zero vector");
  std::vector<Complex> v(psi.begin(), psi.end());
  for (auto& z : v) z /= std::sqrt(norm2);
  return make_density_matrix(CMatrix::outer(v));
}

DensityMatrix diagonal_state(const ProbabilityDistribution& p) {
  return make_density_matrix(CMatrix::diagonal(p.probs()));
}

DensityMatrix conjugate(const CMatrix& w, const DensityMatrix& rho) {
  return make_density_matrix((w * rho.matrix() * w.adjoint()).hermitian_part());
}

ProbabilityDistribution spectrum_distribution(const DensityMatrix& rho) {
  std::vector<double> l = rho.spectrum().eigenvalues;
  for (double& x : l) x = clamp0(x);
  const double total = std::accumulate(l.begin(), l.end(), 0.0);
  for (double& x : l) x /= total;
  return make_distribution(l);
}

const Spectrum& eigen_hermitian(const DensityMatrix& rho) { return rho.spectrum(); }

CMatrix matrix_sqrt(const DensityMatrix& rho) {
  return spectral_function(rho.spectrum(), [](double l) { return std::sqrt(clamp0(l)); });
}

QDistanceSpec QDistanceSpec::schatten(double p) {
  require_order_at_least(p, 1.0, true, "Schatten");
  return {QDistanceFamily::SchattenP, p};
}

QDistanceSpec QDistanceSpec::entrywise(double p) {
  require_order_at_least(p, 1.0, true, "entrywise l_p");
  return {QDistanceFamily::EntrywiseLp, p};
}

QDistanceSpec QDistanceSpec::gen_renyi(double alpha) {
  require_order_at_least(alpha, 0.0, false, "generalized Renyi");
  return {QDistanceFamily::GenRenyi, alpha};
}

QDistanceSpec QDistanceSpec::gen_tsallis(double beta) {
  require_order_at_least(beta, 0.0, false, "generalized Tsallis");
  return {QDistanceFamily::GenTsallis, beta};
}

std::string QDistanceSpec::label() const {
  char buf[64];
  switch (family) {
    case QDistanceFamily::Bures: return "Bures";
    case QDistanceFamily::QHellinger: return "QHellinger";
    case QDistanceFamily::SchattenP: std::snprintf(buf, sizeof buf, "SchattenP(p=%g)", order); return buf;
    case QDistanceFamily::EntrywiseLp: std::snprintf(buf, sizeof buf, "EntrywiseLp(p=%g)", order); return buf;
    case QDistanceFamily::HilbertSchmidt: return "HilbertSchmidt";
    case QDistanceFamily::GenRenyi: std::snprintf(buf, sizeof buf, "GenRenyi(alpha=%g)", order); return buf;
    case QDistanceFamily::GenTsallis: std::snprintf(buf, sizeof buf, "GenTsallis(beta=%g)", order); return buf;
  }
  return "?";
}

DivergenceValue quantum_distance(const QDistanceSpec& spec, const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  switch (spec.family) {
    case QDistanceFamily::Bures: {
      const CMatrix s = matrix_sqrt(rho);
      return DivergenceValue(2.0 - 2.0 * sum_sqrt_eigenvalues(s * sigma.matrix() * s));
    }
    case QDistanceFamily::QHellinger: {
      const double affinity = (matrix_sqrt(rho) * matrix_sqrt(sigma)).trace().real();
      return DivergenceValue(2.0 - 2.0 * affinity);
    }
    case QDistanceFamily::SchattenP: {
      const auto s = eigen_hermitian((rho.matrix() - sigma.matrix()).hermitian_part());
      double acc = 0.0;
      for (double l : s.eigenvalues) acc += std::pow(std::abs(l), spec.order);
      return DivergenceValue(std::pow(acc, 1.0 / spec.order));
    }
    case QDistanceFamily::EntrywiseLp: {
      const CMatrix diff = rho.matrix() - sigma.matrix();
      double acc = 0.0;
      for (std::size_t i = 0; i < diff.dim(); ++i) {
        for (std::size_t j = 0; j < diff.dim(); ++j) acc += std::pow(std::abs(diff(i, j)), spec.order);
      }
      return DivergenceValue(std::pow(acc, 1.0 / spec.order));
    }
    case QDistanceFamily::HilbertSchmidt: {
      const CMatrix diff = rho.matrix() - sigma.matrix();
      double acc = 0.0;
      for (std::size_t i = 0; i < diff.dim(); ++i) {
        for (std::size_t j = 0; j < diff.dim(); ++j) acc += std::norm(diff(i, j));
      }
      return DivergenceValue(acc);
    }
    case QDistanceFamily::GenRenyi: return gen_renyi(spec.order, rho, sigma);
    case QDistanceFamily::GenTsallis: return gen_tsallis(spec.order, rho, sigma);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown quantum distance");
}

double induced_quantum_uncertainty(const QDistanceSpec& spec, const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const auto mixed = maximally_mixed(d);
  const auto reference = diagonal_state(certain(d, 0));
  const DivergenceValue constant = quantum_distance(spec, reference, mixed);
  if (!constant.is_finite()) {
    throw Error(ErrorCode::InfiniteReference, spec.label() + " diverges between pure and maximally mixed");
  }
  return constant.value() - quantum_distance(spec, rho, mixed).value();
}

double quantum_closed_form(const QDistanceSpec& spec, const DensityMatrix& rho) {
  const auto p = spectrum_distribution(rho);
  const double d = static_cast<double>(rho.dim());
  switch (spec.family) {
    case QDistanceFamily::Bures:
    case QDistanceFamily::QHellinger: {
      double s = 0.0;
      for (double l : p) s += std::sqrt(l);
      return (2.0 / std::sqrt(d)) * (s - 1.0);
    }
    case QDistanceFamily::SchattenP: {
      const double order = spec.order;
      double acc = 0.0;
      for (double l : p) acc += std::pow(std::abs(l - 1.0 / d), order);
      return std::pow(std::pow(d - 1.0, order) + d - 1.0, 1.0 / order) / d - std::pow(acc, 1.0 / order);
    }
    case QDistanceFamily::HilbertSchmidt: {
      double acc = 0.0;
      for (double l : p) acc += l * l;
      return 1.0 - acc;
    }
    case QDistanceFamily::GenRenyi: return measures::renyi_entropy(spec.order, p);
    case QDistanceFamily::GenTsallis: return measures::tsallis(spec.order, p);
    case QDistanceFamily::EntrywiseLp: break;
  }
  throw Error(ErrorCode::UnsupportedFamily, spec.label() + " has no spectral closed form");
}

double von_neumann_entropy(const DensityMatrix& rho) { return measures::shannon(spectrum_distribution(rho)); }

CMatrix random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw Error(ErrorCode::InvalidDimension, "unitary needs d >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix u(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (;;) {
      for (std::size_t i = 0; i < d; ++i) u(i, k) = Complex(gauss(rng), gauss(rng));
      // Modified Gram-Schmidt against earlier columns.
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += std::conj(u(i, j)) * u(i, k);
        for (std::size_t i = 0; i < d; ++i) u(i, k) -= dot * u(i, j);
      }
      double norm2 = 0.0;
      for (std::size_t i = 0; i < d; ++i) norm2 += std::norm(u(i, k));
      if (norm2 < 1e-20) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < d; ++i) u(i, k) *= inv;
      break;
    }
  }
  return u;
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > d) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(rank) + " outside [1, " + std::to_string(d) + "]");
  }
  const CMatrix u = random_unitary(d, rng);
  auto weights = random_distribution(rank, rng);
  while (*std::min_element(weights.begin(), weights.end()) <= 1e-9) weights = random_distribution(rank, rng);

  CMatrix rho(d);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) rho(i, j) += weights[k] * u(i, k) * std::conj(u(j, k));
    }
  }
  return make_density_matrix(rho.hermitian_part());
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(d, rank, rng);
}

DensityMatrix read_density_matrix(std::istream& in) {
  std::vector<std::string> tokens{std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "empty density matrix file");
  std::size_t d = 0;
  {
    const auto& t = tokens.front();
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
    if (ec != std::errc() || ptr != t.data() + t.size() || d == 0) {
      throw Error(ErrorCode::ParseError, "first token must be the dimension, got '" + t + "'");
    }
  }
  if (tokens.size() != 1 + d * d) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(d * d) + " entries, got " +
                                           std::to_string(tokens.size() - 1));
  }
  CMatrix m(d);
  for (std::size_t k = 0; k < d * d; ++k) {
    const std::string_view t = tokens[k + 1];
    const auto colon = t.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "entry '" + std::string(t) + "' is not re:im");
    }
    m(k / d, k % d) = Complex(parse_double(t.substr(0, colon)), parse_double(t.substr(colon + 1)));
  }
  return make_density_matrix(m);
}

void write_density_matrix(std::ostream& out, const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  out << d << '\n';
  char buf[64];
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g:%.17g", rho(i, j).real(), rho(i, j).imag());
      if (j) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace unc
