#include "unc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "unc/error.hpp"
#include "unc/uncorrected.hpp"

namespace unc::verify {

namespace {

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string case_tag(std::uint64_t seed, std::size_t trial) {
  return fmt("seed=%llu trial=%zu", static_cast<unsigned long long>(seed), trial);
}

std::string matrix_tag(const DensityMatrix& rho) {
  std::ostringstream os;
  write_density_matrix(os, rho);
  std::string s = os.str();
  std::replace(s.begin(), s.end(), '\n', ';');
  return "rho={" + s + "}";
}

// Flat-Dirichlet on a random support of size 1..n.
ProbabilityDistribution random_sparse(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, n);
  const std::size_t k = size(rng);
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  const auto core = random_distribution(k, rng);
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) v[slots[i]] = core[i];
  return make_distribution(v);
}

DensityMatrix random_state(std::size_t d, Rng& rng) {
  std::uniform_int_distribution<std::size_t> rank(1, d);
  return random_density_matrix(d, rank(rng), rng);
}

std::string dim_suffix(const char* var, std::size_t n) { return fmt(" %s=%zu", var, n); }

double lp_norm_to_uniform(const ProbabilityDistribution& p, double order) {
  const double n = static_cast<double>(p.size());
  double acc = 0.0;
  for (double x : p) acc += std::pow(std::abs(x - 1.0 / n), order);
  return std::pow(acc, 1.0 / order);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

}  // namespace

std::string serialize(const PropertyReport& report) {
  std::string out = fmt("PROPERTY %s trials=%zu failures=%zu\n", report.property.c_str(), report.trials,
                        report.failures.size());
  for (const auto& f : report.failures) {
    out += "  FAIL " + f.input + fmt(" observed=%.17g bound=%.17g\n", f.observed, f.bound);
  }
  for (const auto& n : report.notes) out += "  NOTE " + n + "\n";
  return out;
}

Rng trial_rng(std::uint64_t seed, std::size_t trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Rng(z ^ (z >> 31));
}

PropertyReport check_schur_concavity(const std::string& name, const ClassicalMeasure& u, std::size_t n,
                                     std::size_t trials, std::uint64_t seed) {
  PropertyReport r{"schur_concavity " + name + dim_suffix("n", n), trials};
  std::uniform_int_distribution<std::size_t> steps(1, 8);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto [p, q] = random_majorized_pair(n, steps(rng), rng);
    const double up = u(p);
    const double uq = u(q);
    if (up > uq + kAlgebraTolerance) {
      r.failures.push_back({case_tag(seed, t) + " P=" + to_string(p) + " Q=" + to_string(q), up - uq,
                            kAlgebraTolerance});
    }
  }
  return r;
}

PropertyReport check_schur_concavity(const MeasureId& m, std::size_t n, std::size_t trials, std::uint64_t seed) {
  return check_schur_concavity(
      m.label(), [&m](const ProbabilityDistribution& p) { return closed_form(m, p); }, n, trials, seed);
}

PropertyReport check_faithfulness(const std::string& name, const ClassicalMeasure& u, std::size_t n,
                                  std::size_t trials, std::uint64_t seed) {
  PropertyReport r{"faithfulness " + name + dim_suffix("n", n), trials + n};
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = certain(n, k);
    const double v = u(c);
    if (std::abs(v) > kAlgebraTolerance) {
      r.failures.push_back({"certain P=" + to_string(c), v, kAlgebraTolerance});
    }
  }
  const double top = u(uniform(n));
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto p = random_sparse(n, rng);
    const double v = u(p);
    if (v < -kAlgebraTolerance) {
      r.failures.push_back({case_tag(seed, t) + " negative P=" + to_string(p), v, -kAlgebraTolerance});
    }
    if (v > top + kAlgebraTolerance) {
      r.failures.push_back({case_tag(seed, t) + " above uniform P=" + to_string(p), v, top + kAlgebraTolerance});
    }
  }
  return r;
}

PropertyReport check_faithfulness(const MeasureId& m, std::size_t n, std::size_t trials, std::uint64_t seed) {
  return check_faithfulness(
      m.label(), [&m](const ProbabilityDistribution& p) { return closed_form(m, p); }, n, trials, seed);
}

PropertyReport check_oracle_equivalence(const MeasureId& m, std::size_t n, std::size_t trials,
                                        std::uint64_t seed) {
  PropertyReport r{"oracle_equivalence " + m.label() + dim_suffix("n", n), trials};
  const auto gen = m.generator();
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto p = random_distribution(n, rng);
    const std::size_t k = index(rng);
    const double closed = closed_form(m, p);
    const double generic = gen.direction == Direction::Up ? u_up(gen.spec, p, k) : u_down(gen.spec, p, k);
    const double err = std::abs(closed - generic);
    if (!(err <= kOracleTolerance)) {
      r.failures.push_back({case_tag(seed, t) + fmt(" ref=%zu P=", k) + to_string(p), err, kOracleTolerance});
    }
  }
  return r;
}

PropertyReport check_permutation_invariance(const MeasureId& m, std::size_t n, std::size_t trials,
                                            std::uint64_t seed) {
  PropertyReport r{"permutation_invariance " + m.label() + dim_suffix("n", n), trials};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto p = random_sparse(n, rng);
    std::vector<double> shuffled(p.begin(), p.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const double err = std::abs(closed_form(m, make_distribution(shuffled)) - closed_form(m, p));
    if (!(err <= kAlgebraTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " P=" + to_string(p), err, kAlgebraTolerance});
    }
  }
  return r;
}

PropertyReport check_divergence_schur_convexity(const DivergenceSpec& spec, std::size_t n, std::size_t trials,
                                                std::uint64_t seed) {
  PropertyReport r{"divergence_schur_convexity " + spec.label() + dim_suffix("n", n), trials};
  const auto pu = uniform(n);
  std::uniform_int_distribution<std::size_t> steps(1, 8);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto [p, q] = random_majorized_pair(n, steps(rng), rng);
    const double dp = divergence(spec, p, pu);
    const double dq = divergence(spec, q, pu);
    if (dp < dq - kAlgebraTolerance) {
      r.failures.push_back({case_tag(seed, t) + " P=" + to_string(p) + " Q=" + to_string(q), dq - dp,
                            kAlgebraTolerance});
    }
  }
  return r;
}

double classical_counterpart(const QDistanceSpec& spec, const ProbabilityDistribution& p) {
  switch (spec.family) {
    case QDistanceFamily::Bures:
    case QDistanceFamily::QHellinger: return measures::hellinger(p);
    case QDistanceFamily::SchattenP:
    case QDistanceFamily::EntrywiseLp: {
      const auto n = p.size();
      return lp_norm_to_uniform(certain(n, 0), spec.order) - lp_norm_to_uniform(p, spec.order);
    }
    case QDistanceFamily::HilbertSchmidt: {
      double s = 0.0;
      for (double x : p) s += x * x;
      return 1.0 - s;
    }
    case QDistanceFamily::GenRenyi: return measures::renyi_entropy(spec.order, p);
    case QDistanceFamily::GenTsallis: return measures::tsallis(spec.order, p);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown quantum distance");
}

PropertyReport check_quantum_classical_reduction(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                                 std::uint64_t seed) {
  PropertyReport r{"quantum_classical_reduction " + spec.label() + dim_suffix("d", d), trials};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto p = random_sparse(d, rng);
    const double quantum = induced_quantum_uncertainty(spec, diagonal_state(p));
    const double err = std::abs(quantum - classical_counterpart(spec, p));
    if (!(err <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " P=" + to_string(p), err, kSpectralTolerance});
    }
  }
  return r;
}

PropertyReport check_quantum_oracle(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                    std::uint64_t seed) {
  PropertyReport r{"quantum_oracle " + spec.label() + dim_suffix("d", d), trials};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto rho = random_state(d, rng);
    const double err = std::abs(quantum_closed_form(spec, rho) - induced_quantum_uncertainty(spec, rho));
    if (!(err <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " " + matrix_tag(rho), err, kSpectralTolerance});
    }
  }
  return r;
}

PropertyReport check_unitary_invariance(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                        std::uint64_t seed) {
  PropertyReport r{"unitary_invariance " + spec.label() + dim_suffix("d", d), trials};
  const auto mixed = maximally_mixed(d);
  const auto reference = diagonal_state(certain(d, 0));
  const double constant = quantum_distance(spec, reference, mixed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto rho = random_state(d, rng);
    const auto w = random_unitary(d, rng);
    const double err = std::abs(induced_quantum_uncertainty(spec, conjugate(w, rho)) -
                                induced_quantum_uncertainty(spec, rho));
    if (!(err <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " " + matrix_tag(rho), err, kSpectralTolerance});
    }
    const double cerr = std::abs(quantum_distance(spec, conjugate(w, reference), mixed) - constant);
    if (!(cerr <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " rotated reference", cerr, kSpectralTolerance});
    }
  }
  return r;
}

PropertyReport find_unitary_violation(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                      std::uint64_t seed) {
  PropertyReport r{"unitary_violation_witness " + spec.label() + dim_suffix("d", d), trials};
  constexpr double kWitness = 1e-6;
  double worst = 0.0;
  std::string where;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto rho = random_state(d, rng);
    const auto w = random_unitary(d, rng);
    const double dev = std::abs(induced_quantum_uncertainty(spec, conjugate(w, rho)) -
                                induced_quantum_uncertainty(spec, rho));
    if (dev > worst) {
      worst = dev;
      where = case_tag(seed, t);
    }
  }
  if (worst > kWitness) {
    r.notes.push_back(fmt("largest change under rotation %.6g at ", worst) + where);
  } else {
    r.failures.push_back({"no rotation changed the value", worst, kWitness});
  }
  return r;
}

PropertyReport check_spectral_monotonicity(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                           std::uint64_t seed) {
  PropertyReport r{"spectral_monotonicity " + spec.label() + dim_suffix("d", d), trials};
  std::uniform_int_distribution<std::size_t> steps(1, 8);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto [p, q] = random_majorized_pair(d, steps(rng), rng);
    const auto rho = conjugate(random_unitary(d, rng), diagonal_state(p));
    const auto sigma = conjugate(random_unitary(d, rng), diagonal_state(q));
    const double ur = induced_quantum_uncertainty(spec, rho);
    const double us = induced_quantum_uncertainty(spec, sigma);
    if (ur > us + kSpectralTolerance) {
      r.failures.push_back({case_tag(seed, t) + " spec(rho)=" + to_string(p) + " spec(sigma)=" + to_string(q),
                            ur - us, kSpectralTolerance});
    }
  }
  return r;
}

PropertyReport check_quantum_faithfulness(const QDistanceSpec& spec, std::size_t d, std::size_t trials,
                                          std::uint64_t seed) {
  PropertyReport r{"quantum_faithfulness " + spec.label() + dim_suffix("d", d), 2 * trials};
  const double top = induced_quantum_uncertainty(spec, maximally_mixed(d));
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto pure = random_density_matrix(d, 1, rng);
    const double z = induced_quantum_uncertainty(spec, pure);
    if (!(std::abs(z) <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " pure " + matrix_tag(pure), z, kSpectralTolerance});
    }
    const auto rho = random_state(d, rng);
    const double v = induced_quantum_uncertainty(spec, rho);
    if (v > top + kSpectralTolerance || v < -kSpectralTolerance) {
      r.failures.push_back({case_tag(seed, t) + " " + matrix_tag(rho), v, top + kSpectralTolerance});
    }
  }
  return r;
}

std::vector<double> analytic_eigenvalues(const CMatrix& a) {
  if (a.dim() == 2) {
    const double x = a(0, 0).real();
    const double z = a(1, 1).real();
    const double half = 0.5 * (x - z);
    const double rad = std::sqrt(half * half + std::norm(a(0, 1)));
    const double mid = 0.5 * (x + z);
    return {mid + rad, mid - rad};
  }
  if (a.dim() == 3) {
    // Trigonometric solution of the characteristic cubic, in long double: near a
    // double root acos loses half the mantissa.
    using L = long double;
    using LC = std::complex<L>;
    auto at = [&a](std::size_t i, std::size_t j) { return LC(a(i, j).real(), a(i, j).imag()); };
    const L p1 = std::norm(at(0, 1)) + std::norm(at(0, 2)) + std::norm(at(1, 2));
    const L q = (at(0, 0).real() + at(1, 1).real() + at(2, 2).real()) / 3;
    const L d0 = at(0, 0).real() - q;
    const L d1 = at(1, 1).real() - q;
    const L d2 = at(2, 2).real() - q;
    const L p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2 * p1;
    if (p2 == 0) return {double(q), double(q), double(q)};
    const L p = std::sqrt(p2 / 6);
    LC b[3][3];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) b[i][j] = (at(i, j) - (i == j ? LC(q) : LC(0))) / p;
    }
    const LC det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                   b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                   b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const L half_det = std::clamp(det.real() / 2, L(-1), L(1));
    const L phi = std::acos(half_det) / 3;
    const L e1 = q + 2 * p * std::cos(phi);
    const L e3 = q + 2 * p * std::cos(phi + 2 * std::numbers::pi_v<L> / 3);
    return {double(e1), double(3 * q - e1 - e3), double(e3)};
  }
  throw Error(ErrorCode::InvalidDimension, "analytic eigenvalues only for d = 2 or 3");
}

PropertyReport check_eigensolver(std::size_t d, std::size_t trials, std::uint64_t seed) {
  PropertyReport r{"eigensolver" + dim_suffix("d", d), trials};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto rho = random_state(d, rng);
    const Spectrum& s = eigen_hermitian(rho);
    const double rec = reconstruction_error(rho.matrix(), s);
    if (!(rec <= kSpectralTolerance)) {
      r.failures.push_back({case_tag(seed, t) + " reconstruction " + matrix_tag(rho), rec, kSpectralTolerance});
    }
    const double ortho = max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, CMatrix::identity(d));
    if (!(ortho <= 1e-10)) {
      r.failures.push_back({case_tag(seed, t) + " orthonormality " + matrix_tag(rho), ortho, 1e-10});
    }
    const double total = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
    if (!(std::abs(total - 1.0) <= 1e-8)) {
      r.failures.push_back({case_tag(seed, t) + " eigenvalue sum " + matrix_tag(rho), total, 1.0});
    }
    if (d == 2 || d == 3) {
      const auto exact = analytic_eigenvalues(rho.matrix());
      for (std::size_t k = 0; k < d; ++k) {
        const double err = std::abs(exact[k] - s.eigenvalues[k]);
        if (!(err <= kSpectralTolerance)) {
          r.failures.push_back({case_tag(seed, t) + fmt(" analytic eigenvalue %zu ", k) + matrix_tag(rho), err,
                                kSpectralTolerance});
        }
      }
    }
  }
  return r;
}

std::vector<MeasureId> standard_measures() {
  return {MeasureId::shannon(),        MeasureId::renyi(0.3),       MeasureId::renyi(0.5),
          MeasureId::renyi(2.0),       MeasureId::renyi(5.0),       MeasureId::hartley(),
          MeasureId::bhattacharyya(),  MeasureId::min_entropy(),    MeasureId::down_renyi(0.3),
          MeasureId::down_renyi(0.7),  MeasureId::jensen_shannon(), MeasureId::tsallis(0.5),
          MeasureId::tsallis(2.0),     MeasureId::tsallis(3.0),     MeasureId::down_tsallis(0.3),
          MeasureId::down_tsallis(0.7), MeasureId::hellinger(),     MeasureId::absolute()};
}

std::vector<QDistanceSpec> standard_quantum_specs() {
  return {QDistanceSpec::bures(),        QDistanceSpec::hellinger(),       QDistanceSpec::schatten(1.0),
          QDistanceSpec::schatten(2.0),  QDistanceSpec::schatten(3.0),     QDistanceSpec::entrywise(1.0),
          QDistanceSpec::entrywise(2.0), QDistanceSpec::entrywise(3.0),    QDistanceSpec::hilbert_schmidt(),
          QDistanceSpec::gen_renyi(0.5), QDistanceSpec::gen_renyi(1.0),    QDistanceSpec::gen_renyi(2.0),
          QDistanceSpec::gen_tsallis(0.5), QDistanceSpec::gen_tsallis(2.0)};
}

std::vector<PropertyReport> run_classical_suite(const SuiteOptions& opts) {
  std::vector<PropertyReport> out;
  const std::vector<DivergenceSpec> families = {
      DivergenceSpec::kl(),           DivergenceSpec::renyi(0.0),       DivergenceSpec::renyi(0.3),
      DivergenceSpec::renyi(0.7),     DivergenceSpec::renyi(1.5),       DivergenceSpec::renyi(3.0),
      DivergenceSpec::renyi(kInf),    DivergenceSpec::jensen_shannon(), DivergenceSpec::tsallis(0.5),
      DivergenceSpec::tsallis(2.0),   DivergenceSpec::hellinger(),      DivergenceSpec::total_variation()};
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& m : standard_measures()) {
      out.push_back(check_schur_concavity(m, n, opts.classical_trials, opts.seed));
      out.push_back(check_faithfulness(m, n, opts.classical_trials, opts.seed));
      out.push_back(check_oracle_equivalence(m, n, opts.oracle_trials, opts.seed));
      out.push_back(check_permutation_invariance(m, n, opts.oracle_trials, opts.seed));
    }
    for (const auto& f : families) {
      out.push_back(check_divergence_schur_convexity(f, n, opts.oracle_trials, opts.seed));
    }
  }
  return out;
}

std::vector<PropertyReport> run_quantum_suite(const SuiteOptions& opts) {
  std::vector<PropertyReport> out;
  for (std::size_t d : {2u, 3u, 4u, 8u}) {
    for (const auto& spec : standard_quantum_specs()) {
      out.push_back(check_quantum_classical_reduction(spec, d, opts.quantum_trials, opts.seed));
      if (spec.is_spectral()) {
        out.push_back(check_quantum_oracle(spec, d, opts.quantum_trials, opts.seed));
        out.push_back(check_unitary_invariance(spec, d, opts.unitary_trials, opts.seed));
        out.push_back(check_spectral_monotonicity(spec, d, opts.quantum_trials, opts.seed));
        out.push_back(check_quantum_faithfulness(spec, d, opts.quantum_trials, opts.seed));
      } else if (spec.order == 2.0) {
        out.push_back(check_unitary_invariance(spec, d, opts.unitary_trials, opts.seed));
      } else {
        out.push_back(find_unitary_violation(spec, d, opts.unitary_trials, opts.seed));
      }
    }
  }
  for (std::size_t d : {2u, 3u, 4u, 8u, 16u}) out.push_back(check_eigensolver(d, opts.quantum_trials, opts.seed));
  return out;
}

std::vector<PropertyReport> run_errata_suite() {
  std::vector<PropertyReport> out;

  {
    PropertyReport r{"errata js_constant", 0};
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::size_t k = 0; k < 3; ++k) {
        const auto p = k == 0 ? certain(n, 0) : random_distribution(n, static_cast<std::uint64_t>(100 * n + k));
        const double naive = uncorrected::js_uncertainty(p);
        const double oracle = u_up(DivergenceSpec::jensen_shannon(), p);
        const double gap = naive - oracle;
        ++r.trials;
        if (!(std::abs(gap - 2.0 * std::log2(static_cast<double>(n))) <= kSpectralTolerance)) {
          r.failures.push_back({"P=" + to_string(p) + " gap differs from 2 log2 n", gap, 2.0 * std::log2(n)});
        }
      }
    }
    const auto c = certain(2, 0);
    r.notes.push_back(fmt("uncorrected U_JS({1,0}) = %.9f, construction = %.3g, gap = 2 log2 n",
                          uncorrected::js_uncertainty(c), u_up(DivergenceSpec::jensen_shannon(), c)));
    out.push_back(std::move(r));
  }

  {
    PropertyReport r{"errata hellinger_closed_form", 1};
    const auto p = make_distribution({0.75, 0.25});
    const double naive = uncorrected::hellinger_uncertainty(p);
    const double oracle = u_up(DivergenceSpec::hellinger(), p);
    if (!(std::abs(naive - oracle) > 0.1)) r.failures.push_back({"P=" + to_string(p), naive, oracle});
    r.notes.push_back(fmt("1 - sum p^2 at {0.75,0.25} = %.6f, construction = %.6f", naive, oracle));
    out.push_back(std::move(r));
  }

  {
    PropertyReport r{"errata down_tsallis_constant", 0};
    for (double beta : {0.3, 0.5, 0.7}) {
      for (std::size_t n = 2; n <= 6; ++n) {
        const auto c = certain(n, 0);
        const double naive = uncorrected::down_tsallis(beta, c);
        const double corrected = closed_form(MeasureId::down_tsallis(beta), c);
        ++r.trials;
        if (!(std::abs(naive - 1.0 / (1.0 - beta)) <= kAlgebraTolerance && std::abs(corrected) <= kAlgebraTolerance)) {
          r.failures.push_back({fmt("beta=%g n=%zu", beta, n), naive, 1.0 / (1.0 - beta)});
        }
      }
    }
    r.notes.push_back(fmt("uncorrected down-Tsallis(beta=0.3) at a certain distribution = %.6f = 1/(1-beta); "
                          "corrected = 0",
                          uncorrected::down_tsallis(0.3, certain(2, 0))));
    out.push_back(std::move(r));
  }

  {
    PropertyReport r{"errata down_renyi_rescaling", 0};
    for (double a : {0.3, 0.5, 0.7}) {
      const auto p = make_distribution({0.6, 0.3, 0.1});
      const double naive = uncorrected::down_renyi_rescaling(a, p);
      const double oracle = u_down(DivergenceSpec::renyi(a), p);
      const double same_index = ((1.0 - a) / a) * measures::renyi_entropy(a, p);
      const double gamma = 1.0 - a;
      const double corrected = closed_form(MeasureId::down_renyi(gamma), p);
      ++r.trials;
      if (!(naive < 0.0 && oracle > 0.0 && std::abs(corrected - oracle) <= kOracleTolerance &&
            std::abs(closed_form(MeasureId::down_renyi(a), p) - same_index) <= kAlgebraTolerance)) {
        r.failures.push_back({fmt("alpha=%g P=", a) + to_string(p), naive, oracle});
      }
    }
    r.notes.push_back("((alpha-1)/alpha) H_alpha is negative on (0,1); the same-index relation "
                      "U_down_gamma = ((1-gamma)/gamma) H_gamma holds");
    out.push_back(std::move(r));
  }

  {
    PropertyReport r{"errata bures_constant", 0};
    for (std::size_t d : {2u, 3u, 4u}) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        const auto rho = random_density_matrix(d, d, s);
        const double naive = uncorrected::bures_uncertainty(rho);
        const double oracle = induced_quantum_uncertainty(QDistanceSpec::bures(), rho);
        ++r.trials;
        if (!(std::abs(oracle - 2.0 * naive) <= kSpectralTolerance && oracle > kSpectralTolerance)) {
          r.failures.push_back({fmt("d=%zu seed=%llu", d, static_cast<unsigned long long>(s)), naive, oracle});
        }
      }
    }
    r.notes.push_back("(1/sqrt d)(Tr sqrt rho - 1) is half of the induced Bures/Hellinger uncertainty");
    out.push_back(std::move(r));
  }

  {
    PropertyReport r{"errata gen_tsallis_sign", 0};
    for (double beta : {1.5, 2.0, 3.0}) {
      for (std::size_t d : {2u, 3u}) {
        const auto pure = diagonal_state(certain(d, 0));
        const auto mixed = maximally_mixed(d);
        const double naive = uncorrected::gen_tsallis_distance(beta, pure, mixed);
        const double corrected = quantum_distance(QDistanceSpec::gen_tsallis(beta), pure, mixed);
        const double expected = (std::pow(static_cast<double>(d), beta - 1.0) - 1.0) / (beta - 1.0);
        ++r.trials;
        if (!(naive < 0.0 && std::abs(corrected - expected) <= kSpectralTolerance)) {
          r.failures.push_back({fmt("beta=%g d=%zu", beta, d), naive, expected});
        }
      }
    }
    r.notes.push_back(fmt("prefactor 1/(1-beta) gives D(pure || I/2) = %.6f at beta=2",
                          uncorrected::gen_tsallis_distance(2.0, diagonal_state(certain(2, 0)), maximally_mixed(2))));
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace unc::verify
