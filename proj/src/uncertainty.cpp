#include "unc/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "unc/error.hpp"

namespace unc {

namespace {

double reference_term(const DivergenceSpec& spec, const ProbabilityDistribution& a,
                      const ProbabilityDistribution& b) {
  const DivergenceValue d = divergence(spec, a, b);
  if (!d.is_finite()) {
    throw Error(ErrorCode::InfiniteReference, spec.label() + " diverges between certain and uniform");
  }
  return d.value();
}

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s order %g outside (0, 1)", what, x);
    throw Error(ErrorCode::UnsupportedOrder, buf);
  }
}

// sum over supp(p) of p^a
double power_sum(double a, const ProbabilityDistribution& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, a);
  }
  return s;
}

}  // namespace

double u_up(const DivergenceSpec& spec, const ProbabilityDistribution& p, std::size_t reference_index) {
  const auto n = p.size();
  const auto pu = uniform(n);
  const double constant = reference_term(spec, certain(n, reference_index), pu);
  return constant - divergence(spec, p, pu).value();
}

double u_down(const DivergenceSpec& spec, const ProbabilityDistribution& p, std::size_t reference_index) {
  if (spec.family == DivergenceFamily::Renyi) require_open_unit(spec.alpha, "Renyi");
  if (spec.family == DivergenceFamily::Tsallis) require_open_unit(spec.beta, "Tsallis");
  const auto n = p.size();
  const auto pu = uniform(n);
  const double constant = reference_term(spec, pu, certain(n, reference_index));
  return constant - divergence(spec, pu, p).value();
}

double induced_uncertainty(const DivergenceSpec& spec, Direction dir, const ProbabilityDistribution& p) {
  return dir == Direction::Up ? u_up(spec, p) : u_down(spec, p);
}

MeasureId MeasureId::renyi(double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) throw Error(ErrorCode::NegativeOrder, "Renyi order must be >= 0");
  return MeasureId(MeasureKind::Renyi, alpha);
}

MeasureId MeasureId::down_renyi(double gamma) {
  require_open_unit(gamma, "DownRenyi");
  return MeasureId(MeasureKind::DownRenyi, gamma);
}

MeasureId MeasureId::tsallis(double beta) {
  if (std::isnan(beta) || beta < 0.0) throw Error(ErrorCode::NegativeOrder, "Tsallis order must be >= 0");
  if (std::isinf(beta)) throw Error(ErrorCode::UnsupportedOrder, "Tsallis order must be finite");
  return MeasureId(MeasureKind::TsallisU, beta);
}

MeasureId MeasureId::down_tsallis(double beta) {
  require_open_unit(beta, "DownTsallis");
  return MeasureId(MeasureKind::DownTsallis, beta);
}

MeasureGenerator MeasureId::generator() const {
  switch (kind_) {
    case MeasureKind::Shannon: return {DivergenceSpec::kl(), Direction::Up};
    case MeasureKind::Renyi: return {DivergenceSpec::renyi(param_), Direction::Up};
    case MeasureKind::Hartley: return {DivergenceSpec::renyi(0.0), Direction::Up};
    case MeasureKind::Bhattacharyya: return {DivergenceSpec::renyi(0.5), Direction::Up};
    case MeasureKind::MinEntropy: return {DivergenceSpec::renyi(kInf), Direction::Up};
    case MeasureKind::DownRenyi: return {DivergenceSpec::renyi(1.0 - param_), Direction::Down};
    case MeasureKind::JensenShannonU: return {DivergenceSpec::jensen_shannon(), Direction::Up};
    case MeasureKind::TsallisU: return {DivergenceSpec::tsallis(param_), Direction::Up};
    case MeasureKind::DownTsallis: return {DivergenceSpec::tsallis(param_), Direction::Down};
    case MeasureKind::HellingerU: return {DivergenceSpec::hellinger(), Direction::Up};
    case MeasureKind::AbsoluteU: return {DivergenceSpec::total_variation(), Direction::Up};
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown measure");
}

std::string MeasureId::label() const {
  char buf[64];
  switch (kind_) {
    case MeasureKind::Shannon: return "Shannon";
    case MeasureKind::Renyi:
      std::snprintf(buf, sizeof buf, "Renyi(alpha=%g)", param_);
      return buf;
    case MeasureKind::Hartley: return "Hartley";
    case MeasureKind::Bhattacharyya: return "Bhattacharyya";
    case MeasureKind::MinEntropy: return "MinEntropy";
    case MeasureKind::DownRenyi:
      std::snprintf(buf, sizeof buf, "DownRenyi(gamma=%g)", param_);
      return buf;
    case MeasureKind::JensenShannonU: return "JensenShannonU";
    case MeasureKind::TsallisU:
      std::snprintf(buf, sizeof buf, "TsallisU(beta=%g)", param_);
      return buf;
    case MeasureKind::DownTsallis:
      std::snprintf(buf, sizeof buf, "DownTsallis(beta=%g)", param_);
      return buf;
    case MeasureKind::HellingerU: return "HellingerU";
    case MeasureKind::AbsoluteU: return "AbsoluteU";
  }
  return "?";
}

double closed_form(const MeasureId& m, const ProbabilityDistribution& p) {
  switch (m.kind()) {
    case MeasureKind::Shannon: return measures::shannon(p);
    case MeasureKind::Renyi: return measures::renyi_entropy(m.param(), p);
    case MeasureKind::Hartley: return measures::hartley(p);
    case MeasureKind::Bhattacharyya: return measures::bhattacharyya(p);
    case MeasureKind::MinEntropy: return measures::min_entropy(p);
    case MeasureKind::DownRenyi: return measures::down_renyi(m.param(), p);
    case MeasureKind::JensenShannonU: return measures::jensen_shannon(p);
    case MeasureKind::TsallisU: return measures::tsallis(m.param(), p);
    case MeasureKind::DownTsallis: return measures::down_tsallis(m.param(), p);
    case MeasureKind::HellingerU: return measures::hellinger(p);
    case MeasureKind::AbsoluteU: return measures::absolute(p);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown measure");
}

double max_value(const MeasureId& m, std::size_t n) { return closed_form(m, uniform(n)); }

namespace measures {

double shannon(const ProbabilityDistribution& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double renyi_entropy(double alpha, const ProbabilityDistribution& p) {
  if (std::isnan(alpha) || alpha < 0.0) throw Error(ErrorCode::NegativeOrder, "Renyi order must be >= 0");
  if (alpha == 0.0) return hartley(p);
  if (alpha == 1.0) return shannon(p);
  if (std::isinf(alpha)) return min_entropy(p);
  return std::log2(power_sum(alpha, p)) / (1.0 - alpha);
}

double hartley(const ProbabilityDistribution& p) {
  const auto support = std::count_if(p.begin(), p.end(), [](double x) { return x > kSupportThreshold; });
  return std::log2(static_cast<double>(support));
}

double bhattacharyya(const ProbabilityDistribution& p) {
  double s = 0.0;
  for (double x : p) s += std::sqrt(x);
  return 2.0 * std::log2(s);
}

double min_entropy(const ProbabilityDistribution& p) {
  return -std::log2(*std::max_element(p.begin(), p.end()));
}

double down_renyi(double gamma, const ProbabilityDistribution& p) {
  require_open_unit(gamma, "DownRenyi");
  return std::log2(power_sum(gamma, p)) / gamma;
}

double jensen_shannon(const ProbabilityDistribution& p) {
  const double n = static_cast<double>(p.size());
  double tail = 0.0;
  for (double x : p) {
    const double t = n * x + 1.0;
    tail += t * std::log2(t);
  }
  return -((n + 1.0) / n) * std::log2(n + 1.0) + shannon(p) + tail / n;
}

double tsallis(double beta, const ProbabilityDistribution& p) {
  if (std::isnan(beta) || beta < 0.0) throw Error(ErrorCode::NegativeOrder, "Tsallis order must be >= 0");
  // The beta -> 1 divergence is KL in bits, so the induced measure is Shannon in bits.
  if (beta == 1.0) return shannon(p);
  const double n = static_cast<double>(p.size());
  return std::pow(n, beta - 1.0) * (1.0 - power_sum(beta, p)) / (beta - 1.0);
}

double down_tsallis(double beta, const ProbabilityDistribution& p) {
  require_open_unit(beta, "DownTsallis");
  const double n = static_cast<double>(p.size());
  return std::pow(n, -beta) * (1.0 - power_sum(1.0 - beta, p)) / (beta - 1.0);
}

double hellinger(const ProbabilityDistribution& p) {
  const double n = static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) s += std::sqrt(x);
  return (2.0 / std::sqrt(n)) * (s - 1.0);
}

double absolute(const ProbabilityDistribution& p) {
  const double n = static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) s += std::abs(1.0 / n - x);
  return 1.0 - 1.0 / n - 0.5 * s;
}

}  // namespace measures

}  // namespace unc
