#include "unc/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "unc/error.hpp"

namespace unc {

namespace {

constexpr double kResidueTolerance = 1e-9;

void require_same_size(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "distributions of length " + std::to_string(p.size()) +
                                                  " and " + std::to_string(q.size()));
  }
}

void require_order(double order, const char* what) {
  if (std::isnan(order) || order < 0.0) {
    throw Error(ErrorCode::NegativeOrder, std::string(what) + " order must be >= 0");
  }
}

// sum_i p_i log2(p_i / q_i) over the support of p.
double kl_sum(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    s += p[i] * std::log2(p[i] / q[i]);
  }
  return s;
}

// sum over supp(p) of p^a q^(1-a); +inf when a > 1 meets q_i = 0 < p_i.
double power_sum(double a, std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      if (a > 1.0) return kInf;
      continue;
    }
    s += std::pow(p[i], a) * std::pow(q[i], 1.0 - a);
  }
  return s;
}

}  // namespace

DivergenceValue::DivergenceValue(double v) {
  if (std::isnan(v)) throw std::domain_error("divergence evaluated to NaN");
  if (v < -kResidueTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "divergence evaluated to %.17g", v);
    throw std::domain_error(buf);
  }
  value_ = std::max(v, 0.0);
}

DivergenceSpec DivergenceSpec::kl() { return {DivergenceFamily::KL}; }

DivergenceSpec DivergenceSpec::renyi(double alpha) {
  require_order(alpha, "Renyi");
  DivergenceSpec s{DivergenceFamily::Renyi};
  s.alpha = alpha;
  return s;
}

DivergenceSpec DivergenceSpec::jensen_shannon() { return {DivergenceFamily::JensenShannon}; }

DivergenceSpec DivergenceSpec::tsallis(double beta) {
  require_order(beta, "Tsallis");
  if (std::isinf(beta)) throw Error(ErrorCode::UnsupportedOrder, "Tsallis order must be finite");
  DivergenceSpec s{DivergenceFamily::Tsallis};
  s.beta = beta;
  return s;
}

DivergenceSpec DivergenceSpec::hellinger() { return {DivergenceFamily::Hellinger}; }

DivergenceSpec DivergenceSpec::total_variation() { return {DivergenceFamily::TotalVariation}; }

DivergenceSpec DivergenceSpec::generic_f(ConvexGenerator g) {
  if (!g.f) throw Error(ErrorCode::GeneratorNotNormalized, "generator has no function");
  const double at_one = g.f(1.0);
  if (!(std::abs(at_one) <= 1e-12)) {
    throw Error(ErrorCode::GeneratorNotNormalized, "f(1) != 0 for generator " + g.name);
  }
  DivergenceSpec s{DivergenceFamily::GenericF};
  s.generator = std::move(g);
  return s;
}

std::string DivergenceSpec::label() const {
  char buf[64];
  switch (family) {
    case DivergenceFamily::KL: return "KL";
    case DivergenceFamily::Renyi:
      std::snprintf(buf, sizeof buf, "Renyi(alpha=%g)", alpha);
      return buf;
    case DivergenceFamily::JensenShannon: return "JensenShannon";
    case DivergenceFamily::Tsallis:
      std::snprintf(buf, sizeof buf, "Tsallis(beta=%g)", beta);
      return buf;
    case DivergenceFamily::Hellinger: return "Hellinger";
    case DivergenceFamily::TotalVariation: return "TotalVariation";
    case DivergenceFamily::GenericF: return "f[" + (generator ? generator->name : std::string("?")) + "]";
  }
  return "?";
}

DivergenceValue kl(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  const double s = kl_sum(p.probs(), q.probs());
  return s == kInf ? DivergenceValue::infinity() : DivergenceValue(s);
}

DivergenceValue renyi(double alpha, const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  require_order(alpha, "Renyi");
  if (alpha == 1.0) return kl(p, q);

  if (alpha == 0.0) {
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) mass += q[i];
    }
    return mass <= 0.0 ? DivergenceValue::infinity() : DivergenceValue(-std::log2(mass));
  }

  if (std::isinf(alpha)) {
    double ratio = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0) continue;
      if (q[i] <= 0.0) return DivergenceValue::infinity();
      ratio = std::max(ratio, p[i] / q[i]);
    }
    return DivergenceValue(std::log2(ratio));
  }

  const double s = power_sum(alpha, p.probs(), q.probs());
  if (s == kInf || s <= 0.0) return DivergenceValue::infinity();
  return DivergenceValue(std::log2(s) / (alpha - 1.0));
}

DivergenceValue jensen_shannon(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  std::vector<double> mid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mid[i] = 0.5 * (p[i] + q[i]);
  return DivergenceValue(kl_sum(p.probs(), mid) + kl_sum(q.probs(), mid));
}

DivergenceValue tsallis(double beta, const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  require_order(beta, "Tsallis");
  if (beta == 1.0) return kl(p, q);
  const double s = power_sum(beta, p.probs(), q.probs());
  if (s == kInf) return DivergenceValue::infinity();
  return DivergenceValue((s - 1.0) / (beta - 1.0));
}

DivergenceValue hellinger(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    s += d * d;
  }
  return DivergenceValue(s);
}

DivergenceValue total_variation(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  require_same_size(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return DivergenceValue(0.5 * s);
}

DivergenceValue f_divergence(const ConvexGenerator& g, const ProbabilityDistribution& p,
                             const ProbabilityDistribution& q) {
  require_same_size(p, q);
  if (!g.f || !(std::abs(g.f(1.0)) <= 1e-12)) {
    throw Error(ErrorCode::GeneratorNotNormalized, "f(1) != 0 for generator " + g.name);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] > 0.0) {
      s += q[i] * g.f(p[i] / q[i]);
    } else if (p[i] > 0.0) {
      if (g.slope_at_infinity == kInf) return DivergenceValue::infinity();
      s += p[i] * g.slope_at_infinity;
    }
  }
  return DivergenceValue(s);
}

DivergenceValue divergence(const DivergenceSpec& spec, const ProbabilityDistribution& p,
                           const ProbabilityDistribution& q) {
  switch (spec.family) {
    case DivergenceFamily::KL: return kl(p, q);
    case DivergenceFamily::Renyi: return renyi(spec.alpha, p, q);
    case DivergenceFamily::JensenShannon: return jensen_shannon(p, q);
    case DivergenceFamily::Tsallis: return tsallis(spec.beta, p, q);
    case DivergenceFamily::Hellinger: return hellinger(p, q);
    case DivergenceFamily::TotalVariation: return total_variation(p, q);
    case DivergenceFamily::GenericF:
      if (!spec.generator) throw Error(ErrorCode::GeneratorNotNormalized, "GenericF without generator");
      return f_divergence(*spec.generator, p, q);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown divergence family");
}

namespace generators {

ConvexGenerator kl() {
  return {"t*log2(t)", [](double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }, kInf};
}

ConvexGenerator total_variation() {
  return {"|t-1|/2", [](double t) { return 0.5 * std::abs(t - 1.0); }, 0.5};
}

ConvexGenerator hellinger() {
  return {"(sqrt(t)-1)^2",
          [](double t) {
            const double d = std::sqrt(t) - 1.0;
            return d * d;
          },
          1.0};
}

}  // namespace generators

}  // namespace unc
