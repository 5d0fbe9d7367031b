#include "unc/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

#include "unc/error.hpp"

namespace unc {

namespace {

std::vector<double> sorted_descending(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ProbabilityDistribution make_distribution(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::Empty, "distribution has no entries");

  std::vector<double> probs(values.begin(), values.end());
  for (double& v : probs) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NotNormalized, "non-finite entry");
    if (v < -kNegativeTolerance) {
      throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(v) + " is negative");
    }
    v = std::max(v, 0.0);
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "entries sum to %.17g", total);
    throw Error(ErrorCode::NotNormalized, buf);
  }
  for (double& v : probs) v /= total;
  return ProbabilityDistribution(std::move(probs));
}

ProbabilityDistribution uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidDimension, "uniform distribution needs n >= 1");
  const std::vector<double> v(n, 1.0 / static_cast<double>(n));
  return make_distribution(v);
}

ProbabilityDistribution certain(std::size_t n, std::size_t index) {
  if (n == 0) throw Error(ErrorCode::InvalidDimension, "certain distribution needs n >= 1");
  if (index >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(index) + " not below n = " + std::to_string(n));
  }
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return make_distribution(v);
}

bool majorizes(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "majorization compares equal-length distributions");
  }
  const auto ps = sorted_descending(p.probs());
  const auto qs = sorted_descending(q.probs());
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    sp += ps[k];
    sq += qs[k];
    if (sp < sq - kMajorizationTolerance) return false;
  }
  return true;
}

ProbabilityDistribution random_distribution(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::InvalidDimension, "random distribution needs n >= 1");
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  // A zero total needs every draw to underflow; redraw rather than divide by it.
  do {
    for (double& x : v) x = exp1(rng);
    total = std::accumulate(v.begin(), v.end(), 0.0);
  } while (total <= 0.0);
  for (double& x : v) x /= total;
  return make_distribution(v);
}

ProbabilityDistribution random_distribution(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_distribution(n, rng);
}

std::pair<ProbabilityDistribution, ProbabilityDistribution>
random_majorized_pair(std::size_t n, std::size_t steps, Rng& rng) {
  if (n < 2) throw Error(ErrorCode::InvalidDimension, "majorized pairs need n >= 2");
  if (steps == 0) throw Error(ErrorCode::InvalidDimension, "majorized pairs need steps >= 1");

  std::uniform_int_distribution<std::size_t> support_size(1, n);
  const std::size_t k = support_size(rng);
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  const auto core = random_distribution(k, rng);
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) p[slots[i]] = core[i];

  std::vector<double> q = p;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    if (q[i] < q[j]) std::swap(i, j);
    const double moved = fraction(rng) * (q[i] - q[j]) / 2.0;
    q[i] -= moved;
    q[j] += moved;
  }
  return {make_distribution(p), make_distribution(q)};
}

std::pair<ProbabilityDistribution, ProbabilityDistribution>
random_majorized_pair(std::size_t n, std::size_t steps, std::uint64_t seed) {
  Rng rng(seed);
  return random_majorized_pair(n, steps, rng);
}

ProbabilityDistribution parse_distribution(std::string_view csv) {
  if (trim(csv).empty()) throw Error(ErrorCode::Empty, "distribution has no entries");
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    values.push_back(parse_real(csv.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_distribution(values);
}

ProbabilityDistribution read_distribution(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    values.push_back(parse_real(t));
  }
  return make_distribution(values);
}

std::string to_string(const ProbabilityDistribution& p) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    if (i) out += ',';
    out += buf;
  }
  return out;
}

}  // namespace unc
