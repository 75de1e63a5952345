#include "heckepairs/plancherel.hpp"

#include <algorithm>
#include <cmath>

#include "heckepairs/bounds.hpp"
#include "heckepairs/errors.hpp"
#include "heckepairs/polynomial.hpp"

namespace heckepairs {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::uint64_t splitmix_u64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double splitmix_unit(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix_u64(seed, index) >> 11) * 0x1.0p-53;
}

double PlancherelSampler::raw_density(double theta) const {
  const double s = std::sin(theta), c = std::cos(theta);
  const double rtp = std::sqrt(static_cast<double>(p_));
  const double denom = (rtp + 1.0 / rtp) * (rtp + 1.0 / rtp) - 4.0 * c * c;
  return (2.0 / kPi) * s * s * (p_ + 1.0) / denom;
}

double PlancherelSampler::density(double theta) const {
  if (theta < 0.0 || theta > kPi) return 0.0;
  return raw_density(theta) / mass_;
}

double PlancherelSampler::density_moment(int m) const {
  if (m < 0) throw invalid_argument("density_moment: order must be nonnegative");
  // Composite Simpson over 2^15 uniform intervals; the integrand is smooth.
  const int n = 1 << 15;
  const double h = kPi / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = h * i;
    const double g = (m == 0) ? 1.0 : 2.0 * std::cos(m * t);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * g * raw_density(t);
  }
  return acc * h / 3.0 / mass_;
}

PlancherelSampler::PlancherelSampler(long p, std::uint64_t seed) : p_(p), seed_(seed) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw invalid_argument("PlancherelSampler: p must be prime");

  mass_ = 1.0;
  const double raw_mass = density_moment(0);
  if (std::fabs(raw_mass - 1.0) > 1e-6)
    throw consistency_error("PlancherelSampler: density mass deviates from 1");
  mass_ = raw_mass;

  // theta grid: uniform base plus geometric refinement toward 0 and pi.
  std::vector<double> nodes;
  const int base = 1 << 14;
  nodes.reserve(static_cast<size_t>(base) + 200);
  for (int i = 0; i <= base; ++i) nodes.push_back(kPi * i / base);
  double step = kPi / base;
  for (int j = 0; j < 96 && step > 1e-12; ++j, step *= 0.75) {
    nodes.push_back(step);
    nodes.push_back(kPi - step);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  // Trapezoid CDF, then normalize so F spans exactly [0, 1].
  std::vector<double> cdf(nodes.size(), 0.0);
  for (size_t i = 1; i < nodes.size(); ++i) {
    const double h = nodes[i] - nodes[i - 1];
    cdf[i] = cdf[i - 1] + 0.5 * h * (raw_density(nodes[i]) + raw_density(nodes[i - 1]));
  }
  const double total = cdf.back();
  for (auto& v : cdf) v /= total;

  // Keep strictly increasing F only (flat tail segments carry no mass).
  f_.clear();
  theta_.clear();
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!f_.empty() && !(cdf[i] > f_.back())) continue;
    f_.push_back(cdf[i]);
    theta_.push_back(nodes[i]);
  }
  if (f_.front() != 0.0) { f_.insert(f_.begin(), 0.0); theta_.insert(theta_.begin(), 0.0); }
  f_.back() = 1.0;
  theta_.back() = kPi;

  // Fritsch-Carlson monotone cubic tangents for theta as a function of F.
  const size_t n = f_.size();
  std::vector<double> d(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) d[i] = (theta_[i + 1] - theta_[i]) / (f_[i + 1] - f_[i]);
  slope_.assign(n, 0.0);
  slope_[0] = d[0];
  slope_[n - 1] = d[n - 2];
  for (size_t i = 1; i + 1 < n; ++i) slope_[i] = 0.5 * (d[i - 1] + d[i]);
  for (size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      slope_[i] = slope_[i + 1] = 0.0;
      continue;
    }
    const double alpha = slope_[i] / d[i], beta = slope_[i + 1] / d[i];
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      slope_[i] = tau * alpha * d[i];
      slope_[i + 1] = tau * beta * d[i];
    }
  }
}

double PlancherelSampler::inverse_cdf(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return kPi;
  const size_t hi =
      static_cast<size_t>(std::upper_bound(f_.begin(), f_.end(), u) - f_.begin());
  const size_t i = hi - 1;
  const double h = f_[i + 1] - f_[i];
  const double t = (u - f_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * theta_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
         (-2 * t3 + 3 * t2) * theta_[i + 1] + (t3 - t2) * h * slope_[i + 1];
}

std::vector<double> PlancherelSampler::sample(std::size_t count,
                                              std::uint64_t counter_start) const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = inverse_cdf(splitmix_unit(seed_, counter_start + i));
  return out;
}

ScalingResult deviation_scaling(long p, const std::vector<long>& dims, int trials,
                                int m, std::uint64_t seed) {
  if (dims.empty()) throw invalid_argument("deviation_scaling: dims must be nonempty");
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 10) throw invalid_argument("deviation_scaling: each dim must be >= 10");
    if (i > 0 && dims[i] <= dims[i - 1])
      throw invalid_argument("deviation_scaling: dims must be strictly increasing");
  }
  if (trials < 100) throw invalid_argument("deviation_scaling: need at least 100 trials");
  if (m < 1) throw invalid_argument("deviation_scaling: m must be positive");

  const double cm = c_coeff(p, m).get_d();
  ScalingResult res;
  res.deviations.resize(dims.size());
  for (size_t di = 0; di < dims.size(); ++di) {
    const long dim = dims[di];
    double sq = 0.0;
    res.deviations[di].resize(static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t derived =
          splitmix_u64(seed, static_cast<std::uint64_t>(di) * trials + t);
      PlancherelSampler sampler(p, derived);
      double acc = 0.0;
      for (double theta : sampler.sample(static_cast<size_t>(dim)))
        acc += 2.0 * std::cos(m * theta);
      const double dev = std::fabs(acc - cm * dim);
      res.deviations[di][static_cast<size_t>(t)] = dev;
      sq += dev * dev;
    }
    res.per_dim.push_back({dim, std::sqrt(sq / trials)});
  }

  const size_t n = dims.size();
  double xbar = 0.0, ybar = 0.0;
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = std::log(static_cast<double>(dims[i]));
    ys[i] = std::log(res.per_dim[i].rms);
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  res.slope = sxy / sxx;
  if (n > 2) {
    double rss = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double r = ys[i] - ybar - res.slope * (xs[i] - xbar);
      rss += r * r;
    }
    res.stderr_slope = std::sqrt(rss / (n - 2) / sxx);
  }
  return res;
}

}  // namespace heckepairs
