#pragma once

#include <cstdint>
#include <vector>

namespace heckepairs {

// SplitMix64 in counter mode: a pure function of (seed, index), so streams
// are reproducible regardless of evaluation order.
std::uint64_t splitmix_u64(std::uint64_t seed, std::uint64_t index);
double splitmix_unit(std::uint64_t seed, std::uint64_t index);  // in [0, 1)

// Sampler for the p-adic Plancherel (p-Sato-Tate) measure on [0, pi] with
// density w_p(t) = (2/pi) sin^2(t) (p+1) / ((p^{1/2} + p^{-1/2})^2 - 4cos^2(t)),
// whose 2cos(mt)-moments are c_m.  Draws use inverse-CDF lookup on a
// monotone-cubic table refined geometrically near the endpoints where the
// density vanishes quadratically.
class PlancherelSampler {
 public:
  PlancherelSampler(long p, std::uint64_t seed);

  long p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  double density(double theta) const;  // renormalized to unit mass
  double mass() const { return mass_; }
  // m = 0 integrates the constant 1 (the mass); m >= 1 integrates 2cos(m t).
  double density_moment(int m) const;

  std::vector<double> sample(std::size_t count, std::uint64_t counter_start = 0) const;

 private:
  double raw_density(double theta) const;
  double inverse_cdf(double u) const;

  long p_;
  std::uint64_t seed_;
  double mass_ = 1.0;
  std::vector<double> f_, theta_, slope_;  // monotone cubic data for theta(F)
};

struct ScalingResult {
  double slope = 0.0;
  double stderr_slope = 0.0;
  struct PerDim {
    long dim = 0;
    double rms = 0.0;
  };
  std::vector<PerDim> per_dim;
  std::vector<std::vector<double>> deviations;  // [dim index][trial]
};

// For each D in dims runs `trials` ensembles of D draws, records the
// root-mean-square of |sum 2cos(m theta) - c_m D|, and fits log(rms) against
// log(D) by least squares.  Ensemble (i, t) uses the derived seed
// splitmix_u64(seed, i*trials + t).
ScalingResult deviation_scaling(long p, const std::vector<long>& dims, int trials,
                                int m, std::uint64_t seed);

}  // namespace heckepairs
