#ifndef COVERR_DISTRIBUTIONS_HPP
#define COVERR_DISTRIBUTIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coverr/types.hpp"

// Sampling families with closed-form mean, standard deviation, skewness and
// excess kurtosis.  All sampling is inverse-CDF on the SplitMix64 counter
// generator, so the draw sequence is a pure function of
// (family parameters, master seed, stream index) and is independent of how
// the work is partitioned.

namespace coverr::distributions {

enum class Family { Normal, Exponential, Gamma, Uniform, Lognormal };

struct DistributionSpec {
  Family family;
  double p0;        // Normal: mu, Exponential/Gamma: rate, Uniform: a, Lognormal: mu_log
  double p1;        // Normal: sigma, Uniform: b, Lognormal: sigma_log (unused otherwise)
  int shape;        // Gamma only: integer shape k >= 1
  double mean;
  double sd;
  MomentProfile moments;

  static DistributionSpec normal(double mu, double sigma);
  static DistributionSpec exponential(double rate);
  static DistributionSpec gamma_int(int shape, double rate);
  static DistributionSpec uniform(double a, double b);
  static DistributionSpec lognormal(double mu_log, double sigma_log);

  std::string family_name() const;   // lowercase, as used by the CLI
  std::string params_label() const;  // e.g. "rate=1" or "mu=0;sigma=1"

  // Substream counters consumed per draw (gamma uses `shape`, others 1).
  std::uint64_t counters_per_draw() const;
};

/// A reproducible substream: distinct stream_index values under one
/// master_seed give statistically independent streams.
struct RandomStream {
  std::uint64_t master_seed;
  std::uint64_t stream_index;
};

/// Fills `out` with draws; deterministic in (spec, stream), independent of
/// prior calls.
void sample_into(const DistributionSpec& spec, RandomStream stream,
                 std::span<double> out);

std::vector<double> sample(const DistributionSpec& spec, RandomStream stream,
                           std::size_t count);

}  // namespace coverr::distributions

#endif  // COVERR_DISTRIBUTIONS_HPP
