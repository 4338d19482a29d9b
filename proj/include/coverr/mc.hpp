#ifndef COVERR_MC_HPP
#define COVERR_MC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coverr/distributions.hpp"
#include "coverr/types.hpp"

// Deterministic, parallel Monte Carlo measurement of empirical interval
// coverage.  Replicate r draws its sample from substream r of the master
// seed, so results are a pure function of the configuration and independent
// of the worker count; both interval kinds are evaluated on the same draws,
// making the t-vs-Norm comparison paired.

namespace coverr::mc {

struct SimulationConfig {
  distributions::DistributionSpec spec;
  std::int64_t n;           // sample size per replicate, >= 2
  Probability alpha;        // one-sided level, < 0.5
  std::int64_t reps;        // >= 1000
  std::uint64_t master_seed;
  int workers;              // >= 1
  bool run_student_t = true;
  bool run_norm = true;

  void validate() const;
};

struct CoverageResult {
  IntervalKind kind;
  double coverage;               // covered / reps
  double se;                     // sqrt(coverage*(1-coverage)/reps)
  double scaled_error;           // n * (coverage - (1 - 2*alpha))
  double scaled_se;              // n * se
  double predicted_scaled_error; // n * two_sided_error(alpha, n, moments, kind)
  std::int64_t reps;
};

/// Disjoint, covering, contiguous replicate ranges; at most `workers` of
/// them and never an empty one.
std::vector<std::pair<std::int64_t, std::int64_t>> worker_partition(
    std::int64_t reps, int workers);

/// Runs the simulation; one result per requested kind (StudentT first).
std::vector<CoverageResult> run(const SimulationConfig& config);

struct ComparePolicy {
  double z_max = 3.0;  // acceptance band in scaled standard errors
  double slack = 0.3;  // absolute allowance for the O(n^{-3/2}) remainder
};

struct Verdict {
  double z_score;  // (scaled_error - predicted) / scaled_se
  double band;     // z_max * scaled_se + slack
  bool pass;       // |scaled_error - predicted| <= band
};

Verdict compare(const CoverageResult& result, ComparePolicy policy = {});

}  // namespace coverr::mc

#endif  // COVERR_MC_HPP
