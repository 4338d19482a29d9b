#ifndef COVERR_INTERVALS_HPP
#define COVERR_INTERVALS_HPP

#include <cstdint>
#include <span>

#include "coverr/types.hpp"

// Sample statistics and the two confidence-interval constructions under
// study: Student's t interval (unbiased variance, t quantile) and the "Norm"
// interval (MLE variance, Gaussian quantile).

namespace coverr::intervals {

struct SampleStats {
  std::int64_t n;
  double mean;        // sample mean
  double s2;          // unbiased variance (divisor n-1)
  double sigma2_mle;  // MLE variance; equals s2*(n-1)/n exactly
};

/// Single-pass shifted moment accumulation (shift = first element).
/// Rejects n < 2 and non-finite data.
SampleStats sample_stats(std::span<const double> data);

struct Interval {
  double lo;
  double hi;
  IntervalKind kind;
  double alpha;

  bool degenerate() const { return lo == hi; }
};

/// mean +- t_quantile(1-alpha, n-1) * sqrt(s2/n).
Interval t_interval(const SampleStats& stats, Probability alpha);

/// mean +- norm_quantile(1-alpha) * sqrt(sigma2_mle/n).
Interval norm_interval(const SampleStats& stats, Probability alpha);

/// Closed-interval membership; boundary ties count as covered.
bool covers(const Interval& iv, double mu);

namespace detail {

// Hot-path builders taking a precomputed quantile; the public constructors
// and the Monte Carlo engine both route through these so the arithmetic is
// shared.
Interval t_interval_pre(const SampleStats& stats, double t_quant, double alpha);
Interval norm_interval_pre(const SampleStats& stats, double z_quant, double alpha);

// Moment reduction without the finiteness validation (the MC engine feeds
// kernel-generated data that is finite by construction).
SampleStats sample_stats_unchecked(std::span<const double> data);

}  // namespace detail

}  // namespace coverr::intervals

#endif  // COVERR_INTERVALS_HPP
