#include "coverr/intervals.hpp"

#include <cmath>
#include <stdexcept>

#include "coverr/kern/kernels.hpp"
#include "coverr/specfun.hpp"

namespace coverr::intervals {

namespace detail {

SampleStats sample_stats_unchecked(std::span<const double> data) {
  const std::int64_t n = static_cast<std::int64_t>(data.size());
  const double shift = data[0];
  double sum = 0.0;
  double sumsq = 0.0;
  kern::active_kernels().shifted_moments(data.data(), data.size(), shift, &sum, &sumsq);
  const double dn = static_cast<double>(n);
  double mean = shift + sum / dn;
  double s2 = (sumsq - sum * (sum / dn)) / (dn - 1.0);
  if (s2 < 0.0) s2 = 0.0;  // rounding guard; exact zero for constant data
  double sigma2_mle = s2 * (dn - 1.0) / dn;
  return SampleStats{n, mean, s2, sigma2_mle};
}

Interval t_interval_pre(const SampleStats& stats, double t_quant, double alpha) {
  double half = t_quant * std::sqrt(stats.s2 / static_cast<double>(stats.n));
  return Interval{stats.mean - half, stats.mean + half, IntervalKind::StudentT, alpha};
}

Interval norm_interval_pre(const SampleStats& stats, double z_quant, double alpha) {
  double half = z_quant * std::sqrt(stats.sigma2_mle / static_cast<double>(stats.n));
  return Interval{stats.mean - half, stats.mean + half, IntervalKind::Norm, alpha};
}

}  // namespace detail

SampleStats sample_stats(std::span<const double> data) {
  if (data.size() < 2)
    throw std::domain_error("sample_stats: need at least two observations");
  SampleStats st = detail::sample_stats_unchecked(data);
  // Non-finite inputs poison the accumulated moments; (x-shift)^2 cannot
  // cancel an infinity back to a finite value.
  if (!std::isfinite(st.mean) || !std::isfinite(st.s2))
    throw std::domain_error("sample_stats: non-finite data");
  return st;
}

namespace {

void require_lower_half(double a) {
  if (!(a > 0.0 && a < 0.5))
    throw std::domain_error("interval: alpha must be in (0,0.5)");
}

}  // namespace

Interval t_interval(const SampleStats& stats, Probability alpha) {
  require_lower_half(alpha.value());
  double tq = specfun::t_quantile(Probability(1.0 - alpha.value()),
                                  DegreesOfFreedom(static_cast<double>(stats.n - 1)));
  return detail::t_interval_pre(stats, tq, alpha.value());
}

Interval norm_interval(const SampleStats& stats, Probability alpha) {
  require_lower_half(alpha.value());
  double zq = specfun::norm_quantile(Probability(1.0 - alpha.value()));
  return detail::norm_interval_pre(stats, zq, alpha.value());
}

bool covers(const Interval& iv, double mu) { return iv.lo <= mu && mu <= iv.hi; }

}  // namespace coverr::intervals
