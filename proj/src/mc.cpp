#include "coverr/mc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "coverr/edgeworth.hpp"
#include "coverr/intervals.hpp"
#include "coverr/specfun.hpp"

namespace coverr::mc {

void SimulationConfig::validate() const {
  if (n < 2) throw std::domain_error("simulation: n must be >= 2");
  if (!(alpha.value() > 0.0 && alpha.value() < 0.5))
    throw std::domain_error("simulation: alpha must be in (0,0.5)");
  if (reps < 1000)
    throw std::domain_error("simulation: reps must be >= 1000 for a reported result");
  if (workers < 1) throw std::domain_error("simulation: workers must be >= 1");
  if (!run_student_t && !run_norm)
    throw std::domain_error("simulation: at least one interval kind required");
}

std::vector<std::pair<std::int64_t, std::int64_t>> worker_partition(
    std::int64_t reps, int workers) {
  if (reps < 1) throw std::domain_error("worker_partition: reps must be >= 1");
  if (workers < 1) throw std::domain_error("worker_partition: workers must be >= 1");
  std::int64_t w = std::min<std::int64_t>(workers, reps);
  std::int64_t base = reps / w;
  std::int64_t rem = reps % w;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  ranges.reserve(static_cast<std::size_t>(w));
  std::int64_t begin = 0;
  for (std::int64_t i = 0; i < w; ++i) {
    std::int64_t len = base + (i < rem ? 1 : 0);
    ranges.emplace_back(begin, begin + len);
    begin += len;
  }
  return ranges;
}

namespace {

struct Counts {
  std::int64_t t_covered = 0;
  std::int64_t norm_covered = 0;
};

Counts run_range(const SimulationConfig& cfg, double t_quant, double z_quant,
                 std::int64_t begin, std::int64_t end) {
  Counts c;
  std::vector<double> buf(static_cast<std::size_t>(cfg.n));
  const double mu = cfg.spec.mean;
  const double a = cfg.alpha.value();
  for (std::int64_t r = begin; r < end; ++r) {
    distributions::sample_into(
        cfg.spec,
        distributions::RandomStream{cfg.master_seed, static_cast<std::uint64_t>(r)},
        buf);
    intervals::SampleStats st = intervals::detail::sample_stats_unchecked(buf);
    if (cfg.run_student_t) {
      intervals::Interval iv = intervals::detail::t_interval_pre(st, t_quant, a);
      c.t_covered += intervals::covers(iv, mu) ? 1 : 0;
    }
    if (cfg.run_norm) {
      intervals::Interval iv = intervals::detail::norm_interval_pre(st, z_quant, a);
      c.norm_covered += intervals::covers(iv, mu) ? 1 : 0;
    }
  }
  return c;
}

CoverageResult make_result(const SimulationConfig& cfg, IntervalKind kind,
                           std::int64_t covered) {
  double reps = static_cast<double>(cfg.reps);
  double coverage = static_cast<double>(covered) / reps;
  double se = std::sqrt(coverage * (1.0 - coverage) / reps);
  double nominal = 1.0 - 2.0 * cfg.alpha.value();
  double dn = static_cast<double>(cfg.n);
  double predicted =
      dn * edgeworth::two_sided_error(cfg.alpha, cfg.n, cfg.spec.moments, kind);
  return CoverageResult{kind,    coverage,  se, dn * (coverage - nominal),
                        dn * se, predicted, cfg.reps};
}

}  // namespace

std::vector<CoverageResult> run(const SimulationConfig& cfg) {
  cfg.validate();
  const double t_quant = specfun::t_quantile(
      Probability(1.0 - cfg.alpha.value()),
      DegreesOfFreedom(static_cast<double>(cfg.n - 1)));
  const double z_quant = specfun::norm_quantile(Probability(1.0 - cfg.alpha.value()));

  auto ranges = worker_partition(cfg.reps, cfg.workers);
  std::vector<Counts> partial(ranges.size());
  if (ranges.size() == 1) {
    partial[0] = run_range(cfg, t_quant, z_quant, ranges[0].first, ranges[0].second);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    try {
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        pool.emplace_back([&, i] {
          partial[i] = run_range(cfg, t_quant, z_quant, ranges[i].first, ranges[i].second);
        });
      }
    } catch (...) {
      for (auto& th : pool) th.join();
      throw;  // clean failure, no partial result escapes
    }
    for (auto& th : pool) th.join();
  }

  Counts total;
  for (const Counts& c : partial) {
    total.t_covered += c.t_covered;
    total.norm_covered += c.norm_covered;
  }

  std::vector<CoverageResult> out;
  if (cfg.run_student_t)
    out.push_back(make_result(cfg, IntervalKind::StudentT, total.t_covered));
  if (cfg.run_norm)
    out.push_back(make_result(cfg, IntervalKind::Norm, total.norm_covered));
  return out;
}

Verdict compare(const CoverageResult& result, ComparePolicy policy) {
  double diff = result.scaled_error - result.predicted_scaled_error;
  double z;
  if (result.scaled_se > 0.0)
    z = diff / result.scaled_se;
  else
    z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  double band = policy.z_max * result.scaled_se + policy.slack;
  return Verdict{z, band, std::fabs(diff) <= band};
}

}  // namespace coverr::mc
