#include "coverr/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coverr/kern/kernels.hpp"
#include "coverr/kern/scalar_math.hpp"

namespace coverr::distributions {

namespace {

std::string fmt_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  std::string s = os.str();
  // trim to shortest representation that round-trips
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream t;
    t.precision(prec);
    t << v;
    if (std::stod(t.str()) == v) return t.str();
  }
  return s;
}

}  // namespace

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma))
    throw std::domain_error("normal: requires finite mu and sigma > 0");
  return DistributionSpec{Family::Normal, mu, sigma, 1, mu, sigma,
                          MomentProfile(0.0, 0.0)};
}

DistributionSpec DistributionSpec::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::domain_error("exponential: requires rate > 0");
  return DistributionSpec{Family::Exponential, rate, 0.0, 1, 1.0 / rate,
                          1.0 / rate, MomentProfile(2.0, 6.0)};
}

DistributionSpec DistributionSpec::gamma_int(int shape, double rate) {
  if (shape < 1) throw std::domain_error("gamma: integer shape must be >= 1");
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::domain_error("gamma: requires rate > 0");
  double k = static_cast<double>(shape);
  return DistributionSpec{Family::Gamma,        rate, 0.0, shape, k / rate,
                          std::sqrt(k) / rate,  MomentProfile(2.0 / std::sqrt(k), 6.0 / k)};
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("uniform: requires finite a < b");
  return DistributionSpec{Family::Uniform,
                          a,
                          b,
                          1,
                          0.5 * (a + b),
                          (b - a) / std::sqrt(12.0),
                          MomentProfile(0.0, -1.2)};
}

DistributionSpec DistributionSpec::lognormal(double mu_log, double sigma_log) {
  if (!(sigma_log > 0.0) || !std::isfinite(mu_log) || !std::isfinite(sigma_log))
    throw std::domain_error("lognormal: requires finite mu_log and sigma_log > 0");
  double s2 = sigma_log * sigma_log;
  double w = std::exp(s2);
  double mean = std::exp(mu_log + 0.5 * s2);
  double sd = std::sqrt((w - 1.0) * std::exp(2.0 * mu_log + s2));
  double gamma = (w + 2.0) * std::sqrt(w - 1.0);
  double kappa = std::exp(4.0 * s2) + 2.0 * std::exp(3.0 * s2) + 3.0 * w * w - 6.0;
  return DistributionSpec{Family::Lognormal, mu_log, sigma_log, 1,
                          mean,              sd,      MomentProfile(gamma, kappa)};
}

std::string DistributionSpec::family_name() const {
  switch (family) {
    case Family::Normal: return "normal";
    case Family::Exponential: return "exponential";
    case Family::Gamma: return "gamma";
    case Family::Uniform: return "uniform";
    case Family::Lognormal: return "lognormal";
  }
  return "?";
}

std::string DistributionSpec::params_label() const {
  switch (family) {
    case Family::Normal:
      return "mu=" + fmt_param(p0) + ";sigma=" + fmt_param(p1);
    case Family::Exponential:
      return "rate=" + fmt_param(p0);
    case Family::Gamma:
      return "shape=" + std::to_string(shape) + ";rate=" + fmt_param(p0);
    case Family::Uniform:
      return "a=" + fmt_param(p0) + ";b=" + fmt_param(p1);
    case Family::Lognormal:
      return "mlog=" + fmt_param(p0) + ";slog=" + fmt_param(p1);
  }
  return "?";
}

std::uint64_t DistributionSpec::counters_per_draw() const {
  return family == Family::Gamma ? static_cast<std::uint64_t>(shape) : 1;
}

void sample_into(const DistributionSpec& spec, RandomStream stream,
                 std::span<double> out) {
  const kern::Kernels& k = kern::active_kernels();
  const std::uint64_t key = kern::stream_key(stream.master_seed, stream.stream_index);
  switch (spec.family) {
    case Family::Normal:
      k.fill_normal(key, 0, spec.p0, spec.p1, out.data(), out.size());
      break;
    case Family::Exponential:
      k.fill_exponential(key, 0, spec.p0, out.data(), out.size());
      break;
    case Family::Gamma:
      k.fill_gamma_int(key, 0, spec.shape, spec.p0, out.data(), out.size());
      break;
    case Family::Uniform:
      k.fill_uniform_ab(key, 0, spec.p0, spec.p1, out.data(), out.size());
      break;
    case Family::Lognormal:
      k.fill_lognormal(key, 0, spec.p0, spec.p1, out.data(), out.size());
      break;
  }
}

std::vector<double> sample(const DistributionSpec& spec, RandomStream stream,
                           std::size_t count) {
  if (count == 0) throw std::domain_error("sample: count must be >= 1");
  std::vector<double> out(count);
  sample_into(spec, stream, out);
  return out;
}

}  // namespace coverr::distributions
