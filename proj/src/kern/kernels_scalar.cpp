#include "coverr/kern/kernels.hpp"
#include "coverr/kern/scalar_math.hpp"

namespace coverr::kern {
namespace {

void s_fill_uniform01(std::uint64_t key, std::uint64_t c0, double* out,
                      std::size_t n) {
  std::uint64_t state = key + kGolden * (c0 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = to_uniform01(sm_mix(state));
    state += kGolden;
  }
}

void s_fill_normal(std::uint64_t key, std::uint64_t c0, double mu,
                   double sigma, double* out, std::size_t n) {
  std::uint64_t state = key + kGolden * (c0 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double u = to_uniform01(sm_mix(state));
    out[i] = mu + sigma * knorm_quantile(u);
    state += kGolden;
  }
}

void s_fill_exponential(std::uint64_t key, std::uint64_t c0, double rate,
                        double* out, std::size_t n) {
  std::uint64_t state = key + kGolden * (c0 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double u = to_uniform01(sm_mix(state));
    out[i] = -klog1p(-u) / rate;
    state += kGolden;
  }
}

void s_fill_uniform_ab(std::uint64_t key, std::uint64_t c0, double a, double b,
                       double* out, std::size_t n) {
  double w = b - a;
  std::uint64_t state = key + kGolden * (c0 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double u = to_uniform01(sm_mix(state));
    out[i] = a + w * u;
    state += kGolden;
  }
}

void s_fill_lognormal(std::uint64_t key, std::uint64_t c0, double mu_log,
                      double sigma_log, double* out, std::size_t n) {
  std::uint64_t state = key + kGolden * (c0 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double u = to_uniform01(sm_mix(state));
    out[i] = kexp(mu_log + sigma_log * knorm_quantile(u));
    state += kGolden;
  }
}

void s_fill_gamma_int(std::uint64_t key, std::uint64_t c0, int shape,
                      double rate, double* out, std::size_t n) {
  const std::uint64_t k = static_cast<std::uint64_t>(shape);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t state = key + kGolden * (c0 + i * k + 1);
    double acc = 0.0;
    for (std::uint64_t j = 0; j < k; ++j) {
      double u = to_uniform01(sm_mix(state));
      acc += -klog1p(-u);
      state += kGolden;
    }
    out[i] = acc / rate;
  }
}

void s_shifted_moments(const double* x, std::size_t n, double shift,
                       double* sum, double* sumsq) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  double q[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double d = x[i] - shift;
    s[i & 3] += d;
    q[i & 3] += d * d;
  }
  *sum = (s[0] + s[2]) + (s[1] + s[3]);
  *sumsq = (q[0] + q[2]) + (q[1] + q[3]);
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table = {
      "scalar",        s_fill_uniform01, s_fill_normal,
      s_fill_exponential, s_fill_uniform_ab, s_fill_lognormal,
      s_fill_gamma_int, s_shifted_moments,
  };
  return table;
}

}  // namespace coverr::kern
