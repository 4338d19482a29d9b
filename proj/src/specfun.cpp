#include "coverr/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "coverr/kern/scalar_math.hpp"

namespace coverr::specfun {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": non-finite input");
}

void require_open01(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error(std::string(what) + ": probability must be strictly inside (0,1)");
}

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

double lanczos_lgamma(double x) {
  // x > 0; no reflection branch needed for this project's domains.
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i - 1);
  double t = x + 6.5;  // x + g - 0.5
  return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// Continued fraction for the incomplete beta (Lentz), classical form.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 600;
  constexpr double kEps = 1e-16;
  constexpr double kFpMin = 1e-300;
  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("reg_inc_beta: continued fraction failed to converge");
}

double inc_beta(double a, double b, double x) {
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double lbeta = lanczos_lgamma(a + b) - lanczos_lgamma(a) - lanczos_lgamma(b);
  double bt = std::exp(lbeta + a * kern::klog(x) + b * kern::klog1p(-x));
  double r;
  if (x < (a + 1.0) / (a + b + 2.0))
    r = bt * betacf(a, b, x) / a;
  else
    r = 1.0 - bt * betacf(b, a, 1.0 - x) / b;
  if (r < 0.0) return 0.0;
  if (r > 1.0) return 1.0;
  return r;
}

constexpr double kG1Den = 4.0;
constexpr double kG2Den = 96.0;
constexpr double kG3Den = 384.0;
constexpr double kG4Den = 92160.0;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return lanczos_lgamma(x);
}

double norm_pdf(double x) {
  require_finite(x, "norm_pdf");
  return kern::knorm_pdf(x);
}

Probability norm_cdf(double x) {
  require_finite(x, "norm_cdf");
  return Probability(kern::knorm_cdf(x));
}

double norm_quantile(Probability p) {
  require_open01(p.value(), "norm_quantile");
  return kern::knorm_quantile(p.value());
}

Probability reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("reg_inc_beta: requires a > 0 and b > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("reg_inc_beta: requires x in [0,1]");
  return Probability(inc_beta(a, b, x));
}

Probability t_cdf(double x, DegreesOfFreedom nu) {
  require_finite(x, "t_cdf");
  double v = nu.value();
  if (x == 0.0) return Probability(0.5);
  double xb = v / (v + x * x);
  double p = inc_beta(0.5 * v, 0.5, xb);  // = 2 * upper tail at |x|
  double tail = 0.5 * p;
  return Probability(x > 0.0 ? 1.0 - tail : tail);
}

double t_pdf(double x, DegreesOfFreedom nu) {
  double v = nu.value();
  double lognorm =
      lanczos_lgamma(0.5 * (v + 1.0)) - lanczos_lgamma(0.5 * v) - 0.5 * std::log(v * kern::kPi);
  return std::exp(lognorm - 0.5 * (v + 1.0) * kern::klog1p(x * x / v));
}

double g_poly(int k, double x) {
  double x2 = x * x;
  switch (k) {
    case 1:
      return x * (x2 + 1.0) / kG1Den;
    case 2:
      return x * (3.0 + x2 * (16.0 + x2 * 5.0)) / kG2Den;
    case 3:
      return x * (-15.0 + x2 * (17.0 + x2 * (19.0 + x2 * 3.0))) / kG3Den;
    case 4:
      return x * (-945.0 + x2 * (-1920.0 + x2 * (1482.0 + x2 * (776.0 + x2 * 79.0)))) /
             kG4Den;
    default:
      throw std::domain_error("g_poly: k must be in 1..4");
  }
}

double t_quantile_expansion(Probability p, DegreesOfFreedom nu, ExpansionOrder order) {
  require_open01(p.value(), "t_quantile_expansion");
  double z = kern::knorm_quantile(p.value());
  double v = nu.value();
  double acc = z;
  double scale = 1.0;
  for (int k = 1; k <= order.value(); ++k) {
    scale /= v;
    acc += g_poly(k, z) * scale;
  }
  return acc;
}

double t_quantile(Probability p, DegreesOfFreedom nu) {
  double pv = p.value();
  require_open01(pv, "t_quantile");
  if (pv == 0.5) return 0.0;
  if (pv < 0.5) return -t_quantile(Probability(1.0 - pv), nu);

  // Seed with the expansion, then bracket [0, hi] and run safeguarded Newton.
  double seed = t_quantile_expansion(p, nu, ExpansionOrder(4));
  double lo = 0.0;
  double hi = seed > 1.0 ? seed : 1.0;
  while (t_cdf(hi, nu).value() < pv) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("t_quantile: bracket expansion failed");
  }
  double x = seed > 0.0 && seed < hi ? seed : 0.5 * (lo + hi);
  double f = t_cdf(x, nu).value() - pv;
  for (int it = 0; it < 100; ++it) {
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    double step = f / t_pdf(x, nu);
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    double fn = t_cdf(next, nu).value() - pv;
    x = next;
    f = fn;
    if (std::fabs(f) <= 1e-14 || hi - lo <= 1e-13 * (1.0 + x)) break;
  }
  return x;
}

}  // namespace coverr::specfun
