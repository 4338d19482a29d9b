#include "coverr/edgeworth.hpp"

#include <cmath>
#include <stdexcept>

#include "coverr/specfun.hpp"

namespace coverr::edgeworth {

namespace {

void require_open01(double a, const char* what) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error(std::string(what) + ": alpha must be in (0,1)");
}

void require_lower_half(double a, const char* what) {
  if (!(a > 0.0 && a < 0.5))
    throw std::domain_error(std::string(what) + ": alpha must be in (0,0.5)");
}

void require_sample_size(std::int64_t n, const char* what) {
  if (n < 2) throw std::domain_error(std::string(what) + ": n must be >= 2");
}

}  // namespace

CoverageApprox one_sided_coverage(Probability alpha, std::int64_t n,
                                  const MomentProfile& m) {
  double a = alpha.value();
  require_open01(a, "one_sided_coverage");
  require_sample_size(n, "one_sided_coverage");
  double z = specfun::norm_quantile(alpha);
  double z2 = z * z;
  double phi = specfun::norm_pdf(z);
  double dn = static_cast<double>(n);
  double half_order = -(1.0 / 6.0) * m.gamma * (2.0 * z2 + 1.0) * phi / std::sqrt(dn);
  double bracket = (1.0 / 12.0) * m.kappa * (z2 - 3.0) -
                   (1.0 / 18.0) * m.gamma * m.gamma * (z2 * z2 + 2.0 * z2 - 3.0) -
                   0.25 * (z2 + 3.0);
  double first_order = z * bracket * phi / dn;
  double v = a + half_order + first_order;
  return CoverageApprox{v, v >= 0.0 && v <= 1.0};
}

double two_sided_error_norm(Probability alpha, std::int64_t n,
                            const MomentProfile& m) {
  require_lower_half(alpha.value(), "two_sided_error_norm");
  require_sample_size(n, "two_sided_error_norm");
  double z = specfun::norm_quantile(Probability(1.0 - alpha.value()));
  double z2 = z * z;
  double bracket = m.kappa * (z2 - 3.0) / 12.0 -
                   m.gamma * m.gamma * (z2 * z2 + 2.0 * z2 - 3.0) / 18.0 -
                   (z2 + 3.0) / 4.0;
  return 2.0 * z / static_cast<double>(n) * bracket * specfun::norm_pdf(z);
}

ErrorEntry entry_coefficients(Probability alpha, IntervalKind kind) {
  require_lower_half(alpha.value(), "entry_coefficients");
  double z = specfun::norm_quantile(Probability(1.0 - alpha.value()));
  double z2 = z * z;
  double a_kappa = z * (z2 - 3.0) / 12.0;
  double a_gamma2 = -z * (z2 * z2 + 2.0 * z2 - 3.0) / 18.0;
  double a_0 = kind == IntervalKind::Norm ? -z * (z2 + 3.0) / 4.0 : 0.0;
  return ErrorEntry{a_kappa, a_gamma2, a_0, alpha};
}

double two_sided_error(Probability alpha, std::int64_t n, const MomentProfile& m,
                       IntervalKind kind) {
  require_sample_size(n, "two_sided_error");
  ErrorEntry e = entry_coefficients(alpha, kind);
  double z = specfun::norm_quantile(Probability(1.0 - alpha.value()));
  return 2.0 * specfun::norm_pdf(z) / static_cast<double>(n) * e.value(m);
}

Probability alpha_adjusted(Probability alpha, std::int64_t n) {
  double a = alpha.value();
  require_open01(a, "alpha_adjusted");
  require_sample_size(n, "alpha_adjusted");
  double z = specfun::norm_quantile(alpha);
  double adj = (z * z * z + 3.0 * z) * specfun::norm_pdf(z) / (4.0 * static_cast<double>(n));
  double ap = a + adj;
  if (!(ap > 0.0 && ap < 1.0))
    throw std::domain_error("alpha_adjusted: adjusted level left (0,1); n too small for the expansion");
  return Probability(ap);
}

Probability exact_gaussian_norm_coverage(Probability alpha, std::int64_t n) {
  require_lower_half(alpha.value(), "exact_gaussian_norm_coverage");
  require_sample_size(n, "exact_gaussian_norm_coverage");
  double z = specfun::norm_quantile(Probability(1.0 - alpha.value()));
  double dn = static_cast<double>(n);
  double arg = z * std::sqrt((dn - 1.0) / dn);
  double upper = specfun::t_cdf(arg, DegreesOfFreedom(dn - 1.0)).value();
  return Probability(2.0 * upper - 1.0);
}

}  // namespace coverr::edgeworth
