#ifndef COVERR_EDGEWORTH_HPP
#define COVERR_EDGEWORTH_HPP

#include <cstdint>

#include "coverr/types.hpp"

// Asymptotic coverage-error formulas for two-sided confidence intervals for
// a mean: the one-sided coverage expansion, the two-sided errors of the
// Gaussian-quantile/MLE-variance ("Norm") interval and of Student's t
// interval, the table-entry coefficients both share, the adjusted Gaussian
// tail level matching s*t-quantile to sigma-hat*z, and an exact oracle for
// the Norm interval's coverage under Gaussian data.

namespace coverr::edgeworth {

/// Table-entry coefficients: entry(m) = a_kappa*kappa + a_gamma2*gamma^2 + a_0,
/// scaled so that the two-sided coverage error is (2*phi(z_{1-alpha})/n)*entry
/// + O(n^{-3/2}).  For the Student-t kind a_0 == 0.
struct ErrorEntry {
  double a_kappa;
  double a_gamma2;
  double a_0;
  Probability alpha;

  double value(const MomentProfile& m) const {
    return a_kappa * m.kappa + a_gamma2 * m.gamma * m.gamma + a_0;
  }
};

/// An asymptotic coverage value; the expansion can leave [0,1] for small n
/// or extreme moments, and is reported unclamped with a range flag rather
/// than masked.
struct CoverageApprox {
  double value;
  bool within_unit;
};

/// One-sided coverage of (-inf, mean + z_alpha * sigma_hat / sqrt(n)]:
///   alpha - n^{-1/2} (1/6) gamma (2 z^2 + 1) phi(z)
///         + n^{-1} z [ (1/12) kappa (z^2-3) - (1/18) gamma^2 (z^4+2z^2-3)
///                      - (1/4)(z^2+3) ] phi(z),   z = z_alpha.
CoverageApprox one_sided_coverage(Probability alpha, std::int64_t n,
                                  const MomentProfile& m);

/// Two-sided coverage error of the Norm interval at nominal 1-2*alpha:
///   (2 z / n) [ kappa (z^2-3)/12 - gamma^2 (z^4+2z^2-3)/18 - (z^2+3)/4 ] phi(z)
/// with z = z_{1-alpha}.  Equals one_sided(1-alpha) - one_sided(alpha)
/// - (1-2*alpha); the n^{-1/2} skewness terms cancel identically.
double two_sided_error_norm(Probability alpha, std::int64_t n,
                            const MomentProfile& m);

/// Shared coefficients a_kappa = z(z^2-3)/12 and a_gamma2 = -z(z^4+2z^2-3)/18;
/// a_0 = -z(z^2+3)/4 for Norm and 0 for StudentT, z = z_{1-alpha}.
ErrorEntry entry_coefficients(Probability alpha, IntervalKind kind);

/// (2 phi(z_{1-alpha}) / n) * entry value.
double two_sided_error(Probability alpha, std::int64_t n,
                       const MomentProfile& m, IntervalKind kind);

/// Gaussian tail level alpha' with sigma_hat * z_{alpha'} matching
/// s * t_quantile(alpha, n-1) to O(n^{-2}):
///   alpha' = alpha + (z^3 + 3z) phi(z) / (4n),  z = z_alpha.
/// Throws if the adjustment leaves (0,1).
Probability alpha_adjusted(Probability alpha, std::int64_t n);

/// Exact two-sided coverage of the Norm interval under Gaussian data:
///   2 * t_cdf(z_{1-alpha} * sqrt((n-1)/n), n-1) - 1.
Probability exact_gaussian_norm_coverage(Probability alpha, std::int64_t n);

}  // namespace coverr::edgeworth

#endif  // COVERR_EDGEWORTH_HPP
