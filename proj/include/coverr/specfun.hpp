#ifndef COVERR_SPECFUN_HPP
#define COVERR_SPECFUN_HPP

#include "coverr/types.hpp"

// Self-contained special functions: standard normal pdf/cdf/quantile, the
// regularized incomplete beta, the exact Student-t cdf/quantile, and the
// asymptotic expansion of t quantiles around normal quantiles.
//
// Everything evaluates in double precision.  The normal cdf/quantile pair is
// built on the fixed-sequence kernels shared with the samplers; the t side
// uses the classical incomplete-beta route (continued fraction with the
// symmetry switch) inverted by a bracketed Newton iteration seeded from the
// expansion.

namespace coverr::specfun {

/// Standard normal density.  Rejects non-finite input.
double norm_pdf(double x);

/// Standard normal CDF, absolute accuracy well under 1e-12.
/// Rejects non-finite input.
Probability norm_cdf(double x);

/// Inverse standard normal CDF for p strictly inside (0,1).
double norm_quantile(Probability p);

/// Regularized incomplete beta I_x(a,b) for a,b > 0 and x in [0,1].
Probability reg_inc_beta(double a, double b, double x);

/// Student-t CDF via the incomplete-beta identity.
Probability t_cdf(double x, DegreesOfFreedom nu);

/// Student-t density (used by the quantile Newton iteration).
double t_pdf(double x, DegreesOfFreedom nu);

/// Student-t quantile for p strictly inside (0,1); numeric inversion of
/// t_cdf with round-trip error <= 1e-10 in probability space.
double t_quantile(Probability p, DegreesOfFreedom nu);

/// The polynomials g_1..g_4 of the t-quantile expansion:
///   g1(x) = (x^3+x)/4
///   g2(x) = (5x^5+16x^3+3x)/96
///   g3(x) = (3x^7+19x^5+17x^3-15x)/384
///   g4(x) = (79x^9+776x^7+1482x^5-1920x^3-945x)/92160
double g_poly(int k, double x);

/// z_p + sum_{k=1..order} g_k(z_p)/nu^k; order 0 returns z_p.
double t_quantile_expansion(Probability p, DegreesOfFreedom nu,
                            ExpansionOrder order);

/// Log of the gamma function for positive arguments (Lanczos).
double log_gamma(double x);

}  // namespace coverr::specfun

#endif  // COVERR_SPECFUN_HPP
