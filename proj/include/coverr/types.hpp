#ifndef COVERR_TYPES_HPP
#define COVERR_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace coverr {

/// A probability in [0,1]. Construction validates the range.
class Probability {
 public:
  explicit Probability(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::domain_error("Probability out of [0,1]: " + std::to_string(v));
  }
  double value() const noexcept { return v_; }

 private:
  double v_;
};

/// Degrees of freedom of a Student-t distribution, nu >= 1.
class DegreesOfFreedom {
 public:
  explicit DegreesOfFreedom(double nu) : nu_(nu) {
    if (!(nu >= 1.0) || !std::isfinite(nu))
      throw std::domain_error("DegreesOfFreedom must be >= 1 and finite");
  }
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

/// Truncation order of the t-quantile asymptotic expansion.
/// Order k keeps terms through g_k(z)/nu^k; supported range is 0..4.
class ExpansionOrder {
 public:
  explicit ExpansionOrder(int k) : k_(k) {
    if (k < 0 || k > 4)
      throw std::domain_error("ExpansionOrder must be in 0..4");
  }
  int value() const noexcept { return k_; }

 private:
  int k_;
};

enum class IntervalKind { StudentT, Norm };

inline const char* kind_name(IntervalKind k) {
  return k == IntervalKind::StudentT ? "StudentT" : "Norm";
}

/// Standardized skewness and excess kurtosis of a sampling distribution.
/// Gaussian data has gamma == kappa == 0.
struct MomentProfile {
  double gamma;
  double kappa;

  MomentProfile(double gamma_, double kappa_) : gamma(gamma_), kappa(kappa_) {
    if (!std::isfinite(gamma) || !std::isfinite(kappa))
      throw std::domain_error("MomentProfile requires finite moments");
    // Moment feasibility: kurtosis - 3 >= skewness^2 - 2 for any real law.
    if (kappa < gamma * gamma - 2.0)
      throw std::domain_error("infeasible moment profile: kappa < gamma^2 - 2");
  }
};

}  // namespace coverr

#endif  // COVERR_TYPES_HPP
