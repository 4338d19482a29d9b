#ifndef COVERR_KERN_SCALAR_MATH_HPP
#define COVERR_KERN_SCALAR_MATH_HPP

// Scalar reference kernels for the elementary functions used in the sampling
// hot path: exp, log, log1p, erfc, the normal CDF and its inverse, and the
// SplitMix64 counter generator.
//
// These are written as fixed operation sequences (no data-dependent iteration
// counts, no platform libm calls) so that the AVX2 kernels in
// src/kern/kernels_avx2.cpp can reproduce them bit for bit: every add, mul,
// div and sqrt below maps to one IEEE-754 double operation in the vector
// path, in the same order.  The whole project is compiled with
// -ffp-contract=off to keep that mapping intact.
//
// Algorithms: exp follows the Cephes rational reduction, log/log1p the
// fdlibm remez core, erfc is Cody's three-interval rational set (netlib
// specfun), and the inverse normal CDF is Wichura's AS241 refined by one
// Halley step against the erfc-based CDF.

#include <bit>
#include <cstdint>

namespace coverr::kern {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818685;
inline constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490393;

// ---------------------------------------------------------------------------
// SplitMix64 counter generator (Vigna's splitmix64; Stafford mix13 finalizer).
// Value j of stream i under master seed s is
//     sm_mix(stream_key(s, i) + kGolden * (j + 1))
// which is exactly the (j+1)-th splitmix64 output from state stream_key(s,i).
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t sm_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t stream) {
  return sm_mix(master_seed + kGolden * (stream + 1));
}

inline std::uint64_t sm_at(std::uint64_t key, std::uint64_t counter) {
  return sm_mix(key + kGolden * (counter + 1));
}

// 52-bit uniform on the open interval (0,1): (k + 1/2) * 2^-52 with
// k = bits >> 12.  Every value is exact in double and the endpoints are
// excluded, so log(u), log1p(-u) and the normal quantile are all safe.
inline double to_uniform01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

// ---------------------------------------------------------------------------
// exp
// ---------------------------------------------------------------------------

namespace expc {
inline constexpr double P0 = 1.26177193074810590878e-4;
inline constexpr double P1 = 3.02994407707441961300e-2;
inline constexpr double P2 = 9.99999999999999999910e-1;
inline constexpr double Q0 = 3.00198505138664455042e-6;
inline constexpr double Q1 = 2.52448340349684104192e-3;
inline constexpr double Q2 = 2.27265548208155028766e-1;
inline constexpr double Q3 = 2.00000000000000000005e0;
inline constexpr double LOG2E = 1.4426950408889634073599246810018921374;
inline constexpr double C1 = 6.93145751953125e-1;      // ln2 high part
inline constexpr double C2 = 1.42860682030941723212e-6;  // ln2 low part
inline constexpr double MAGIC = 6755399441055744.0;     // 1.5 * 2^52
inline constexpr double OVERFLOW_X = 709.782712893384;
inline constexpr double UNDERFLOW_X = -745.133219101941;
}  // namespace expc

inline double ldexp_split(double m, std::int64_t k) {
  // m * 2^k via two exact power-of-two multiplies; k in [-1100, 1100].
  std::int64_t k1 = k >> 1;
  std::int64_t k2 = k - k1;
  double s1 = std::bit_cast<double>((k1 + 1023) << 52);
  double s2 = std::bit_cast<double>((k2 + 1023) << 52);
  return (m * s1) * s2;
}

inline double kexp(double x) {
  using namespace expc;
  if (x >= OVERFLOW_X) return std::bit_cast<double>(0x7ff0000000000000ull);
  if (x <= UNDERFLOW_X) return 0.0;
  double t = x * LOG2E + MAGIC;
  double nd = t - MAGIC;  // nearest integer to x*log2(e), ties to even
  double r = (x - nd * C1) - nd * C2;
  double z = r * r;
  double pz = r * (P2 + z * (P1 + z * P0));
  double qz = Q3 + z * (Q2 + z * (Q1 + z * Q0));
  double e = 1.0 + (2.0 * pz) / (qz - pz);
  return ldexp_split(e, static_cast<std::int64_t>(nd));
}

// ---------------------------------------------------------------------------
// log / log1p (fdlibm core)
// ---------------------------------------------------------------------------

namespace logc {
inline constexpr double LN2_HI = 6.93147180369123816490e-01;
inline constexpr double LN2_LO = 1.90821492927058770002e-10;
inline constexpr double Lg1 = 6.666666666666735130e-01;
inline constexpr double Lg2 = 3.999999999940941908e-01;
inline constexpr double Lg3 = 2.857142874366239149e-01;
inline constexpr double Lg4 = 2.222219843214978396e-01;
inline constexpr double Lg5 = 1.818357216161805012e-01;
inline constexpr double Lg6 = 1.531383769920937332e-01;
inline constexpr double Lg7 = 1.479819860511658591e-01;
// Mantissas at or above this point are folded into [sqrt(2)/2, sqrt(2)).
inline constexpr std::uint64_t SQRT2_FRAC = 0x6a09c00000000000ull >> 12;
}  // namespace logc

// Decomposes x > 0 as 2^k * (1 + f) with 1+f in [sqrt(2)/2, sqrt(2)).
inline void log_reduce(double x, double& f, std::int64_t& k) {
  using namespace logc;
  std::uint64_t ix = std::bit_cast<std::uint64_t>(x);
  k = 0;
  if (ix < 0x0010000000000000ull) {  // subnormal
    x = x * 0x1p54;
    k = -54;
    ix = std::bit_cast<std::uint64_t>(x);
  }
  k += static_cast<std::int64_t>(ix >> 52) - 1023;
  std::uint64_t frac = ix & 0x000fffffffffffffull;
  std::uint64_t above = frac >= SQRT2_FRAC ? 1u : 0u;
  k += static_cast<std::int64_t>(above);
  std::uint64_t ebits = (above ? 0x3feull : 0x3ffull) << 52;
  f = std::bit_cast<double>(frac | ebits) - 1.0;
}

// log(2^k * (1+f)) + c with the fdlibm summation order.
inline double log_sum(double f, double dk, double c) {
  using namespace logc;
  double s = f / (2.0 + f);
  double z = s * s;
  double w = z * z;
  double t1 = w * (Lg2 + w * (Lg4 + w * Lg6));
  double t2 = z * (Lg1 + w * (Lg3 + w * (Lg5 + w * Lg7)));
  double r = t2 + t1;
  double hfsq = 0.5 * f * f;
  return s * (hfsq + r) + (dk * LN2_LO + c) - hfsq + f + dk * LN2_HI;
}

inline double klog(double x) {
  double f;
  std::int64_t k;
  log_reduce(x, f, k);
  return log_sum(f, static_cast<double>(k), 0.0);
}

inline double klog1p(double x) {
  double u = 1.0 + x;
  if (u == 1.0) return x;
  // Exact rounding error of the addition, folded back in as c/u.
  double c = u > 2.0 ? 1.0 - (u - x) : x - (u - 1.0);
  c = c / u;
  double f;
  std::int64_t k;
  log_reduce(u, f, k);
  return log_sum(f, static_cast<double>(k), c);
}

// ---------------------------------------------------------------------------
// erfc (Cody) and the standard normal CDF
// ---------------------------------------------------------------------------

namespace erfcc {
inline constexpr double A[5] = {3.1611237438705656, 113.864154151050156,
                                377.485237685302021, 3209.37758913846947,
                                0.185777706184603153};
inline constexpr double B[4] = {23.6012909523441209, 244.024637934444173,
                                1282.61652607737228, 2844.23683343917062};
inline constexpr double C[9] = {0.564188496988670089, 8.88314979438837594,
                                66.1191906371416295, 298.635138197400131,
                                881.95222124176909, 1712.04761263407058,
                                2051.07837782607147, 1230.33935479799725,
                                2.15311535474403846e-8};
inline constexpr double D[8] = {15.7449261107098347, 117.693950891312499,
                                537.181101862009858, 1621.38957456669019,
                                3290.79923573345963, 4362.61909014324716,
                                3439.36767414372164, 1230.33935480374942};
inline constexpr double P[6] = {0.305326634961232344, 0.360344899949804439,
                                0.125781726111229246, 0.0160837851487422766,
                                6.58749161529837803e-4, 0.0163153871373020978};
inline constexpr double Q[5] = {2.56852019228982242, 1.87295284992346047,
                                0.527905102951428412, 0.0605183413124413191,
                                0.00233520497626869185};
inline constexpr double SQRPI = 0.56418958354775628695;
inline constexpr double THRESH = 0.46875;
inline constexpr double XSMALL = 1.11e-16;
inline constexpr double XBIG = 26.543;
}  // namespace erfcc

inline double trunc16(double y) {
  // trunc(16 y)/16; mirrors _mm256_round_pd(..., _MM_FROUND_TO_ZERO).
  double t = y * 16.0;
  t = t >= 0.0 ? static_cast<double>(static_cast<std::int64_t>(t))
               : -static_cast<double>(static_cast<std::int64_t>(-t));
  return t / 16.0;
}

// exp(-y^2) split as exp(-t16^2) * exp(-del) to keep relative accuracy when
// y^2 is large; t16 carries the high bits of y exactly.
inline double exp_neg_ysq(double y) {
  double t16 = trunc16(y);
  double del = (y - t16) * (y + t16);
  return kexp(-t16 * t16) * kexp(-del);
}

inline double kerfc(double x) {
  using namespace erfcc;
  double y = x < 0.0 ? -x : x;
  double result;
  if (y <= THRESH) {
    double ysq = y > XSMALL ? y * y : 0.0;
    double xnum = A[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
      xnum = (xnum + A[i]) * ysq;
      xden = (xden + B[i]) * ysq;
    }
    double erfv = x * (xnum + A[3]) / (xden + B[3]);
    return 1.0 - erfv;  // already signed; no reflection needed
  } else if (y <= 4.0) {
    double xnum = C[8] * y;
    double xden = y;
    for (int i = 0; i < 7; ++i) {
      xnum = (xnum + C[i]) * y;
      xden = (xden + D[i]) * y;
    }
    result = (xnum + C[7]) / (xden + D[7]);
    result = exp_neg_ysq(y) * result;
  } else {
    if (y >= XBIG) {
      result = 0.0;
    } else {
      double ysq = 1.0 / (y * y);
      double xnum = P[5] * ysq;
      double xden = ysq;
      for (int i = 0; i < 4; ++i) {
        xnum = (xnum + P[i]) * ysq;
        xden = (xden + Q[i]) * ysq;
      }
      result = ysq * (xnum + P[4]) / (xden + Q[4]);
      result = (SQRPI - result) / y;
      result = exp_neg_ysq(y) * result;
    }
  }
  if (x < 0.0) result = 2.0 - result;
  return result;
}

inline double knorm_cdf(double x) { return 0.5 * kerfc(-x * kInvSqrt2); }

inline double knorm_pdf(double x) { return kInvSqrt2Pi * kexp(-0.5 * x * x); }

// ---------------------------------------------------------------------------
// Inverse standard normal CDF: AS241 (PPND16) + one Halley step
// ---------------------------------------------------------------------------

namespace qn {
inline constexpr double SPLIT1 = 0.425;
inline constexpr double SPLIT2 = 5.0;
inline constexpr double CONST1 = 0.180625;
inline constexpr double CONST2 = 1.6;
inline constexpr double A0 = 3.3871328727963666080e0;
inline constexpr double A1 = 1.3314166789178437745e+2;
inline constexpr double A2 = 1.9715909503065514427e+3;
inline constexpr double A3 = 1.3731693765509461125e+4;
inline constexpr double A4 = 4.5921953931549871457e+4;
inline constexpr double A5 = 6.7265770927008700853e+4;
inline constexpr double A6 = 3.3430575583588128105e+4;
inline constexpr double A7 = 2.5090809287301226727e+3;
inline constexpr double B1 = 4.2313330701600911252e+1;
inline constexpr double B2 = 6.8718700749205790830e+2;
inline constexpr double B3 = 5.3941960214247511077e+3;
inline constexpr double B4 = 2.1213794301586595867e+4;
inline constexpr double B5 = 3.9307895800092710610e+4;
inline constexpr double B6 = 2.8729085735721942674e+4;
inline constexpr double B7 = 5.2264952788528545610e+3;
inline constexpr double C0 = 1.42343711074968357734e0;
inline constexpr double C1 = 4.63033784615654529590e0;
inline constexpr double C2 = 5.76949722146069140550e0;
inline constexpr double C3 = 3.64784832476320460504e0;
inline constexpr double C4 = 1.27045825245236838258e0;
inline constexpr double C5 = 2.41780725177450611770e-1;
inline constexpr double C6 = 2.27238449892691845833e-2;
inline constexpr double C7 = 7.74545014278341407640e-4;
inline constexpr double D1 = 2.05319162663775882187e0;
inline constexpr double D2 = 1.67638483018380384940e0;
inline constexpr double D3 = 6.89767334985100004550e-1;
inline constexpr double D4 = 1.48103976427480074590e-1;
inline constexpr double D5 = 1.51986665636164571966e-2;
inline constexpr double D6 = 5.47593808499534494600e-4;
inline constexpr double D7 = 1.05075007164441684324e-9;
inline constexpr double E0 = 6.65790464350110377720e0;
inline constexpr double E1 = 5.46378491116411436990e0;
inline constexpr double E2 = 1.78482653991729133580e0;
inline constexpr double E3 = 2.96560571828504891230e-1;
inline constexpr double E4 = 2.65321895265761230930e-2;
inline constexpr double E5 = 1.24266094738807843860e-3;
inline constexpr double E6 = 2.71155556874348757815e-5;
inline constexpr double E7 = 2.01033439929228813265e-7;
inline constexpr double F1 = 5.99832206555887937690e-1;
inline constexpr double F2 = 1.36929880922735805310e-1;
inline constexpr double F3 = 1.48753612908506148525e-2;
inline constexpr double F4 = 7.86869131145613259100e-4;
inline constexpr double F5 = 1.84631831751005468180e-5;
inline constexpr double F6 = 1.42151175831644588870e-7;
inline constexpr double F7 = 2.04426310338993978564e-15;
// Beyond this |z| the CDF saturates in double and refinement is skipped.
inline constexpr double REFINE_LIMIT = 37.0;
}  // namespace qn

// Evaluated at pm = min(p, 1-p) and reflected, so norm_quantile(1-p) is the
// exact negation of norm_quantile(p) whenever 1-p is itself exact; the
// Halley refinement then always works on the lower tail where the
// erfc-based CDF has full relative accuracy.
inline double knorm_quantile(double p) {
  using namespace qn;
  double pc = 1.0 - p;
  double pm = p < pc ? p : pc;
  double q = pm - 0.5;  // always <= 0
  double x0;
  if (-q <= SPLIT1) {
    double r = CONST1 - q * q;
    x0 = q *
         (((((((A7 * r + A6) * r + A5) * r + A4) * r + A3) * r + A2) * r + A1) * r + A0) /
         (((((((B7 * r + B6) * r + B5) * r + B4) * r + B3) * r + B2) * r + B1) * r + 1.0);
  } else {
    double r = __builtin_sqrt(-klog(pm));
    double ret;
    if (r <= SPLIT2) {
      double s = r - CONST2;
      ret = (((((((C7 * s + C6) * s + C5) * s + C4) * s + C3) * s + C2) * s + C1) * s + C0) /
            (((((((D7 * s + D6) * s + D5) * s + D4) * s + D3) * s + D2) * s + D1) * s + 1.0);
    } else {
      double s = r - SPLIT2;
      ret = (((((((E7 * s + E6) * s + E5) * s + E4) * s + E3) * s + E2) * s + E1) * s + E0) /
            (((((((F7 * s + F6) * s + F5) * s + F4) * s + F3) * s + F2) * s + F1) * s + 1.0);
    }
    x0 = -ret;
  }
  // One Halley step against the erfc-based CDF.
  if (-x0 <= REFINE_LIMIT) {
    double err = knorm_cdf(x0) - pm;
    double u = err * kSqrt2Pi * kexp(0.5 * x0 * x0);
    x0 = x0 - u / (1.0 + 0.5 * x0 * u);
  }
  return p <= 0.5 ? x0 : -x0;
}

}  // namespace coverr::kern

#endif  // COVERR_KERN_SCALAR_MATH_HPP
