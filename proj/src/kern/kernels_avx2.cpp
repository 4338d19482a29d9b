// AVX2 variants of the sampling kernels.  Every floating-point operation
// mirrors the scalar reference in include/coverr/kern/scalar_math.hpp in the
// same order, so results are bit-identical lane by lane; the equivalence
// tests enforce this.  Compiled with -mavx2 only (no FMA: the reference has
// no fused operations).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "coverr/kern/kernels.hpp"
#include "coverr/kern/scalar_math.hpp"

namespace coverr::kern {
namespace {

using vd = __m256d;
using vi = __m256i;

inline vd vset(double x) { return _mm256_set1_pd(x); }
inline vi vset64(std::int64_t x) { return _mm256_set1_epi64x(x); }

inline vd vabs(vd x) {
  return _mm256_andnot_pd(vset(-0.0), x);
}
inline vd vneg(vd x) { return _mm256_xor_pd(vset(-0.0), x); }
inline vd vsel(vd mask, vd a, vd b) { return _mm256_blendv_pd(b, a, mask); }

// 64x64 -> low 64 multiply against a constant (AVX2 has no vpmullq).
inline vi mullo64(vi v, std::uint64_t c) {
  const vi clo = vset64(static_cast<std::int64_t>(c & 0xffffffffull));
  const vi chi = vset64(static_cast<std::int64_t>(c >> 32));
  vi lo = _mm256_mul_epu32(v, clo);
  vi t1 = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), clo);
  vi t2 = _mm256_mul_epu32(v, chi);
  vi hi = _mm256_slli_epi64(_mm256_add_epi64(t1, t2), 32);
  return _mm256_add_epi64(lo, hi);
}

inline vi v_sm_mix(vi z) {
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), 0xbf58476d1ce4e5b9ull);
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), 0x94d049bb133111ebull);
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

inline vd v_to_uniform01(vi bits) {
  vi v = _mm256_srli_epi64(bits, 12);
  // (double)v for v < 2^52 via the exponent-or trick; exact.
  vd d = _mm256_castsi256_pd(_mm256_or_si256(v, vset64(0x4330000000000000ll))) -
         vset(0x1p52);
  return (d + vset(0.5)) * vset(0x1p-52);
}

// Exact int64 lane values in [-2^31, 2^31) -> double.
inline vd small_i64_to_pd(vi k) {
  const vi idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  __m128i k32 = _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(k, idx));
  return _mm256_cvtepi32_pd(k32);
}

// ---------------------------------------------------------------------------
// exp
// ---------------------------------------------------------------------------

inline vd v_kexp(vd x) {
  using namespace expc;
  vd m_over = _mm256_cmp_pd(x, vset(OVERFLOW_X), _CMP_GE_OQ);
  vd m_under = _mm256_cmp_pd(x, vset(UNDERFLOW_X), _CMP_LE_OQ);
  vd t = x * vset(LOG2E) + vset(MAGIC);
  vd nd = t - vset(MAGIC);
  vd r = (x - nd * vset(C1)) - nd * vset(C2);
  vd z = r * r;
  vd pz = r * (vset(P2) + z * (vset(P1) + z * vset(P0)));
  vd qz = vset(Q3) + z * (vset(Q2) + z * (vset(Q1) + z * vset(Q0)));
  vd e = vset(1.0) + (vset(2.0) * pz) / (qz - pz);
  __m128i n32 = _mm256_cvtpd_epi32(nd);
  vi n64 = _mm256_cvtepi32_epi64(n32);
  vi k1 = _mm256_cvtepi32_epi64(_mm_srai_epi32(n32, 1));
  vi k2 = _mm256_sub_epi64(n64, k1);
  vd s1 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(k1, vset64(1023)), 52));
  vd s2 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(k2, vset64(1023)), 52));
  vd res = (e * s1) * s2;
  res = vsel(m_under, vset(0.0), res);
  res = vsel(m_over, vset(__builtin_inf()), res);
  return res;
}

// ---------------------------------------------------------------------------
// log / log1p
// ---------------------------------------------------------------------------

inline void v_log_reduce(vd x, vd& f, vd& dk) {
  using namespace logc;
  vi ix = _mm256_castpd_si256(x);
  vi m_sub = _mm256_cmpgt_epi64(vset64(0x0010000000000000ll), ix);
  vd x_adj = vsel(_mm256_castsi256_pd(m_sub), x * vset(0x1p54), x);
  ix = _mm256_castpd_si256(x_adj);
  vi k = _mm256_sub_epi64(_mm256_srli_epi64(ix, 52), vset64(1023));
  k = _mm256_add_epi64(k, _mm256_and_si256(m_sub, vset64(-54)));
  vi frac = _mm256_and_si256(ix, vset64(0x000fffffffffffffll));
  vi m_above = _mm256_cmpgt_epi64(frac, vset64(static_cast<std::int64_t>(SQRT2_FRAC) - 1));
  k = _mm256_sub_epi64(k, m_above);  // mask lanes are -1
  vi ebits = _mm256_blendv_epi8(vset64(0x3ffll << 52), vset64(0x3fell << 52), m_above);
  f = _mm256_castsi256_pd(_mm256_or_si256(frac, ebits)) - vset(1.0);
  dk = small_i64_to_pd(k);
}

inline vd v_log_sum(vd f, vd dk, vd c) {
  using namespace logc;
  vd s = f / (vset(2.0) + f);
  vd z = s * s;
  vd w = z * z;
  vd t1 = w * (vset(Lg2) + w * (vset(Lg4) + w * vset(Lg6)));
  vd t2 = z * (vset(Lg1) + w * (vset(Lg3) + w * (vset(Lg5) + w * vset(Lg7))));
  vd r = t2 + t1;
  vd hfsq = vset(0.5) * f * f;
  return s * (hfsq + r) + (dk * vset(LN2_LO) + c) - hfsq + f + dk * vset(LN2_HI);
}

inline vd v_klog(vd x) {
  vd f, dk;
  v_log_reduce(x, f, dk);
  return v_log_sum(f, dk, vset(0.0));
}

inline vd v_klog1p(vd x) {
  vd u = vset(1.0) + x;
  vd m_one = _mm256_cmp_pd(u, vset(1.0), _CMP_EQ_OQ);
  vd m_big = _mm256_cmp_pd(u, vset(2.0), _CMP_GT_OQ);
  vd c = vsel(m_big, vset(1.0) - (u - x), x - (u - vset(1.0)));
  c = c / u;
  vd f, dk;
  v_log_reduce(u, f, dk);
  vd res = v_log_sum(f, dk, c);
  return vsel(m_one, x, res);
}

// ---------------------------------------------------------------------------
// erfc / normal CDF
// ---------------------------------------------------------------------------

inline vd v_exp_neg_ysq(vd y) {
  vd t16 = _mm256_round_pd(y * vset(16.0), _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC) /
           vset(16.0);
  vd del = (y - t16) * (y + t16);
  return v_kexp(vneg(t16 * t16)) * v_kexp(vneg(del));
}

inline vd v_kerfc(vd x) {
  using namespace erfcc;
  vd y = vabs(x);
  vd m_r1 = _mm256_cmp_pd(y, vset(THRESH), _CMP_LE_OQ);
  vd m_r2 = _mm256_cmp_pd(y, vset(4.0), _CMP_LE_OQ);
  vd m_neg = _mm256_cmp_pd(x, vset(0.0), _CMP_LT_OQ);

  // |x| <= 0.46875: erfc = 1 - erf(x), no reflection afterwards.
  vd ysq = vsel(_mm256_cmp_pd(y, vset(XSMALL), _CMP_GT_OQ), y * y, vset(0.0));
  vd xnum = vset(A[4]) * ysq;
  vd xden = ysq;
  for (int i = 0; i < 3; ++i) {
    xnum = (xnum + vset(A[i])) * ysq;
    xden = (xden + vset(B[i])) * ysq;
  }
  vd r1 = vset(1.0) - x * (xnum + vset(A[3])) / (xden + vset(B[3]));

  vd edel = v_exp_neg_ysq(y);

  // 0.46875 < |x| <= 4
  xnum = vset(C[8]) * y;
  xden = y;
  for (int i = 0; i < 7; ++i) {
    xnum = (xnum + vset(C[i])) * y;
    xden = (xden + vset(D[i])) * y;
  }
  vd r2 = edel * ((xnum + vset(C[7])) / (xden + vset(D[7])));

  // |x| > 4
  vd ysq3 = vset(1.0) / (y * y);
  xnum = vset(P[5]) * ysq3;
  xden = ysq3;
  for (int i = 0; i < 4; ++i) {
    xnum = (xnum + vset(P[i])) * ysq3;
    xden = (xden + vset(Q[i])) * ysq3;
  }
  vd r3 = ysq3 * (xnum + vset(P[4])) / (xden + vset(Q[4]));
  r3 = edel * ((vset(SQRPI) - r3) / y);
  r3 = vsel(_mm256_cmp_pd(y, vset(XBIG), _CMP_GE_OQ), vset(0.0), r3);

  vd r23 = vsel(m_r2, r2, r3);
  r23 = vsel(m_neg, vset(2.0) - r23, r23);
  return vsel(m_r1, r1, r23);
}

inline vd v_knorm_cdf(vd x) {
  return vset(0.5) * v_kerfc(vneg(x * vset(kInvSqrt2)));
}

// ---------------------------------------------------------------------------
// inverse normal CDF
// ---------------------------------------------------------------------------

inline vd v_knorm_quantile(vd p) {
  using namespace qn;
  vd pc = vset(1.0) - p;
  vd pm = _mm256_min_pd(p, pc);  // (a<b)?a:b, as in the scalar reference
  vd q = pm - vset(0.5);
  vd m_central = _mm256_cmp_pd(vneg(q), vset(SPLIT1), _CMP_LE_OQ);

  vd rc = vset(CONST1) - q * q;
  vd x_c =
      q *
      (((((((vset(A7) * rc + vset(A6)) * rc + vset(A5)) * rc + vset(A4)) * rc + vset(A3)) * rc +
          vset(A2)) * rc + vset(A1)) * rc + vset(A0)) /
      (((((((vset(B7) * rc + vset(B6)) * rc + vset(B5)) * rc + vset(B4)) * rc + vset(B3)) * rc +
          vset(B2)) * rc + vset(B1)) * rc + vset(1.0));

  vd r = _mm256_sqrt_pd(vneg(v_klog(pm)));
  vd m_near = _mm256_cmp_pd(r, vset(SPLIT2), _CMP_LE_OQ);
  vd sn = r - vset(CONST2);
  vd ret_n =
      (((((((vset(C7) * sn + vset(C6)) * sn + vset(C5)) * sn + vset(C4)) * sn + vset(C3)) * sn +
          vset(C2)) * sn + vset(C1)) * sn + vset(C0)) /
      (((((((vset(D7) * sn + vset(D6)) * sn + vset(D5)) * sn + vset(D4)) * sn + vset(D3)) * sn +
          vset(D2)) * sn + vset(D1)) * sn + vset(1.0));
  vd sf = r - vset(SPLIT2);
  vd ret_f =
      (((((((vset(E7) * sf + vset(E6)) * sf + vset(E5)) * sf + vset(E4)) * sf + vset(E3)) * sf +
          vset(E2)) * sf + vset(E1)) * sf + vset(E0)) /
      (((((((vset(F7) * sf + vset(F6)) * sf + vset(F5)) * sf + vset(F4)) * sf + vset(F3)) * sf +
          vset(F2)) * sf + vset(F1)) * sf + vset(1.0));
  vd x_t = vneg(vsel(m_near, ret_n, ret_f));
  vd x0 = vsel(m_central, x_c, x_t);

  vd m_ref = _mm256_cmp_pd(vneg(x0), vset(REFINE_LIMIT), _CMP_LE_OQ);
  vd err = v_knorm_cdf(x0) - pm;
  vd u = err * vset(kSqrt2Pi) * v_kexp(vset(0.5) * x0 * x0);
  vd x1 = x0 - u / (vset(1.0) + vset(0.5) * x0 * u);
  x0 = vsel(m_ref, x1, x0);
  vd m_low = _mm256_cmp_pd(p, vset(0.5), _CMP_LE_OQ);
  return vsel(m_low, x0, vneg(x0));
}

// ---------------------------------------------------------------------------
// fill kernels
// ---------------------------------------------------------------------------

inline vi initial_states(std::uint64_t key, std::uint64_t c0) {
  std::uint64_t s0 = key + kGolden * (c0 + 1);
  return _mm256_setr_epi64x(
      static_cast<std::int64_t>(s0), static_cast<std::int64_t>(s0 + kGolden),
      static_cast<std::int64_t>(s0 + 2 * kGolden),
      static_cast<std::int64_t>(s0 + 3 * kGolden));
}

template <class VTrans, class STrans>
void fill_loop(std::uint64_t key, std::uint64_t c0, double* out, std::size_t n,
               VTrans&& vtrans, STrans&& strans) {
  std::size_t main = n & ~std::size_t{3};
  vi state = initial_states(key, c0);
  const vi step = vset64(static_cast<std::int64_t>(4 * kGolden));
  for (std::size_t i = 0; i < main; i += 4) {
    vd u = v_to_uniform01(v_sm_mix(state));
    _mm256_storeu_pd(out + i, vtrans(u));
    state = _mm256_add_epi64(state, step);
  }
  std::uint64_t s = key + kGolden * (c0 + main + 1);
  for (std::size_t i = main; i < n; ++i) {
    out[i] = strans(to_uniform01(sm_mix(s)));
    s += kGolden;
  }
}

void a_fill_uniform01(std::uint64_t key, std::uint64_t c0, double* out,
                      std::size_t n) {
  fill_loop(
      key, c0, out, n, [](vd u) { return u; }, [](double u) { return u; });
}

void a_fill_normal(std::uint64_t key, std::uint64_t c0, double mu, double sigma,
                   double* out, std::size_t n) {
  fill_loop(
      key, c0, out, n,
      [mu, sigma](vd u) { return vset(mu) + vset(sigma) * v_knorm_quantile(u); },
      [mu, sigma](double u) { return mu + sigma * knorm_quantile(u); });
}

void a_fill_exponential(std::uint64_t key, std::uint64_t c0, double rate,
                        double* out, std::size_t n) {
  fill_loop(
      key, c0, out, n,
      [rate](vd u) { return vneg(v_klog1p(vneg(u))) / vset(rate); },
      [rate](double u) { return -klog1p(-u) / rate; });
}

void a_fill_uniform_ab(std::uint64_t key, std::uint64_t c0, double a, double b,
                       double* out, std::size_t n) {
  double w = b - a;
  fill_loop(
      key, c0, out, n, [a, w](vd u) { return vset(a) + vset(w) * u; },
      [a, w](double u) { return a + w * u; });
}

void a_fill_lognormal(std::uint64_t key, std::uint64_t c0, double mu_log,
                      double sigma_log, double* out, std::size_t n) {
  fill_loop(
      key, c0, out, n,
      [mu_log, sigma_log](vd u) {
        return v_kexp(vset(mu_log) + vset(sigma_log) * v_knorm_quantile(u));
      },
      [mu_log, sigma_log](double u) {
        return kexp(mu_log + sigma_log * knorm_quantile(u));
      });
}

void a_fill_gamma_int(std::uint64_t key, std::uint64_t c0, int shape,
                      double rate, double* out, std::size_t n) {
  const std::uint64_t k = static_cast<std::uint64_t>(shape);
  std::size_t main = n & ~std::size_t{3};
  const vi lane_off = _mm256_setr_epi64x(
      0, static_cast<std::int64_t>(kGolden * k),
      static_cast<std::int64_t>(kGolden * (2 * k)),
      static_cast<std::int64_t>(kGolden * (3 * k)));
  const vi block_step = vset64(static_cast<std::int64_t>(kGolden * (4 * k)));
  vi base = _mm256_add_epi64(vset64(static_cast<std::int64_t>(key + kGolden * (c0 + 1))),
                             lane_off);
  const vi one_step = vset64(static_cast<std::int64_t>(kGolden));
  for (std::size_t i = 0; i < main; i += 4) {
    vi state = base;
    vd acc = vset(0.0);
    for (std::uint64_t j = 0; j < k; ++j) {
      vd u = v_to_uniform01(v_sm_mix(state));
      acc = acc + vneg(v_klog1p(vneg(u)));
      state = _mm256_add_epi64(state, one_step);
    }
    _mm256_storeu_pd(out + i, acc / vset(rate));
    base = _mm256_add_epi64(base, block_step);
  }
  for (std::size_t i = main; i < n; ++i) {
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

void a_shifted_moments(const double* x, std::size_t n, double shift,
                       double* sum, double* sumsq) {
  std::size_t main = n & ~std::size_t{3};
  vd vs = vset(0.0);
  vd vq = vset(0.0);
  const vd vshift = vset(shift);
  for (std::size_t i = 0; i < main; i += 4) {
    vd d = _mm256_loadu_pd(x + i) - vshift;
    vs = vs + d;
    vq = vq + d * d;
  }
  alignas(32) double s[4];
  alignas(32) double q[4];
  _mm256_store_pd(s, vs);
  _mm256_store_pd(q, vq);
  for (std::size_t i = main; i < n; ++i) {
    double d = x[i] - shift;
    s[i & 3] += d;
    q[i & 3] += d * d;
  }
  *sum = (s[0] + s[2]) + (s[1] + s[3]);
  *sumsq = (q[0] + q[2]) + (q[1] + q[3]);
}

}  // namespace

const Kernels* avx2_kernels() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Kernels table = {
      "avx2",          a_fill_uniform01, a_fill_normal,
      a_fill_exponential, a_fill_uniform_ab, a_fill_lognormal,
      a_fill_gamma_int, a_shifted_moments,
  };
  return &table;
}

}  // namespace coverr::kern

#else  // non-x86 build: no AVX2 kernels

#include "coverr/kern/kernels.hpp"

namespace coverr::kern {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace coverr::kern

#endif
