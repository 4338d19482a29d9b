#ifndef COVERR_KERN_KERNELS_HPP
#define COVERR_KERN_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Batch kernels for the Monte Carlo hot path: counter-based uniform
// generation, inverse-CDF transforms per sampling family, and the shifted
// moment reduction.  A scalar reference implementation is always available;
// an AVX2 implementation is selected at runtime when the CPU supports it.
// Both produce bit-identical output (enforced by tests), so kernel selection
// never changes simulation results.

namespace coverr::kern {

struct Kernels {
  const char* name;

  // Each fill writes n values; element i consumes the substream counters
  // starting at counter0 + i (times the per-draw counter width for gamma).
  void (*fill_uniform01)(std::uint64_t key, std::uint64_t counter0,
                         double* out, std::size_t n);
  void (*fill_normal)(std::uint64_t key, std::uint64_t counter0, double mu,
                      double sigma, double* out, std::size_t n);
  void (*fill_exponential)(std::uint64_t key, std::uint64_t counter0,
                           double rate, double* out, std::size_t n);
  void (*fill_uniform_ab)(std::uint64_t key, std::uint64_t counter0, double a,
                          double b, double* out, std::size_t n);
  void (*fill_lognormal)(std::uint64_t key, std::uint64_t counter0,
                         double mu_log, double sigma_log, double* out,
                         std::size_t n);
  // Sum of `shape` inverse-CDF exponentials per draw; draw i consumes
  // counters [counter0 + i*shape, counter0 + (i+1)*shape).
  void (*fill_gamma_int)(std::uint64_t key, std::uint64_t counter0, int shape,
                         double rate, double* out, std::size_t n);

  // sum   = sum_i (x[i] - shift)
  // sumsq = sum_i (x[i] - shift)^2
  // Accumulation is striped over four lanes (i & 3) and combined as
  // (l0+l2)+(l1+l3); the scalar and vector paths share this geometry.
  void (*shifted_moments)(const double* x, std::size_t n, double shift,
                          double* sum, double* sumsq);
};

const Kernels& scalar_kernels();

// AVX2 implementation, or nullptr when the build/CPU cannot run it.
const Kernels* avx2_kernels();

// Runtime-dispatched table.  Honors COVERR_KERNELS={scalar,avx2} for tests;
// since both implementations agree bitwise the choice is unobservable in
// results.
const Kernels& active_kernels();

}  // namespace coverr::kern

#endif  // COVERR_KERN_KERNELS_HPP
