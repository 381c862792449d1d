#pragma once
//
// Radix-2 FFT on power-of-two grids plus pairwise summation helpers.
// Everything downstream (quadrature, Taylor transforms) funnels through
// these two primitives, so they are kept deterministic: no threading, no
// runtime dispatch, fixed twiddle construction.
//

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardylab/defaults.hpp"

namespace hardylab {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

// In-place iterative Cooley-Tukey. sign = +1 computes
//   v[j] <- sum_k v[k] e^{+2 pi i jk/N},
// sign = -1 the conjugate transform. No 1/N scaling on either direction.
inline void fft_inplace(std::vector<cplx>& v, int sign) {
  const std::size_t n = v.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }

  // One table of e^{sign 2 pi i k/N}; stage `len` strides it by N/len.
  std::vector<cplx> tw(n / 2);
  const double base = static_cast<double>(sign) * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, base * static_cast<double>(k));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = v[i + k];
        const cplx t = tw[k * stride] * v[i + k + len / 2];
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
      }
    }
  }
}

// Pairwise reduction of term(lo) + ... + term(hi-1); keeps rounding error at
// O(log N) ulps, which the 1e-10 grid tolerances rely on at N = 2^16.
template <typename F>
auto pairwise_sum(std::size_t lo, std::size_t hi, const F& term) -> decltype(term(std::size_t{})) {
  using R = decltype(term(std::size_t{}));
  if (hi - lo <= 16) {
    R s{};
    for (std::size_t k = lo; k < hi; ++k) s += term(k);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

}  // namespace detail
}  // namespace hardylab
