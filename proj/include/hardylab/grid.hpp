#pragma once
//
// Uniform boundary grids on the unit circle and the transforms between
// coefficient space and sample space.
//
// Conventions, fixed once for the whole project:
//   to_grid:   samples[k] = sum_j a_j e^{+2 pi i jk/N}   (plain evaluation)
//   to_coeffs: a_j = (1/N) sum_k samples[k] e^{-2 pi i jk/N}
// so to_coeffs(to_grid(f, N), d) recovers f exactly (up to rounding) whenever
// d <= degree(f) < N, and for non-polynomial data implements aliased Fourier
// coefficients of the sampled boundary function.
//

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hardylab/fft.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

// Samples of a boundary function at the N-th roots of unity, in index order
// k = 0..N-1, node w_k = e^{2 pi i k/N}. N is a power of two, N >= 4.
struct BoundaryGrid {
  std::vector<cplx> samples;

  static BoundaryGrid from_samples(std::vector<cplx> s) {
    if (s.size() < 4 || !is_pow2(s.size()))
      throw std::invalid_argument("BoundaryGrid: N must be a power of two, N >= 4");
    BoundaryGrid g;
    g.samples = std::move(s);
    return g;
  }

  std::size_t size() const { return samples.size(); }
};

inline cplx circle_node(std::size_t k, std::size_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

// Samples an arbitrary boundary-evaluable handle at the grid nodes.
template <typename Fn>
BoundaryGrid sample_on_circle(Fn&& fn, std::size_t n) {
  if (n < 4 || !is_pow2(n))
    throw std::invalid_argument("sample_on_circle: N must be a power of two, N >= 4");
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = fn(circle_node(k, n));
  return BoundaryGrid::from_samples(std::move(s));
}

// Exact boundary values of a polynomial via one FFT. Requires N > degree so
// that no coefficient aliases.
inline BoundaryGrid to_grid(const TaylorCoeffs& f, std::size_t n) {
  if (n < 4 || !is_pow2(n))
    throw std::invalid_argument("to_grid: N must be a power of two, N >= 4");
  if (f.coeffs.size() > n)
    throw std::invalid_argument("to_grid: grid size must exceed polynomial degree");
  std::vector<cplx> v(n, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) v[j] = f.coeffs[j];
  detail::fft_inplace(v, +1);
  return BoundaryGrid::from_samples(std::move(v));
}

// First d+1 discrete Fourier coefficients of the sampled boundary function.
inline TaylorCoeffs to_coeffs(const BoundaryGrid& g, int degree) {
  const std::size_t n = g.size();
  if (degree < 0 || static_cast<std::size_t>(degree) >= n)
    throw std::invalid_argument("to_coeffs: need 0 <= degree < N");
  std::vector<cplx> v = g.samples;
  detail::fft_inplace(v, -1);
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<cplx> out(static_cast<std::size_t>(degree) + 1);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = v[j] * inv_n;
  return TaylorCoeffs(std::move(out));
}

}  // namespace hardylab
