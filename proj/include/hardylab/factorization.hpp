#pragma once
//
// Principal boundary square roots, the square-root mean-value gap, and
// numerical inner-outer factorization from boundary samples.
//
// The outer factor is reconstructed through the Herglotz kernel,
//   F(z) = exp( (1/N) sum_k (w_k + z)/(w_k - z) log|s_k| ),
// which is the trapezoid discretization of the boundary representation of an
// outer function. The kernel blows up near the boundary, so evaluation is
// restricted to 1 - |z| >= 10 * (2 pi / N); callers wanting values nearer the
// circle must refine the grid first.
//

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "hardylab/defaults.hpp"
#include "hardylab/fft.hpp"
#include "hardylab/grid.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

// Boundary samples of f^{1/2}; kept distinct from BoundaryGrid because these
// values are generally not samples of an analytic function.
struct SqrtGrid {
  std::vector<cplx> samples;
  std::size_t size() const { return samples.size(); }
};

// Pointwise principal square root sqrt(|s|) e^{i Arg(s)/2}, Arg in (-pi, pi],
// and 0 at exact zeros.
inline SqrtGrid sqrt_principal(const BoundaryGrid& g) {
  SqrtGrid out;
  out.samples.resize(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const cplx s = g.samples[k];
    out.samples[k] =
        (s == cplx{0.0, 0.0}) ? cplx{0.0, 0.0} : std::polar(std::sqrt(std::abs(s)), std::arg(s) / 2.0);
  }
  return out;
}

// Re mean(f^{1/2}) - sqrt(f0) for f0 = f(0) >= 0. Nonnegative for analytic f
// up to quadrature error; zero exactly when f^{1/2} is itself analytic.
inline double lemma_gap(const BoundaryGrid& g, double f0) {
  if (std::isnan(f0) || f0 < 0.0) throw std::invalid_argument("lemma_gap: need f(0) >= 0");
  const SqrtGrid r = sqrt_principal(g);
  const double mean_re =
      detail::pairwise_sum(0, r.size(), [&](std::size_t k) { return r.samples[k].real(); }) /
      static_cast<double>(r.size());
  return mean_re - std::sqrt(f0);
}

// Outer factor of the sampled boundary data, evaluable at interior points.
// Construction rejects grids with exact boundary zeros: log|f| is then
// undefined at a node and the quadrature meaningless.
class OuterEvaluator {
 public:
  explicit OuterEvaluator(const BoundaryGrid& g) : n_(g.size()) {
    log_abs_.resize(n_);
    nodes_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const double a = std::abs(g.samples[k]);
      if (a == 0.0)
        throw std::invalid_argument("OuterEvaluator: boundary sample is exactly zero");
      log_abs_[k] = std::log(a);
      nodes_[k] = circle_node(k, n_);
    }
  }

  cplx operator()(cplx z) const {
    const double margin = 10.0 * (2.0 * std::numbers::pi / static_cast<double>(n_));
    if (!(1.0 - std::abs(z) >= margin))
      throw std::invalid_argument("OuterEvaluator: point too close to the boundary for this grid");
    const cplx total = detail::pairwise_sum(0, n_, [&](std::size_t k) {
      return (nodes_[k] + z) / (nodes_[k] - z) * log_abs_[k];
    });
    return std::exp(total / static_cast<double>(n_));
  }

 private:
  std::size_t n_;
  std::vector<double> log_abs_;
  std::vector<cplx> nodes_;
};

inline cplx outer_part(const BoundaryGrid& g, cplx z) { return OuterEvaluator(g)(z); }

// I = f / F at each point; |I| <= 1 inside the disc when the grid resolves f.
// f itself is evaluated through its full set of grid Fourier coefficients
// (degree N-1), exact up to rounding for polynomial data of degree < N.
inline std::vector<cplx> inner_part(const BoundaryGrid& g, std::span<const cplx> points) {
  const OuterEvaluator outer(g);
  const TaylorCoeffs c = to_coeffs(g, static_cast<int>(g.size()) - 1);
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const cplx& z : points) {
    const cplx f = evaluate(c, z);
    const cplx fo = outer(z);
    if (std::abs(fo) < 1e-292)
      throw std::invalid_argument("inner_part: outer factor vanishes numerically");
    out.push_back(f / fo);
  }
  return out;
}

// Max over directions of | |I| - 1 | with |I| extrapolated to the circle from
// three interior radii (radius - 0.002, radius - 0.001, radius). The
// quadratic Richardson step removes the O(1 - r) modulus deficit of inner
// factors, so clean factorizations come out at ~1e-10 rather than ~1e-3.
inline double inner_radial_unimodularity(const BoundaryGrid& g, double radius = kCheckRadius,
                                         int directions = kCheckDirections) {
  if (!(radius > 0.0) || radius >= 1.0)
    throw std::invalid_argument("inner_radial_unimodularity: need 0 < radius < 1");
  if (directions < 1)
    throw std::invalid_argument("inner_radial_unimodularity: need directions >= 1");
  const OuterEvaluator outer(g);
  const TaylorCoeffs c = to_coeffs(g, static_cast<int>(g.size()) - 1);
  const double radii[3] = {radius - 0.002, radius - 0.001, radius};
  if (!(radii[0] > 0.0))
    throw std::invalid_argument("inner_radial_unimodularity: radius too small to extrapolate");
  double worst = 0.0;
  for (int j = 0; j < directions; ++j) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                       static_cast<double>(directions));
    double v[3];
    for (int i = 0; i < 3; ++i) {
      const cplx z = radii[i] * w;
      v[i] = std::abs(evaluate(c, z) / outer(z));
    }
    const double at_boundary = 3.0 * v[2] - 3.0 * v[1] + v[0];
    worst = std::max(worst, std::abs(at_boundary - 1.0));
  }
  return worst;
}

}  // namespace hardylab
