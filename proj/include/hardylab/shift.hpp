#pragma once
//
// The backward shift B f(z) = (f(z) - f(0)) / z, in coefficient space and in
// sample space, disc automorphisms, and the norm-ratio report the rest of the
// project is built around.
//

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hardylab/grid.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

// (a_0, ..., a_d) -> (a_1, ..., a_d); a constant maps to the zero function.
inline TaylorCoeffs backward_shift(const TaylorCoeffs& f) {
  if (f.coeffs.size() == 1) return TaylorCoeffs();
  return TaylorCoeffs(std::vector<cplx>(f.coeffs.begin() + 1, f.coeffs.end()));
}

// Sample-space shift: s_k -> (s_k - f0) * conj(w_k). Exact on the grid
// because division by z is rotation by conj(w_k) on |z| = 1. The caller
// supplies f0 = mean_value(g); it is not recomputed here so that one mean
// can serve both the report and the shift.
inline BoundaryGrid backward_shift_grid(const BoundaryGrid& g, cplx f0) {
  const std::size_t n = g.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = (g.samples[k] - f0) * std::conj(circle_node(k, n));
  return BoundaryGrid::from_samples(std::move(out));
}

// phi_w(z) = (w - z) / (1 - conj(w) z), an automorphism of the disc.
struct DiscAutomorphism {
  cplx w;

  explicit DiscAutomorphism(cplx w_) : w(w_) {
    if (std::abs(w) >= 1.0) throw std::invalid_argument("DiscAutomorphism: need |w| < 1");
  }
  cplx operator()(cplx z) const { return (w - z) / (1.0 - std::conj(w) * z); }
};

// One norm-ratio measurement: ||Bf||_p / ||f||_p together with the mean and
// the normalized mean x = |f(0)| / ||f||_p used by the bound curve at p = 1.
struct RatioReport {
  double norm_f = 0.0;
  double norm_bf = 0.0;
  cplx f0{0.0, 0.0};
  double ratio = 0.0;
  double x = 0.0;
};

inline RatioReport ratio_report(const BoundaryGrid& g, const PExponent& p) {
  RatioReport r;
  r.f0 = mean_value(g);
  r.norm_f = norm_p(g, p);
  if (r.norm_f == 0.0) throw std::invalid_argument("ratio_report: zero function");
  r.norm_bf = norm_p(backward_shift_grid(g, r.f0), p);
  r.ratio = r.norm_bf / r.norm_f;
  r.x = std::abs(r.f0) / r.norm_f;
  return r;
}

inline RatioReport ratio_report(const TaylorCoeffs& f, const PExponent& p, std::size_t n) {
  return ratio_report(to_grid(f, n), p);
}

template <typename Fn>
RatioReport ratio_report_fn(Fn&& fn, const PExponent& p, std::size_t n) {
  return ratio_report(sample_on_circle(fn, n), p);
}

}  // namespace hardylab
