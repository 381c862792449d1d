#pragma once
//
// The one-parameter family of H^1 functions on which the backward shift
// attains its norm:
//   f(z) = C * ( (1 + lambda I(z)) / (1 - lambda I(z)) )^2,
// I a finite Blaschke product vanishing at the origin, 0 < lambda < 1. The
// shift ratio of f depends only on lambda; the normalized mean follows
//   x(lambda) = (1 - lambda^2) / (1 + 3 lambda^2),
// and lambda = 1/sqrt(3) lands on the maximizer x = 1/3 of the bound curve
//   sqrt((1 + x)^2 - 4 x^2),
// whose peak value is the sharp constant 2/sqrt(3).
//

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hardylab/blaschke.hpp"
#include "hardylab/defaults.hpp"
#include "hardylab/shift.hpp"

namespace hardylab {

struct ExtremalSpec {
  double lambda = kExtremalLambda;
  BlaschkeSpec inner = BlaschkeSpec::monomial(1);
  cplx scale{1.0, 0.0};

  void validate() const {
    if (std::isnan(lambda) || lambda <= 0.0 || lambda >= 1.0)
      throw std::invalid_argument("ExtremalSpec: need 0 < lambda < 1");
    inner.validate();
    if (inner.origin_multiplicity < 1)
      throw std::invalid_argument("ExtremalSpec: inner factor must vanish at the origin");
    if (scale == cplx{0.0, 0.0})
      throw std::invalid_argument("ExtremalSpec: scale must be nonzero");
  }
};

// Well defined on |z| <= 1: |lambda I| <= lambda < 1 keeps the denominator
// away from zero.
inline cplx extremal_eval(const ExtremalSpec& e, cplx z) {
  const cplx li = e.lambda * blaschke_eval(e.inner, z);
  const cplx q = (1.0 + li) / (1.0 - li);
  return e.scale * q * q;
}

// Normalized mean |f(0)| / ||f||_1 of the family member with parameter
// lambda, in closed form.
inline double x_of_lambda(double lambda) {
  if (std::isnan(lambda) || lambda <= 0.0 || lambda >= 1.0)
    throw std::invalid_argument("x_of_lambda: need 0 < lambda < 1");
  const double l2 = lambda * lambda;
  return (1.0 - l2) / (1.0 + 3.0 * l2);
}

struct BoundCurvePoint {
  double x = 0.0;
  double value = 0.0;
};

// Upper bound for the p = 1 shift ratio of a function with normalized mean x.
inline BoundCurvePoint bound_curve(double x) {
  if (std::isnan(x) || x < 0.0 || x > 1.0)
    throw std::invalid_argument("bound_curve: need 0 <= x <= 1");
  const double s = (1.0 + x) * (1.0 + x) - 4.0 * x * x;
  return BoundCurvePoint{x, std::sqrt(s)};
}

// Closed-form maximizer of the bound curve.
inline BoundCurvePoint argmax_bound_curve() { return BoundCurvePoint{1.0 / 3.0, kSharpH1}; }

// Samples the family member on a boundary grid and measures its p = 1 shift
// ratio. For lambda = 1/sqrt(3) the ratio reproduces 2/sqrt(3) regardless of
// the inner factor or the scale.
inline RatioReport verify_extremal(const ExtremalSpec& e, std::size_t n) {
  e.validate();
  return ratio_report_fn([&](cplx z) { return extremal_eval(e, z); }, PExponent(1.0), n);
}

}  // namespace hardylab
