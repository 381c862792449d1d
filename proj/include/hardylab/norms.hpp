#pragma once
//
// Boundary H^p norms by periodic trapezoid quadrature (= grid means), the
// mean value functional, and the reference operator-norm bounds the search
// results are compared against.
//

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "hardylab/defaults.hpp"
#include "hardylab/fft.hpp"
#include "hardylab/grid.hpp"

namespace hardylab {

// Lebesgue exponent p in [1, inf]. The sup norm is the is_inf() state; all
// finite values keep their double representation.
class PExponent {
 public:
  explicit PExponent(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0)
      throw std::invalid_argument("PExponent: need p >= 1");
  }
  static PExponent inf() { return PExponent(std::numeric_limits<double>::infinity()); }

  bool is_inf() const { return std::isinf(p_); }
  double value() const { return p_; }

  friend bool operator==(const PExponent& a, const PExponent& b) { return a.p_ == b.p_; }

 private:
  double p_;
};

// ( (1/N) sum |s_k|^p )^{1/p}, max |s_k| for p = inf. The grid mean is the
// periodic trapezoid rule, spectrally accurate for smooth |f|^p.
inline double norm_p(const BoundaryGrid& g, const PExponent& p) {
  const std::size_t n = g.size();
  if (p.is_inf()) {
    double m = 0.0;
    for (const cplx& s : g.samples) m = std::max(m, std::abs(s));
    return m;
  }
  const double pv = p.value();
  double mean;
  if (pv == 1.0) {
    mean = detail::pairwise_sum(0, n, [&](std::size_t k) { return std::abs(g.samples[k]); });
  } else if (pv == 2.0) {
    mean = detail::pairwise_sum(0, n, [&](std::size_t k) { return std::norm(g.samples[k]); });
  } else {
    mean = detail::pairwise_sum(0, n, [&](std::size_t k) { return std::pow(std::abs(g.samples[k]), pv); });
  }
  mean /= static_cast<double>(n);
  if (pv == 1.0) return mean;
  if (pv == 2.0) return std::sqrt(mean);
  return std::pow(mean, 1.0 / pv);
}

// (1/N) sum s_k; equals the zeroth Fourier coefficient, i.e. f(0) for
// analytic data.
inline cplx mean_value(const BoundaryGrid& g) {
  const cplx total =
      detail::pairwise_sum(0, g.size(), [&](std::size_t k) { return g.samples[k]; });
  return total / static_cast<double>(g.size());
}

enum class BoundKind {
  trivial,       // 2, any p
  riesz_thorin,  // 2^{|1-2/p|}, any p
  ferguson_h1,   // 1.7047, p = 1 only
  sharp_h1,      // 2/sqrt(3), p = 1 only
  h2,            // 1, p = 2 only
  h_inf,         // 2, p = inf only
};

// Known bounds for the shift ratio at exponent p. Throws when the kind does
// not apply at that exponent.
inline double reference_bound(const PExponent& p, BoundKind kind) {
  const bool p1 = !p.is_inf() && p.value() == 1.0;
  const bool p2 = !p.is_inf() && p.value() == 2.0;
  switch (kind) {
    case BoundKind::trivial:
      return 2.0;
    case BoundKind::riesz_thorin: {
      const double e = p.is_inf() ? 1.0 : std::abs(1.0 - 2.0 / p.value());
      return std::pow(2.0, e);
    }
    case BoundKind::ferguson_h1:
      if (!p1) throw std::invalid_argument("reference_bound: ferguson_h1 needs p = 1");
      return 1.7047;
    case BoundKind::sharp_h1:
      if (!p1) throw std::invalid_argument("reference_bound: sharp_h1 needs p = 1");
      return kSharpH1;
    case BoundKind::h2:
      if (!p2) throw std::invalid_argument("reference_bound: h2 needs p = 2");
      return 1.0;
    case BoundKind::h_inf:
      if (!p.is_inf()) throw std::invalid_argument("reference_bound: h_inf needs p = inf");
      return 2.0;
  }
  throw std::invalid_argument("reference_bound: unknown kind");
}

}  // namespace hardylab
