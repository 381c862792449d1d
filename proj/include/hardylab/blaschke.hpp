#pragma once
//
// Finite Blaschke products
//   I(z) = z^m prod_j ( (|a_j|/a_j) (a_j - z) / (1 - conj(a_j) z) )^{m_j}
// with zeros a_j inside the punctured disc. Each factor is normalized to be
// positive at the origin, so I(0) = 0 iff m >= 1.
//

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hardylab/defaults.hpp"

namespace hardylab {

struct BlaschkeZero {
  cplx position;
  int multiplicity = 1;
};

struct BlaschkeSpec {
  int origin_multiplicity = 0;
  std::vector<BlaschkeZero> zeros;

  static BlaschkeSpec monomial(int m) {
    BlaschkeSpec b;
    b.origin_multiplicity = m;
    b.validate();
    return b;
  }

  void validate() const {
    if (origin_multiplicity < 0)
      throw std::invalid_argument("BlaschkeSpec: origin multiplicity must be >= 0");
    for (const BlaschkeZero& z : zeros) {
      const double r = std::abs(z.position);
      if (!(r > 0.0) || r >= 1.0)
        throw std::invalid_argument("BlaschkeSpec: zeros must satisfy 0 < |a| < 1");
      if (z.multiplicity < 1)
        throw std::invalid_argument("BlaschkeSpec: multiplicities must be >= 1");
    }
  }

  int degree() const {
    int d = origin_multiplicity;
    for (const BlaschkeZero& z : zeros) d += z.multiplicity;
    return d;
  }
};

namespace detail {
inline cplx ipow(cplx b, int e) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace detail

// Valid on the closed disc away from the factor poles at 1/conj(a_j), which
// lie outside |z| <= 1.
inline cplx blaschke_eval(const BlaschkeSpec& b, cplx z) {
  cplx r = detail::ipow(z, b.origin_multiplicity);
  for (const BlaschkeZero& zero : b.zeros) {
    const cplx a = zero.position;
    const cplx factor = (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    r *= detail::ipow(factor, zero.multiplicity);
  }
  return r;
}

}  // namespace hardylab
