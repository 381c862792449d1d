#pragma once
//
// Dense Taylor coefficient vectors and point evaluation.
//

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardylab/defaults.hpp"

namespace hardylab {

// Coefficients (a_0, a_1, ..., a_d) of a polynomial / truncated power series.
// Always nonempty; a zero function is the single coefficient {0}.
struct TaylorCoeffs {
  std::vector<cplx> coeffs;

  TaylorCoeffs() : coeffs{cplx{0.0, 0.0}} {}
  explicit TaylorCoeffs(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("TaylorCoeffs: empty coefficient vector");
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const cplx& operator[](std::size_t k) const { return coeffs[k]; }
  cplx& operator[](std::size_t k) { return coeffs[k]; }
};

// Horner evaluation. evaluate(f, 0) returns coeffs[0] exactly.
inline cplx evaluate(const TaylorCoeffs& f, cplx z) {
  cplx acc{0.0, 0.0};
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Drops trailing zero coefficients, always keeping a_0. Idempotent.
inline TaylorCoeffs trim(const TaylorCoeffs& f) {
  std::size_t n = f.coeffs.size();
  while (n > 1 && f.coeffs[n - 1] == cplx{0.0, 0.0}) --n;
  return TaylorCoeffs(std::vector<cplx>(f.coeffs.begin(), f.coeffs.begin() + n));
}

}  // namespace hardylab
