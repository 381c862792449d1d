#pragma once
//
// Deterministic random stream: splitmix64 words, Box-Muller gaussians, and
// the random coefficient vectors used by the searches and property checks.
// Self-contained on purpose; results must be bit-identical across platforms
// and library versions.
//

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "hardylab/defaults.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; pairs are cached so one uniform pair
  // yields two gaussians.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // shift into (0, 1] so the log is finite
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Standard complex gaussian: independent N(0, 1/2) real and imaginary
  // parts, so E|g|^2 = 1. Real part is drawn first.
  cplx complex_gaussian() {
    constexpr double half_var = 1.0 / std::numbers::sqrt2;
    const double re = gaussian() * half_var;
    const double im = gaussian() * half_var;
    return cplx{re, im};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Derives the stream seed for one restart of a multi-restart search. Mixing
// the index through the splitmix increment keeps the restart streams
// decorrelated while staying a pure function of (base, index).
inline std::uint64_t restart_seed(std::uint64_t base, int restart_index) {
  return base + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart_index + 1);
}

// Polynomial of the given degree with standard complex gaussian coefficients.
inline TaylorCoeffs random_poly(RandomStream& rng, int degree) {
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (cplx& a : c) a = rng.complex_gaussian();
  return TaylorCoeffs(std::move(c));
}

}  // namespace hardylab
