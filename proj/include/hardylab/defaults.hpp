#pragma once
//
// Project-wide constants and run defaults. Every tunable the CLI exposes is
// defined here once; flags and config files override these values.
//

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace hardylab {

using cplx = std::complex<double>;

inline constexpr const char* kToolVersion = "0.1.0";

// lambda of the H^1 extremal family, stored as 3^{-1/2} at full precision
inline constexpr double kExtremalLambda = std::numbers::inv_sqrt3;

// sharp H^1 norm of the backward shift, 2/sqrt(3)
inline constexpr double kSharpH1 = 2.0 * std::numbers::inv_sqrt3;

inline constexpr std::size_t kDefaultGridN = 4096;
inline constexpr double kDefaultTol = 1e-8;
inline constexpr int kDefaultRestarts = 16;
inline constexpr int kDefaultMaxIters = 2000;
inline constexpr int kDefaultDegree = 8;
inline constexpr std::uint64_t kDefaultSeed = 1;

// |f| can lose smoothness where the boundary curve passes through zero, and
// f^{1/2} is discontinuous where Arg f wraps; those computations default to a
// finer grid than the smooth-integrand default above.
inline constexpr std::size_t kKinkGridN = 1u << 16;

// near-boundary radius for the inner-factor modulus check
inline constexpr double kCheckRadius = 0.999;
inline constexpr int kCheckDirections = 256;

// slack added to theorem bounds when they gate exit codes
inline constexpr double kSoundnessSlack = 1e-6;

}  // namespace hardylab
