#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hardylab/extremal.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/shift.hpp"

using namespace hardylab;

namespace {
BoundaryGrid canonical_extremal_grid(std::size_t n) {
  const double l = std::numbers::inv_sqrt3;
  return sample_on_circle(
      [&](cplx z) {
        const cplx q = (1.0 + l * z) / (1.0 - l * z);
        return q * q;
      },
      n);
}
}  // namespace

TEST_CASE("backward shift on coefficients") {
  TaylorCoeffs f({cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{3.0, 0.0}});
  TaylorCoeffs bf = backward_shift(f);
  REQUIRE(bf.degree() == 1);
  CHECK(bf.coeffs[0] == cplx{2.0, 0.0});
  CHECK(bf.coeffs[1] == cplx{3.0, 0.0});

  TaylorCoeffs c({cplx{5.0, 0.0}});
  TaylorCoeffs bc = backward_shift(c);
  REQUIRE(bc.degree() == 0);
  CHECK(bc.coeffs[0] == cplx{0.0, 0.0});
}

TEST_CASE("backward shift on grids") {
  SECTION("constants map to zero") {
    BoundaryGrid g = to_grid(TaylorCoeffs({cplx{4.0, 1.0}}), 16);
    BoundaryGrid bg = backward_shift_grid(g, mean_value(g));
    for (const cplx& s : bg.samples) CHECK(std::abs(s) < 1e-13);
  }
  SECTION("the identity maps to one") {
    BoundaryGrid g = to_grid(TaylorCoeffs({cplx{0.0, 0.0}, cplx{1.0, 0.0}}), 16);
    BoundaryGrid bg = backward_shift_grid(g, mean_value(g));
    for (const cplx& s : bg.samples) CHECK(std::abs(s - cplx{1.0, 0.0}) < 1e-13);
  }
  SECTION("agrees with the coefficient-space shift") {
    RandomStream rng(31);
    for (int t = 0; t < 20; ++t) {
      TaylorCoeffs f = random_poly(rng, 12);
      BoundaryGrid g = to_grid(f, 64);
      BoundaryGrid lhs = backward_shift_grid(g, mean_value(g));
      BoundaryGrid rhs = to_grid(backward_shift(f), 64);
      for (std::size_t k = 0; k < 64; ++k) CHECK(std::abs(lhs.samples[k] - rhs.samples[k]) < 1e-11);
    }
  }
}

TEST_CASE("disc automorphisms") {
  SECTION("w = 0 is minus the identity") {
    DiscAutomorphism phi(cplx{0.0, 0.0});
    CHECK(phi(cplx{0.3, 0.2}) == cplx{-0.3, -0.2});
  }
  SECTION("interchanges 0 and w, and is an involution") {
    DiscAutomorphism phi(cplx{0.4, -0.3});
    CHECK(std::abs(phi(cplx{0.0, 0.0}) - cplx{0.4, -0.3}) < 1e-15);
    CHECK(std::abs(phi(cplx{0.4, -0.3})) < 1e-15);
    RandomStream rng(32);
    for (int t = 0; t < 20; ++t) {
      const cplx z = 0.9 * rng.complex_gaussian() / (1.0 + std::abs(rng.complex_gaussian()));
      if (std::abs(z) >= 1.0) continue;
      CHECK(std::abs(phi(phi(z)) - z) < 1e-13);
    }
  }
  SECTION("boundary of the parameter disc is rejected") {
    CHECK_THROWS_AS(DiscAutomorphism(cplx{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(DiscAutomorphism(cplx{0.8, 0.8}), std::invalid_argument);
  }
  SECTION("sup-norm shift ratio of phi_w is 1 + |w|") {
    const cplx w{0.5, 0.0};
    RatioReport r = ratio_report_fn(DiscAutomorphism(w), PExponent::inf(), 1u << 16);
    CHECK(r.norm_f == Catch::Approx(1.0).margin(1e-10));
    CHECK(r.ratio == Catch::Approx(1.5).margin(1e-4));
  }
}

TEST_CASE("ratio report") {
  SECTION("identity function") {
    RatioReport r = ratio_report(TaylorCoeffs({cplx{0.0, 0.0}, cplx{1.0, 0.0}}), PExponent(1.0), 64);
    CHECK(r.ratio == Catch::Approx(1.0).margin(1e-13));
    CHECK(std::abs(r.f0) < 1e-14);
    CHECK(r.x == Catch::Approx(0.0).margin(1e-13));
  }
  SECTION("extremal member attains the sharp ratio") {
    RatioReport r = ratio_report(canonical_extremal_grid(4096), PExponent(1.0));
    CHECK(r.ratio == Catch::Approx(2.0 * std::numbers::inv_sqrt3).margin(1e-8));
    CHECK(r.x == Catch::Approx(1.0 / 3.0).margin(1e-8));
    CHECK(r.norm_f == Catch::Approx(3.0).margin(1e-8));
    CHECK(r.norm_bf == Catch::Approx(2.0 * std::numbers::sqrt3).margin(1e-8));
  }
  SECTION("1 + z at p = 2") {
    RatioReport r = ratio_report(TaylorCoeffs({cplx{1.0, 0.0}, cplx{1.0, 0.0}}), PExponent(2.0), 64);
    CHECK(r.ratio == Catch::Approx(1.0 / std::numbers::sqrt2).margin(1e-10));
  }
  SECTION("the zero function is rejected") {
    CHECK_THROWS_AS(ratio_report(TaylorCoeffs({cplx{0.0, 0.0}}), PExponent(1.0), 16),
                    std::invalid_argument);
  }
}

TEST_CASE("shift ratio invariances") {
  RandomStream rng(33);
  SECTION("scaling and rotation leave the ratio unchanged") {
    for (int t = 0; t < 10; ++t) {
      TaylorCoeffs f = random_poly(rng, 10);
      const RatioReport base = ratio_report(f, PExponent(1.0), 512);

      std::vector<cplx> scaled = f.coeffs;
      for (cplx& a : scaled) a *= cplx{-1.7, 2.2};
      CHECK(ratio_report(TaylorCoeffs(scaled), PExponent(1.0), 512).ratio ==
            Catch::Approx(base.ratio).margin(1e-10));

      const double alpha = 0.83;
      std::vector<cplx> rotated = f.coeffs;
      for (std::size_t k = 0; k < rotated.size(); ++k)
        rotated[k] *= std::polar(1.0, alpha * static_cast<double>(k));
      CHECK(ratio_report(TaylorCoeffs(rotated), PExponent(1.0), 512).ratio ==
            Catch::Approx(base.ratio).margin(1e-10));
    }
  }
  SECTION("Pythagoras at p = 2") {
    for (int t = 0; t < 100; ++t) {
      TaylorCoeffs f = random_poly(rng, 1 + static_cast<int>(rng.next_u64() % 16));
      RatioReport r = ratio_report(f, PExponent(2.0), 256);
      const double lhs = r.norm_bf * r.norm_bf;
      const double rhs = r.norm_f * r.norm_f - std::norm(r.f0);
      CHECK(lhs == Catch::Approx(rhs).epsilon(1e-10));
    }
  }
  SECTION("ratio never exceeds 2 at any exponent") {
    for (int t = 0; t < 50; ++t) {
      TaylorCoeffs f = random_poly(rng, 8);
      for (double p : {1.0, 2.0, 3.5}) CHECK(ratio_report(f, PExponent(p), 256).ratio <= 2.0 + 1e-9);
      CHECK(ratio_report(f, PExponent::inf(), 256).ratio <= 2.0 + 1e-9);
    }
  }
  SECTION("p = 1 ratios respect the mean-value bound curve") {
    for (int t = 0; t < 1000; ++t) {
      const int d = 1 + static_cast<int>(rng.next_u64() % 20);
      TaylorCoeffs f = random_poly(rng, d);
      RatioReport r = ratio_report(f, PExponent(1.0), 4096);
      CHECK(r.ratio <= bound_curve(std::min(r.x, 1.0)).value + 1e-5);
      CHECK(r.ratio <= 2.0 * std::numbers::inv_sqrt3 + 1e-5);
    }
  }
}
