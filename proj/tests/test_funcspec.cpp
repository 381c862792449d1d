#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "hardylab/blaschke.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/funcspec.hpp"

using namespace hardylab;

namespace {
double dist(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("function expressions") {
  SECTION("monomials and powers") {
    CHECK(dist(parse_function("z")(cplx{0.3, 0.4}), cplx{0.3, 0.4}) < 1e-15);
    CHECK(dist(parse_function("z^3")(cplx{0.5, 0.0}), cplx{0.125, 0.0}) < 1e-15);
    CHECK(dist(parse_function("z^0")(cplx{0.7, 0.0}), cplx{1.0, 0.0}) < 1e-15);
  }
  SECTION("polynomials") {
    auto f = parse_function("poly(1,2,1)");
    CHECK(dist(f(cplx{0.5, 0.0}), cplx{2.25, 0.0}) < 1e-15);
    auto g = parse_function("poly(0.5, -1i, 2)");
    const cplx z{0.2, 0.1};
    CHECK(dist(g(z), cplx{0.5, 0.0} + cplx{0.0, -1.0} * z + 2.0 * z * z) < 1e-14);
  }
  SECTION("arithmetic") {
    auto f = parse_function("z*(2-z)");
    CHECK(dist(f(cplx{0.5, 0.0}), cplx{0.75, 0.0}) < 1e-15);
    auto g = parse_function("1+z^2 - 0.5*z");
    CHECK(dist(g(cplx{1.0, 0.0}), cplx{1.5, 0.0}) < 1e-15);
    auto h = parse_function("-z");
    CHECK(dist(h(cplx{0.2, 0.3}), cplx{-0.2, -0.3}) < 1e-15);
  }
  SECTION("complex literals") {
    CHECK(dist(parse_complex("0.3+0.4i"), cplx{0.3, 0.4}) < 1e-15);
    CHECK(dist(parse_complex("-0.2i"), cplx{0.0, -0.2}) < 1e-15);
    CHECK(dist(parse_complex("2i"), cplx{0.0, 2.0}) < 1e-15);
    CHECK(dist(parse_complex("i"), cplx{0.0, 1.0}) < 1e-15);
    CHECK(dist(parse_complex("(1-2i)*(1+2i)"), cplx{5.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(parse_complex("z"), std::invalid_argument);
  }
  SECTION("the ext literal is the critical lambda") {
    CHECK(parse_complex("ext").real() == std::numbers::inv_sqrt3);
    CHECK(dist(parse_complex("2*ext"), cplx{2.0 * std::numbers::inv_sqrt3, 0.0}) < 1e-15);
  }
}

TEST_CASE("blaschke expressions") {
  SECTION("matches direct evaluation") {
    auto f = parse_function("blaschke(1; 0.5,1)");
    BlaschkeSpec b;
    b.origin_multiplicity = 1;
    b.zeros.push_back(BlaschkeZero{cplx{0.5, 0.0}, 1});
    const cplx z{0.25, -0.1};
    CHECK(dist(f(z), blaschke_eval(b, z)) < 1e-14);
  }
  SECTION("complex zeros with multiplicities") {
    auto f = parse_function("blaschke(2; 0.3+0.4i,2; -0.2i,1)");
    BlaschkeSpec b;
    b.origin_multiplicity = 2;
    b.zeros.push_back(BlaschkeZero{cplx{0.3, 0.4}, 2});
    b.zeros.push_back(BlaschkeZero{cplx{0.0, -0.2}, 1});
    const cplx z{0.1, 0.6};
    CHECK(dist(f(z), blaschke_eval(b, z)) < 1e-14);
  }
  SECTION("zeros outside the disc are rejected") {
    CHECK_THROWS_AS(parse_function("blaschke(1; 1.5,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("blaschke(1; 0,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("blaschke(-1)"), std::invalid_argument);
  }
}

TEST_CASE("extremal expressions") {
  SECTION("canonical member") {
    auto f = parse_function("extremal(ext; z)");
    ExtremalSpec e;
    CHECK(dist(f(cplx{0.0, 0.0}), cplx{1.0, 0.0}) < 1e-15);
    const cplx z{0.4, 0.2};
    CHECK(dist(f(z), extremal_eval(e, z)) < 1e-14);
  }
  SECTION("explicit lambda and richer inner factors") {
    auto f = parse_function("extremal(0.5; z^2)");
    ExtremalSpec e;
    e.lambda = 0.5;
    e.inner = BlaschkeSpec::monomial(2);
    const cplx z{0.3, -0.3};
    CHECK(dist(f(z), extremal_eval(e, z)) < 1e-14);

    auto g = parse_function("extremal(0.3; blaschke(1; 0.5,1))");
    ExtremalSpec e2;
    e2.lambda = 0.3;
    e2.inner.origin_multiplicity = 1;
    e2.inner.zeros.push_back(BlaschkeZero{cplx{0.5, 0.0}, 1});
    CHECK(dist(g(z), extremal_eval(e2, z)) < 1e-14);
  }
  SECTION("invalid members are rejected") {
    CHECK_THROWS_AS(parse_function("extremal(1.5; z)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("extremal(0.5; z^0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("extremal(0.5; blaschke(0; 0.5,1))"), std::invalid_argument);
  }
}

TEST_CASE("inner-factor expressions") {
  CHECK(parse_inner("z").origin_multiplicity == 1);
  CHECK(parse_inner("z^4").origin_multiplicity == 4);
  const BlaschkeSpec b = parse_inner("blaschke(1; 0.5,2)");
  CHECK(b.origin_multiplicity == 1);
  REQUIRE(b.zeros.size() == 1);
  CHECK(b.zeros[0].multiplicity == 2);
  CHECK_THROWS_AS(parse_inner("z^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_inner("poly(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_inner("z + 1"), std::invalid_argument);
}

TEST_CASE("malformed expressions are rejected") {
  CHECK_THROWS_AS(parse_function(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("z^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("z^-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("poly()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("poly(z)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("spam(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("(z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("z)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("z z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function("blaschke(1; 0.5)"), std::invalid_argument);
}
