#include <doctest.h>

#include <cmath>
#include <random>

#include "atl/errors.hpp"
#include "atl/numerics.hpp"

using namespace atl;

// Reference values: tests/oracle/reference_values.py (mpmath, 40 digits).

TEST_CASE("upper half-plane point rejects y <= 0") {
  CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(UpperHalfPoint(0.3, -1.0), DomainError);
  CHECK_THROWS_AS(UpperHalfPoint(0.0, std::nan("")), DomainError);
  const UpperHalfPoint tau(0.25, 2.0);
  CHECK(tau.log_abs_q() == doctest::Approx(-4.0 * constants::pi));
  CHECK(tau.abs_q() == doctest::Approx(std::exp(-4.0 * constants::pi)));
}

TEST_CASE("precision validation") {
  CHECK_NOTHROW(Precision{}.validate());
  Precision p;
  p.em_order = 1;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.em_cutoff = 3;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.rel_tol = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("reduction lands in the fundamental domain with a unimodular transform") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-5.0, 5.0);
  std::uniform_real_distribution<double> uly(std::log(1e-3), std::log(10.0));
  for (int i = 0; i < 500; ++i) {
    const UpperHalfPoint tau(ux(rng), std::exp(uly(rng)));
    const Reduction r = reduce_to_fundamental_domain(tau);
    CHECK(r.transform.determinant() == 1);
    CHECK(std::abs(r.point.x()) <= 0.5 + 1e-12);
    CHECK(std::abs(r.point.value()) >= 1.0 - 1e-12);
    const UpperHalfPoint mapped = r.transform.apply(tau);
    CHECK(mapped.x() == doctest::Approx(r.point.x()).epsilon(1e-9));
    CHECK(mapped.y() == doctest::Approx(r.point.y()).epsilon(1e-9));
  }
}

TEST_CASE("reduction of points already reduced is the identity") {
  const Reduction r = reduce_to_fundamental_domain(UpperHalfPoint(0.2, 3.0));
  CHECK(r.transform == ModularTransform::identity());
  CHECK(r.point == UpperHalfPoint(0.2, 3.0));
}

TEST_CASE("modular transform composition") {
  const ModularTransform s{0, -1, 1, 0};
  const ModularTransform t{1, 1, 0, 1};
  const UpperHalfPoint tau(0.3, 0.7);
  const UpperHalfPoint lhs = s.compose(t).apply(tau);
  const UpperHalfPoint rhs = s.apply(t.apply(tau));
  CHECK(lhs.x() == doctest::Approx(rhs.x()));
  CHECK(lhs.y() == doctest::Approx(rhs.y()));
}

TEST_CASE("Dedekind eta against reference values") {
  CHECK(abs_eta(UpperHalfPoint(0.0, 1.0)) == doctest::Approx(0.768225422326056659).epsilon(1e-14));
  CHECK(abs_eta(UpperHalfPoint(0.0, 2.0)) == doctest::Approx(0.592382781332415885).epsilon(1e-14));
  CHECK(abs_eta(UpperHalfPoint(0.5, 0.9)) == doctest::Approx(0.792837233660722747).epsilon(1e-13));
  CHECK(abs_eta(UpperHalfPoint(0.1, 0.05)) == doctest::Approx(1.04949501192848163).epsilon(1e-12));
  CHECK(log_abs_eta(UpperHalfPoint(0.0, 1.0)) == doctest::Approx(-0.263672070248917983).epsilon(1e-14));
}

TEST_CASE("log|eta| for large y follows -pi y / 12") {
  const double y = 400.0;
  CHECK(log_abs_eta(UpperHalfPoint(0.1, y)) == doctest::Approx(-constants::pi * y / 12.0).epsilon(1e-15));
}

TEST_CASE("q-product agrees with eta off the reduction") {
  const UpperHalfPoint tau(0.37, 1.3);
  const double direct = log_abs_q_product(tau);
  const double via_eta = log_abs_eta(tau) + constants::pi * tau.y() / 12.0;
  CHECK(direct == doctest::Approx(via_eta).epsilon(1e-13));
}

TEST_CASE("exponential integral E1") {
  CHECK(exp_integral_e1(0.25) == doctest::Approx(1.04428263444373819).epsilon(1e-14));
  CHECK(exp_integral_e1(1.0) == doctest::Approx(0.219383934395520274).epsilon(1e-14));
  CHECK(exp_integral_e1(10.0) == doctest::Approx(4.15696892968532428e-6).epsilon(1e-13));
  CHECK(exp_integral_e1(1e-3) == doctest::Approx(6.33153936413614933).epsilon(1e-14));
  CHECK_THROWS_AS(exp_integral_e1(0.0), DomainError);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), DomainError);
}

TEST_CASE("Euler-Maclaurin zeta and derivative") {
  CHECK(zeta_em(3.0) == doctest::Approx(1.20205690315959429).epsilon(1e-14));
  CHECK(zeta_em(0.5) == doctest::Approx(-1.46035450880958681).epsilon(1e-13));
  CHECK(zeta_em(-2.5) == doctest::Approx(0.00851692877785033054).epsilon(1e-12));
  CHECK(zeta_em(2.0) == doctest::Approx(constants::pi * constants::pi / 6.0).epsilon(1e-14));
  CHECK(zeta_em_deriv(2.0) == doctest::Approx(-0.937548254315843754).epsilon(1e-13));
  CHECK(zeta_em_deriv(0.5) == doctest::Approx(-3.92264613920915173).epsilon(1e-13));
  CHECK(zeta_prime_minus1() == doctest::Approx(-0.165421143700450929).epsilon(1e-14));
  CHECK_THROWS_AS(zeta_em(1.05), DomainError);
}

TEST_CASE("zeta'(-1) is stable across Euler-Maclaurin settings") {
  Precision a;
  Precision b;
  b.em_cutoff = 20;
  b.em_order = 12;
  CHECK(std::abs(zeta_em_deriv(-1.0, a) - zeta_em_deriv(-1.0, b)) <= 1e-11);
}

TEST_CASE("zeta accuracy on [-2, 4]") {
  CHECK(std::abs(zeta_em(-2.0)) <= 1e-12);
  CHECK(std::abs(zeta_em(-1.0) + 1.0 / 12.0) <= 1e-12);
  CHECK(std::abs(zeta_em(0.0) + 0.5) <= 1e-12);
  CHECK(std::abs(zeta_em(4.0) - std::pow(constants::pi, 4) / 90.0) <= 1e-12);
  CHECK(std::abs(zeta_em_deriv(0.0) + 0.5 * std::log(2.0 * constants::pi)) <= 1e-12);
}

TEST_CASE("zeta derivative matches a central difference") {
  const double s = -0.7;
  const double h = 1e-5;
  const double fd = (zeta_em(s + h) - zeta_em(s - h)) / (2.0 * h);
  CHECK(zeta_em_deriv(s) == doctest::Approx(fd).epsilon(1e-8));
}
