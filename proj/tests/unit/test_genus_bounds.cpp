#include <doctest.h>

#include <cmath>

#include "atl/errors.hpp"
#include "atl/genus_bounds.hpp"
#include "atl/numerics.hpp"

using namespace atl;

TEST_CASE("constants") {
  CHECK(heat_integral() == doctest::Approx(0.0831013716283738462).epsilon(1e-14));
  CHECK(k_const() == doctest::Approx(-7.44344931076514122).epsilon(1e-14));
  CHECK(kappa() == doctest::Approx(0.547427704567578227).epsilon(1e-13));
  CHECK(genus0_det() == doctest::Approx(2.46984402462748513).epsilon(1e-14));
  CHECK(a_of_g(0) == doctest::Approx(-7.44344931076514122).epsilon(1e-14));
  CHECK(a_of_g(1) == doctest::Approx(-14.7030165312747639).epsilon(1e-14));
  CHECK(a_of_g(2) == doctest::Approx(-21.9625837517843865).epsilon(1e-14));
  CHECK(wilms_lower(1) == doctest::Approx(-10.544133447915092).epsilon(1e-14));
}

TEST_CASE("genus preconditions") {
  CHECK_THROWS_AS(heat_term(1), DomainError);
  CHECK_THROWS_AS(upper_bound_logdet(1), DomainError);
  CHECK_THROWS_AS(a_of_g(-1), DomainError);
  CHECK_THROWS_AS(wilms_lower(0), DomainError);
  CHECK_THROWS_AS(bound_table(5, 4), DomainError);
  CHECK_THROWS_AS(bound_table(1, 4), DomainError);
}

TEST_CASE("exact bound at small genus") {
  const double expected[] = {17.8770835427252137, 9.95356716138505358, 8.40401860319995742,
                             8.18756421753649342, 8.4141588535101343,  8.82492616970671671,
                             9.32295813815210049, 9.86585069066165818, 10.4329730815613417,
                             11.0134967014068938};
  for (int g = 2; g <= 11; ++g) {
    CHECK(upper_bound_logdet(g).upper_exact == doctest::Approx(expected[g - 2]).epsilon(1e-13));
  }
  CHECK(upper_bound_logdet(2, BoundForm::exact, AreaVariant::e4pi).upper_exact ==
        doctest::Approx(17.8245888512383945).epsilon(1e-13));
}

TEST_CASE("simplified bound and E(g)") {
  CHECK(upper_bound_logdet(11, BoundForm::simplified).upper() ==
        doctest::Approx(9.85728551270742328).epsilon(1e-13));
  CHECK(upper_bound_logdet(10, BoundForm::simplified).upper() ==
        doctest::Approx(9.2753007085405605).epsilon(1e-13));
  CHECK(e_of_g(2, EVariant::refined) == doctest::Approx(16.3877216951339472).epsilon(1e-13));
  CHECK(e_of_g(2, EVariant::simple) == doctest::Approx(16.7822281335900572).epsilon(1e-13));
  CHECK(e_of_g(3, EVariant::simple) == doctest::Approx(8.3112840476823189).epsilon(1e-13));
}

TEST_CASE("breakdown pieces are consistent") {
  const BoundBreakdown b = upper_bound_logdet(7);
  CHECK(b.upper_exact ==
        doctest::Approx(constants::log_two_pi4 / 3.0 * 7 + b.a_g / 6.0 + b.log_area_bound));
  CHECK(b.metric_ratio_bound_exact < b.metric_ratio_bound_simplified);
  CHECK(b.heat_term == doctest::Approx(4.0 * constants::pi * (6.0 / 7.0) * b.heat_integral));
}

TEST_CASE("asymptotic slope of the exact bound is kappa") {
  const double g = 1e6;
  const double slope = (upper_bound_logdet(2'000'000).upper_exact - upper_bound_logdet(1'000'000).upper_exact) / g;
  CHECK(slope == doctest::Approx(kappa()).epsilon(1e-6));
}

TEST_CASE("corollary constants") {
  CHECK(fq_gap_slope(GapReading::as_stated) == doctest::Approx(1.93372206568746885).epsilon(1e-14));
  CHECK(fq_gap_constant(GapReading::as_stated) == doctest::Approx(-2.43517924769116743).epsilon(1e-14));
  CHECK(fq_gap_slope(GapReading::derivation) == doctest::Approx(-kappa()));
  CHECK(fq_gap_lower(3, GapReading::as_stated) ==
        doctest::Approx(3 * 1.93372206568746885 - 2.43517924769116743).epsilon(1e-13));
}

TEST_CASE("table rows carry published values only for g = 2..10") {
  const auto rows = bound_table(2, 12);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0].paper_value == 18.01100181);
  CHECK(rows[1].paper_value == 9.76363);
  CHECK(rows[3].paper_value == 7.88854);
  CHECK(rows[8].paper_value == 10.1007);
  CHECK(rows[0].delta.value() == doctest::Approx(-0.1339182672747863).epsilon(1e-10));
  CHECK_FALSE(rows[9].paper_value.has_value());
  CHECK_FALSE(rows[10].delta.has_value());
  for (const auto& r : rows) {
    if (r.paper_value) CHECK(std::abs(*r.delta) <= 0.75);
  }
  CHECK(rows[8].annotation.find("violated") != std::string::npos);
}

TEST_CASE("large-genus line thresholds") {
  CHECK(asymptotic_line(1000) == doctest::Approx(0.5474277074 * 1000 + 1));
  CHECK_FALSE(asymptotic_line_threshold(AsymptoticReading::exact_c36, 200'000).has_value());
  CHECK_FALSE(asymptotic_line_threshold(AsymptoticReading::simplified, 200'000).has_value());
}

TEST_CASE("enum names round-trip") {
  for (auto v : {AreaVariant::e4pi, AreaVariant::c36}) CHECK(area_variant_from_string(to_string(v)) == v);
  for (auto f : {BoundForm::exact, BoundForm::simplified}) CHECK(bound_form_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(area_variant_from_string("e"), std::invalid_argument);
}
