#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "atl/elliptic_arakelov.hpp"
#include "atl/errors.hpp"
#include "atl/genus_bounds.hpp"
#include "atl/report_io.hpp"

using namespace atl;

TEST_CASE("values at tau = i") {
  const UpperHalfPoint tau(0.0, 1.0);
  CHECK(arakelov_area(tau) == doctest::Approx(3.70814935460274384).epsilon(1e-14));
  CHECK(arakelov_logdet(tau) == doctest::Approx(0.255844644915837588).epsilon(1e-13));
  CHECK(d_ar_elliptic(tau) == doctest::Approx(-1.05468828099567193).epsilon(1e-14));
  CHECK(elliptic_upper_bound_log(tau) == doctest::Approx(1.22201039816582088).epsilon(1e-14));
}

TEST_CASE("values at tau = 0.3 + 1.7i") {
  const UpperHalfPoint tau(0.3, 1.7);
  CHECK(arakelov_logdet(tau) == doctest::Approx(0.228822401564370862).epsilon(1e-13));
  CHECK(arakelov_area(tau) == doctest::Approx(4.38592958400506541).epsilon(1e-14));
  CHECK(elliptic_summary(tau).slack == doctest::Approx(0.561680739977621758).epsilon(1e-12));
}

TEST_CASE("log area stays finite for large y") {
  const UpperHalfPoint tau(0.0, 2000.0);
  const double log_area = log_arakelov_area(tau);
  CHECK(std::isfinite(log_area));
  CHECK(log_area == doctest::Approx(constants::log_two_pi + std::log(2000.0) -
                                    constants::pi * 2000.0 / 6.0)
                        .epsilon(1e-14));
}

TEST_CASE("statement constant is weaker than the proof constant") {
  const UpperHalfPoint tau(0.1, 0.8);
  CHECK(elliptic_upper_bound_log_statement(tau) - elliptic_upper_bound_log(tau) ==
        doctest::Approx(3.0 / (constants::pi * 0.8)));
}

TEST_CASE("bound and q-product inequality on random points") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> ux(-0.5, 0.5);
  std::uniform_real_distribution<double> uly(std::log(0.05), std::log(100.0));
  for (int i = 0; i < 1000; ++i) {
    const UpperHalfPoint tau(ux(rng), std::exp(uly(rng)));
    CHECK(arakelov_logdet(tau) < elliptic_upper_bound_log(tau));
    const QProductBound q = qprod_bound(tau);
    CHECK(q.lhs <= q.rhs);
  }
}

TEST_CASE("Faltings delta readings differ by 4 log 2 pi") {
  const UpperHalfPoint tau(0.0, 1.0);
  const double direct = faltings_delta_elliptic(tau, DeltaReading::direct);
  const double shifted = faltings_delta_elliptic(tau, DeltaReading::shifted);
  CHECK(direct == doctest::Approx(-8.37488684530073228).epsilon(1e-13));
  CHECK(shifted == doctest::Approx(-1.02337857966335035).epsilon(1e-12));
  CHECK(shifted - direct == doctest::Approx(4.0 * constants::log_two_pi));
}

TEST_CASE("hexagonal point matches the golden file") {
  std::ifstream in(std::string(ATL_TEST_DATA_DIR) + "/golden/elliptic_hex.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  const EllipticSummary golden = Json::parse(ss.str()).get<EllipticSummary>();
  const EllipticSummary now = elliptic_summary(UpperHalfPoint(0.5, 0.866025403784));
  CHECK(now.tau == golden.tau);
  CHECK(now.arakelov_area == doctest::Approx(golden.arakelov_area).epsilon(1e-13));
  CHECK(now.arakelov_logdet == doctest::Approx(golden.arakelov_logdet).epsilon(1e-13));
  CHECK(now.d_ar == doctest::Approx(golden.d_ar).epsilon(1e-13));
  CHECK(now.upper_bound_log == doctest::Approx(golden.upper_bound_log).epsilon(1e-13));
  CHECK(now.slack == doctest::Approx(golden.slack).epsilon(1e-13));
}
