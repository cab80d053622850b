#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "stringvac/errors.hpp"
#include "stringvac/vacuumpol.hpp"

using namespace stringvac;
using namespace stringvac::vacuumpol;
using std::numbers::pi;

namespace {
const double kCandelas = 1.0 / (192 * pi * pi);
}

TEST_CASE("closed form") {
  CHECK(phi2_closed(pi / 2, 1.0, 1.0) == doctest::Approx(kCandelas).epsilon(1e-15));
  CHECK(kCandelas == doctest::Approx(5.2771449813717591e-4).epsilon(1e-15));
  for (double th : {0.1, 1.0, 2.5}) CHECK(phi2_closed(th, 1.0, 1.0) == doctest::Approx(kCandelas).epsilon(1e-15));
  CHECK(phi2_closed(pi / 2, 0.5, 1.0) == doctest::Approx(4 * kCandelas).epsilon(1e-14));
  CHECK(phi2_closed(1.0, 1.0 - 1e-9, 1.0) - kCandelas < 1e-11);
  CHECK_THROWS_AS(phi2_closed(0.0, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(phi2_closed(pi, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(phi2_closed(1.0, 1.2, 1.0), DomainError);
  CHECK_THROWS_AS(phi2_closed(1.0, 0.5, 0.0), DomainError);
  CHECK(phi2_closed_cos(std::cos(0.7), 0.6, 2.0) == doctest::Approx(phi2_closed(0.7, 0.6, 2.0)).epsilon(1e-13));
}

TEST_CASE("equatorial ratio, monotonicity, positivity, M scaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.05, pi - 0.05), al(0.05, 1.0), m(0.1, 10.0);
  for (double a : {0.9, 0.75, 0.5, 0.25}) {
    CHECK(phi2_closed(pi / 2, a, 1.0) / phi2_closed(pi / 2, 1.0, 1.0) == doctest::Approx(1 / (a * a)).epsilon(1e-12));
  }
  for (int i = 0; i < 200; ++i) {
    const double t = th(rng), a = al(rng), M = m(rng);
    CHECK(phi2_closed(t, a, 1.0) > phi2_closed(t, std::min(1.0, a + 0.01), 1.0));
    CHECK(phi2_closed(t, a, 1.0) - phi2_closed(t, 1.0, 1.0) >= 0.0);
    CHECK(phi2_closed(t, a, M) * M * M == doctest::Approx(phi2_closed(t, a, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("limit route agrees with the closed form") {
  for (double a : {1.0, 0.9, 0.75, 0.5, 0.25}) {
    for (double t : {pi / 6, pi / 3, pi / 2}) {
      const auto r = phi2_limit(t, a, 1.0);
      INFO("alpha=" << a << " theta=" << t);
      CHECK(std::abs(r.value - phi2_closed(t, a, 1.0)) < 1e-7);
      CHECK(r.error < 1e-7);
      CHECK(r.epsilon.size() == 7);
      CHECK(r.bracket.size() == 7);
    }
  }
  const auto c = phi2_limit(pi / 2, 1.0, 1.0);
  CHECK(std::abs(c.value - kCandelas) < 1e-8);
  CHECK(c.epsilon[0] == doctest::Approx(1e-2));
  // Brackets approach the limit linearly in eps.
  const auto d = phi2_limit(pi / 3, 0.6, 1.0);
  const double lim = phi2_closed(pi / 3, 0.6, 1.0);
  const double r1 = (d.bracket[4] - lim) / (d.bracket[5] - lim);
  const double r2 = (d.bracket[5] - lim) / (d.bracket[6] - lim);
  CHECK(r1 == doctest::Approx(2.0).epsilon(0.02));
  CHECK(r2 == doctest::Approx(2.0).epsilon(0.02));
  // M scaling of the limit route.
  const auto e = phi2_limit(1.0, 0.8, 3.0);
  CHECK(e.value * 9.0 == doctest::Approx(phi2_closed(1.0, 0.8, 1.0)).epsilon(1e-7));
}

TEST_CASE("limit route rejects bad epsilon sequences") {
  CHECK_THROWS_AS(phi2_limit(pi / 2, 1.0, 1.0, {0.01, 0.02, 0.005, 0.001}), DomainError);
  CHECK_THROWS_AS(phi2_limit(pi / 2, 1.0, 1.0, {0.5, 0.25, 0.125, 0.0625}), DomainError);
  CHECK_THROWS_AS(phi2_limit(pi / 2, 1.0, 1.0, {0.01, 0.005}), ExtrapolationError);
}

TEST_CASE("near-axis asymptote") {
  CHECK(phi2_closed(std::asin(1e-3), 0.9, 1.0) / phi2_near_axis(std::asin(1e-3), 0.9, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(phi2_closed(std::asin(1e-2), 0.5, 1.0) / phi2_near_axis(std::asin(1e-2), 0.5, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-2));
  CHECK(phi2_near_axis(0.01, 0.5, 2.0) * 4 == doctest::Approx(phi2_near_axis(0.01, 0.5, 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(phi2_near_axis(0.01, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(phi2_near_axis(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("dominance angle") {
  for (double a : {0.5, 0.75, 0.9}) {
    const auto d = dominance_angle(a);
    CHECK(d.cos_theta == doctest::Approx(1 / std::sqrt(2 - a * a)).epsilon(1e-15));
    CHECK(phi2_closed_cos(d.cos_theta, a, 1.0) / phi2_closed(pi / 2, a, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(d.first_order == doctest::Approx(1 - a));
  }
  CHECK(dominance_angle(0.9).cos_theta == doctest::Approx(0.91670).epsilon(1e-5));
  CHECK(dominance_angle(1 - 1e-9).cos_theta == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(dominance_angle(1.0), DomainError);
  CHECK_THROWS_AS(dominance_angle(0.0), DomainError);
}

TEST_CASE("figure data") {
  const auto g = cos_grid(201, 0.995);
  REQUIRE(g.size() == 201);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == -g[g.size() - 1 - i]);
  CHECK(g[100] == 0.0);
  const auto rows = figure1_data({0.5, 1.0, 0.75, 0.9}, 201);
  REQUIRE(rows.size() == 4 * 201);
  CHECK(rows[0].alpha == 1.0);
  CHECK(rows.back().alpha == 0.5);
  CHECK(rows[100].cos_theta == 0.0);
  CHECK(rows[100].phi2_M2 == doctest::Approx(kCandelas).epsilon(1e-15));
  CHECK(rows[3 * 201 + 100].phi2_M2 == doctest::Approx(4 * kCandelas).epsilon(1e-14));
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 201; ++i) {
      const auto& r = rows[c * 201 + i];
      CHECK(r.phi2_M2 == rows[c * 201 + 200 - i].phi2_M2);
      if (c > 0) CHECK(r.phi2_M2 > rows[(c - 1) * 201 + i].phi2_M2);
      if (c > 0 && i > 100) CHECK(r.phi2_M2 > rows[c * 201 + i - 1].phi2_M2);
    }
  }
}
