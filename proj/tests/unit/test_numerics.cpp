#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "stringvac/errors.hpp"
#include "stringvac/numerics.hpp"

using namespace stringvac;
using namespace stringvac::numerics;

TEST_CASE("integrate: smooth and infinite ranges") {
  const auto a = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
  CHECK(a.value == doctest::Approx(2.0).epsilon(1e-13));
  const auto b = integrate([](double x) { return std::exp(-x * x); }, 0.0, INFINITY, 1e-12);
  CHECK(b.value == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(b.error < 1e-10);
}

TEST_CASE("integrate_split handles a kink") {
  const std::vector<double> pts = {-1.0, 0.3, 1.0};
  const auto r = integrate_split([](double x) { return std::abs(x - 0.3); }, pts, 1e-12);
  CHECK(r.value == doctest::Approx(0.5 * (1.3 * 1.3 + 0.7 * 0.7)).epsilon(1e-13));
}

TEST_CASE("integrate_endpoint: algebraic endpoints and cancellation") {
  // 1 - x^2 loses digits next to the endpoints, which caps the accuracy.
  const auto r = integrate_endpoint([](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, -1.0, 1.0, 1e-8);
  CHECK(r.value == doctest::Approx(std::numbers::pi).epsilon(1e-8));
  const auto s = integrate_endpoint([](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0, 1e-12);
  CHECK(s.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  const auto z = integrate_endpoint([](double x) { return x * x * x; }, -1.0, 1.0, 1e-10);
  CHECK(std::abs(z.value) < 1e-14);
}

TEST_CASE("integrate_cosine: exponential and algebraic envelopes") {
  // int_0^inf cos(w t) e^{-t} dt = 1/(1 + w^2)
  const auto a = integrate_cosine([](double t) { return std::exp(-t); }, 3.0, 1e-11);
  CHECK(a.value == doctest::Approx(0.1).epsilon(1e-10));
  // int_0^inf cos(t)/(1 + t^2) dt = pi/(2e)
  const auto b = integrate_cosine([](double t) { return 1.0 / (1.0 + t * t); }, 1.0, 1e-9);
  CHECK(b.value == doctest::Approx(std::numbers::pi / (2 * std::numbers::e)).epsilon(1e-8));
}

TEST_CASE("extrapolate_to_zero is exact on polynomials") {
  std::vector<double> h, v;
  for (int k = 0; k < 5; ++k) {
    const double x = std::ldexp(1.0, -k);
    h.push_back(x);
    v.push_back(3.0 - 2.0 * x + 0.5 * x * x - x * x * x);
  }
  const auto e = extrapolate_to_zero(h, v);
  CHECK(e.value == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(e.error < 1e-12);
}

TEST_CASE("wynn_epsilon accelerates the alternating log series") {
  std::vector<double> s;
  double acc = 0.0;
  for (int k = 1; k <= 20; ++k) {
    acc += (k % 2 ? 1.0 : -1.0) / k;
    s.push_back(acc);
  }
  const auto e = wynn_epsilon(s);
  CHECK(e.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("derivative") {
  CHECK(derivative([](double x) { return std::sin(x); }, 0.4, 1e-4) ==
        doctest::Approx(std::cos(0.4)).epsilon(1e-8));
}
