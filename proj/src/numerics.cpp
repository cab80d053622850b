#include "stringvac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "stringvac/errors.hpp"

namespace stringvac::numerics {

namespace {

// Compact "%.3g" rendering for error messages.
std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

using GaussKronrod = boost::math::quadrature::gauss_kronrod<double, 21>;

bool accepted(double error, double value, double l1, double tol) {
  const double scale = std::max({std::abs(value), 1e-3 * l1, 1e-300});
  return error <= tol * scale;
}

}  // namespace

Estimate integrate(const Integrand& f, double a, double b, double tol,
                   unsigned max_depth) {
  if (a == b) return {};
  double error = 0.0;
  double l1 = 0.0;
  // One panel first: with tol near machine precision the adaptive pass can
  // bisect a smooth integrand down to max_depth and sum up roundoff.
  double value = GaussKronrod::integrate(f, a, b, 0, tol, &error, &l1);
  if (!(std::isfinite(value) && accepted(error, value, l1, tol))) {
    value = GaussKronrod::integrate(f, a, b, max_depth, tol, &error, &l1);
  }
  if (!std::isfinite(value)) {
    throw QuadratureError("quadrature produced a non-finite value on [" +
                          short_num(a) + ", " + short_num(b) + "]");
  }
  if (!accepted(error, value, l1, tol)) {
    throw QuadratureError("quadrature error estimate " +
                          short_num(error) + " exceeds tolerance on [" +
                          short_num(a) + ", " + short_num(b) + "]");
  }
  return {value, error};
}

Estimate integrate_endpoint(const Integrand& f, double a, double b,
                            double tol) {
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  double error = 0.0;
  double l1 = 0.0;
  const double value = ts.integrate([&f](double x) { return f(x); }, a, b, tol, &error, &l1);
  if (!std::isfinite(value)) {
    throw QuadratureError("tanh-sinh quadrature produced a non-finite value");
  }
  // Orthogonality-type integrals cancel to ~0, so the L1 norm sets the scale.
  if (!(error <= std::max(tol, 1e-14) * std::max(std::abs(value), l1))) {
    throw QuadratureError("tanh-sinh error estimate " + short_num(error) +
                          " exceeds tolerance");
  }
  return {value, error};
}

Estimate integrate_split(const Integrand& f, std::span<const double> points,
                         double tol, unsigned max_depth) {
  Estimate total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto part = integrate(f, points[i], points[i + 1], tol, max_depth);
    total.value += part.value;
    total.error += part.error;
  }
  return total;
}

Estimate wynn_epsilon(std::span<const double> s) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  if (n < 3) return {s.back(), n == 2 ? std::abs(s[1] - s[0]) : 0.0};

  // e[k] holds column k of the epsilon table for the current diagonal sweep.
  std::vector<std::vector<double>> eps(n + 1, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) eps[1][i] = s[i];
  double best = s.back();
  double prev_best = s[n - 2];
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i + k <= n; ++i) {
      const double diff = eps[k - 1][i + 1] - eps[k - 1][i];
      if (diff == 0.0) {
        eps[k][i] = std::numeric_limits<double>::max();
      } else {
        eps[k][i] = eps[k - 2][i + 1] + 1.0 / diff;
      }
    }
    // odd columns in this indexing (k = 1, 3, 5, ...) are the estimates
    if (k % 2 == 1) {
      const std::size_t last = n - k;
      if (std::isfinite(eps[k][last]) &&
          std::abs(eps[k][last]) < std::numeric_limits<double>::max()) {
        prev_best = last > 0 ? eps[k][last - 1] : best;
        best = eps[k][last];
      }
    }
  }
  return {best, std::abs(best - prev_best)};
}

Estimate integrate_cosine(const Integrand& f, double freq, double tol,
                          double scale) {
  freq = std::abs(freq);
  if (freq == 0.0) {
    // Geometric panels so slow algebraic decay is still caught by the
    // panel-sum test below.
    double a = 0.0;
    double b = scale;
    Estimate total;
    int small = 0;
    for (int k = 0; k < 400; ++k) {
      const auto part = integrate(f, a, b, tol * 1e-2);
      total.value += part.value;
      total.error += part.error;
      if (std::abs(part.value) <= 1e-2 * tol * std::abs(total.value)) {
        if (++small >= 2) return total;
      } else {
        small = 0;
      }
      a = b;
      b *= 2.0;
    }
    throw QuadratureError("non-oscillatory tail did not decay");
  }

  const double half = std::numbers::pi / freq;
  std::vector<double> partial;
  partial.reserve(512);
  Estimate total;
  double a = 0.0;
  double b = 0.5 * half;
  int small = 0;
  double last_wynn = std::numeric_limits<double>::quiet_NaN();
  constexpr int kMaxPanels = 4000;
  for (int k = 0; k < kMaxPanels; ++k) {
    const auto part = integrate(
        [&](double t) { return std::cos(freq * t) * f(t); }, a, b, tol * 1e-2);
    total.value += part.value;
    total.error += part.error;
    partial.push_back(total.value);
    if (std::abs(part.value) <= 1e-2 * tol * std::abs(total.value)) {
      if (++small >= 3) return total;
    } else {
      small = 0;
    }
    if (k >= 20 && k % 10 == 0) {
      const std::size_t window = std::min<std::size_t>(partial.size(), 21);
      const auto w = wynn_epsilon(
          std::span<const double>(partial).last(window));
      if (std::isfinite(last_wynn) &&
          std::abs(w.value - last_wynn) <= tol * std::abs(w.value) &&
          w.error <= tol * std::abs(w.value)) {
        return {w.value, std::abs(w.value - last_wynn) + total.error};
      }
      last_wynn = w.value;
    }
    a = b;
    b += half;
  }
  throw QuadratureError("oscillatory integral did not converge in " +
                        std::to_string(kMaxPanels) + " panels");
}

Estimate extrapolate_to_zero(std::span<const double> h,
                             std::span<const double> values, int max_order) {
  const std::size_t n = std::min(h.size(), values.size());
  if (n == 0) return {};
  if (n == 1) return {values[0], 0.0};
  const std::size_t order =
      max_order < 0 ? n - 1
                    : std::min<std::size_t>(n - 1, static_cast<std::size_t>(max_order));
  // t[i][j]: polynomial through points i-j .. i evaluated at h = 0.
  std::vector<std::vector<double>> t(n, std::vector<double>(order + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    t[i][0] = values[i];
    for (std::size_t j = 1; j <= std::min(i, order); ++j) {
      const double hi = h[i];
      const double hj = h[i - j];
      t[i][j] = (hj * t[i][j - 1] - hi * t[i - 1][j - 1]) / (hj - hi);
    }
  }
  const std::size_t last = n - 1;
  const std::size_t col = std::min(last, order);
  const double best = t[last][col];
  double err;
  if (col == last) {
    err = std::abs(best - t[last - 1][col - 1]);
  } else {
    err = std::abs(best - t[last - 1][col]);
  }
  return {best, err};
}

double derivative(const Integrand& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace stringvac::numerics
