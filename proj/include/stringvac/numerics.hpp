#pragma once

#include <functional>
#include <span>
#include <vector>

namespace stringvac::numerics {

/// A value together with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (21-point) quadrature on [a, b]. `b` may be +inf.
/// Throws QuadratureError when the error estimate exceeds
/// tol * max(1, |value|).
Estimate integrate(const Integrand& f, double a, double b, double tol,
                   unsigned max_depth = 20);

/// Tanh-sinh quadrature on finite [a, b]; suited to integrands with
/// algebraic endpoint behaviour. The error is judged against the L1 norm of
/// f, not the value, so cancelling integrals are accepted.
Estimate integrate_endpoint(const Integrand& f, double a, double b, double tol);

/// Same as integrate() but splits [a, b] at the given interior points first.
Estimate integrate_split(const Integrand& f, std::span<const double> points,
                         double tol, unsigned max_depth = 20);

/// Integral over [0, inf) of cos(freq * t) * f(t).
///
/// The range is cut into panels at the zeros of the cosine; panel sums are
/// accumulated until they certify `tol`, with Wynn's epsilon algorithm applied
/// to the partial sums when the envelope of f decays only algebraically.
/// `scale` is the length over which f changes appreciably; it sets the first
/// panel when freq == 0.
Estimate integrate_cosine(const Integrand& f, double freq, double tol,
                          double scale = 1.0);

/// Polynomial extrapolation of values[i] = F(h[i]) to h = 0 (Neville).
/// The error estimate is the difference between the last two diagonal
/// entries of the tableau.
Estimate extrapolate_to_zero(std::span<const double> h,
                             std::span<const double> values,
                             int max_order = -1);

/// Wynn epsilon acceleration of a sequence of partial sums.
Estimate wynn_epsilon(std::span<const double> partial_sums);

/// Central finite-difference first derivative with step h.
double derivative(const Integrand& f, double x, double h);

}  // namespace stringvac::numerics
