#include "stringvac/specfun.hpp"

#include <math.h>  // lgamma_r

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>

#include "stringvac/errors.hpp"

namespace stringvac::specfun {

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kSeriesTol = 1e-16;
constexpr long kSeriesBudget = 100000;
// Relative accuracy below which a cancelling series is refused.
constexpr double kCancellationLimit = 1e-10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool near_pole(double a) {
  return a <= kSingularGuard && std::abs(a - std::round(a)) < kSingularGuard;
}

SignedLog signed_lgamma(double a) {
  if (near_pole(a)) throw PoleError("gamma pole at argument " + fmt(a));
  int sign = 1;
  const double v = ::lgamma_r(a, &sign);
  return {v, sign};
}

double lgamma_pos(double a) {
  const auto s = signed_lgamma(a);
  if (s.sign < 0) throw DomainError("negative gamma value at " + fmt(a));
  return s.log_abs;
}

// ln Gamma(a) - ln Gamma(b) from the Stirling series, written so that the
// leading terms do not cancel when a is close to b. Valid for a, b >= 10.
double stirling_difference(double a, double b) {
  static constexpr std::array<double, 8> c = {
      1.0 / 12.0,    -1.0 / 360.0,         1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0,     1.0 / 156.0,  -3617.0 / 122400.0};
  const double d = a - b;
  double v = (a - 0.5) * std::log1p(d / b) + d * std::log(b) - d;
  const double ia2 = 1.0 / (a * a);
  const double ib2 = 1.0 / (b * b);
  double pa = 1.0 / a;
  double pb = 1.0 / b;
  for (double ck : c) {
    v += ck * (pa - pb);
    pa *= ia2;
    pb *= ib2;
  }
  return v;
}

struct AxisVars {
  double xi;   // acosh(x)
  double w;    // e^{-2 xi}
  double omw;  // 1 - w
};

AxisVars axis_vars(double x) {
  if (!(x > 1.0 + kSingularGuard)) {
    throw DomainError("axis argument must exceed 1 (got " + fmt(x) + ")");
  }
  const double d = x - 1.0;
  const double xi = std::log1p(d + std::sqrt(d * (2.0 + d)));
  return {xi, std::exp(-2.0 * xi), -std::expm1(-2.0 * xi)};
}

void check_cut(double x) {
  if (!(std::abs(x) < 1.0 - kSingularGuard)) {
    throw DomainError("cut argument must satisfy |x| < 1 (got " + fmt(x) + ")");
  }
}

// Sum of a Gauss series 2F1(a, b; c; z), |z| < 1, in scaled form:
// value = sign * exp(log_abs). `cond` is sum|t_k| / |sum|.
struct SeriesValue {
  double log_abs = 0.0;
  int sign = 1;
  double cond = 1.0;
};

SeriesValue hyp2f1(double a, double b, double c, double z) {
  if (near_pole(c)) throw PoleError("series denominator parameter " + fmt(c));
  double sum = 1.0;
  double abs_sum = 1.0;
  double term = 1.0;
  double scale = 0.0;
  const double kmin = std::max({-a, -b, -c, 0.0}) + 1.0;
  for (long k = 0; k < kSeriesBudget; ++k) {
    const double dk = static_cast<double>(k);
    const double r = (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
    term *= r;
    if (term == 0.0) break;
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(sum) > 1e250 || abs_sum > 1e250) {
      sum *= 1e-250;
      abs_sum *= 1e-250;
      term *= 1e-250;
      scale += 250.0 * kLn10;
    }
    if (dk >= kmin) {
      const double dn = dk + 1.0;
      const double rn =
          std::abs((a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z);
      const double bound = std::max(rn, std::abs(z));
      if (bound < 1.0 &&
          std::abs(term) * bound / (1.0 - bound) <= kSeriesTol * std::abs(sum)) {
        return {std::log(std::abs(sum)) + scale, sum < 0 ? -1 : 1,
                abs_sum / std::abs(sum)};
      }
    }
  }
  if (term == 0.0) {
    if (sum == 0.0) return {-std::numeric_limits<double>::infinity(), 1, 1.0};
    return {std::log(std::abs(sum)) + scale, sum < 0 ? -1 : 1,
            abs_sum / std::abs(sum)};
  }
  throw ConvergenceError("hypergeometric series 2F1(" + fmt(a) + ", " + fmt(b) +
                         "; " + fmt(c) + "; " + fmt(z) +
                         ") exceeded its term budget");
}

void check_cancellation(const SeriesValue& s, const char* what) {
  if (s.cond * 1e-16 > kCancellationLimit) {
    throw ConvergenceError(std::string(what) +
                           ": series cancellation destroys precision (cond " +
                           fmt(s.cond) + ")");
  }
}

// ln of Olver's second-kind function on the axis.
double log_olver_Q(double nu, double mu, const AxisVars& v) {
  if (!(nu > -1.5) || !(nu + mu > -1.0)) {
    throw DomainError("olver_Q requires nu > -3/2 and nu + mu > -1 (nu=" +
                      fmt(nu) + ", mu=" + fmt(mu) + ")");
  }
  const auto f = hyp2f1(mu + 0.5, nu + mu + 1.0, nu + 1.5, v.w);
  return 0.5 * std::log(std::numbers::pi) - lgamma_pos(nu + 1.5) +
         mu * std::log(v.omw) - (nu + 1.0) * v.xi + f.log_abs;
}

// Q_lambda for order zero near zeta = 1: the logarithmic transformation of
// the Gauss series to 1 - w, with all gamma prefactors cancelled.
double log_legendre_Q_near(double lambda, const AxisVars& v) {
  using boost::math::digamma;
  const double lomw = std::log(v.omw);
  double psi1 = -std::numbers::egamma;               // psi(k+1)
  double psih = -std::numbers::egamma - 2.0 * std::numbers::ln2;  // psi(k+1/2)
  double psil = digamma(lambda + 1.0);                // psi(lambda+1+k)
  double coef = 1.0;
  double sum = 0.0;
  for (long k = 0; k < kSeriesBudget; ++k) {
    const double dk = static_cast<double>(k);
    const double term = coef * (2.0 * psi1 - psih - psil - lomw);
    sum += term;
    const double r = (0.5 + dk) * (lambda + 1.0 + dk) /
                     ((dk + 1.0) * (dk + 1.0)) * v.omw;
    if (r < 0.9 && std::abs(term) * 1.1 * r / (1.0 - 1.1 * r) <=
                       kSeriesTol * std::abs(sum)) {
      return std::log(sum) - (lambda + 1.0) * v.xi;
    }
    coef *= r;
    psi1 += 1.0 / (dk + 1.0);
    psih += 1.0 / (dk + 0.5);
    psil += 1.0 / (lambda + 1.0 + dk);
  }
  throw ConvergenceError("Legendre Q near-axis series exceeded its budget");
}

double log_legendre_Q(double lambda, const AxisVars& v) {
  if (!(lambda > -1.0)) {
    throw DomainError("legendre_Q requires lambda > -1 (got " + fmt(lambda) + ")");
  }
  if (v.omw < 0.5 && (lambda + 1.0) * v.omw <= 2.0) {
    return log_legendre_Q_near(lambda, v);
  }
  return lgamma_pos(lambda + 1.0) + log_olver_Q(lambda, 0.0, v);
}

// Signed log of P_nu^{-mu}(x) on the axis (Pfaff-transformed series in
// u = (x-1)/(x+1), which is positive-term for nu <= mu).
SeriesValue log_P_axis(double nu, double mu, double x) {
  if (!(mu >= 0.0)) throw DomainError("order parameter mu must be >= 0");
  axis_vars(x);
  if (nu < -0.5) nu = -nu - 1.0;
  const double u = (x - 1.0) / (x + 1.0);
  auto f = hyp2f1(-nu, mu - nu, 1.0 + mu, u);
  check_cancellation(f, "axis P");
  f.log_abs += 0.5 * mu * std::log(u) - lgamma_pos(1.0 + mu) +
               nu * std::log(0.5 * (x + 1.0));
  return f;
}

}  // namespace

EvalDomain EvalDomain::classify(double x) {
  if (std::abs(x) < 1.0 - kSingularGuard) return {x, Region::cut};
  if (x > 1.0 + kSingularGuard) return {x, Region::axis};
  throw DomainError("argument " + fmt(x) +
                    " lies on or next to a singular point or below -1");
}

SignedLog signed_log_gamma_ratio(double a, double b) {
  if (near_pole(a)) throw PoleError("gamma pole at argument " + fmt(a));
  if (near_pole(b)) throw PoleError("gamma pole at argument " + fmt(b));
  if (a >= 10.0 && b >= 10.0) return {stirling_difference(a, b), 1};
  const auto ga = signed_lgamma(a);
  const auto gb = signed_lgamma(b);
  return {ga.log_abs - gb.log_abs, ga.sign * gb.sign};
}

double log_gamma_ratio(double a, double b) {
  const auto r = signed_log_gamma_ratio(a, b);
  if (r.sign < 0) {
    throw DomainError("Gamma(" + fmt(a) + ")/Gamma(" + fmt(b) +
                      ") is negative; use signed_log_gamma_ratio");
  }
  return r.log_abs;
}

void ferrers_band(double mu, double x, std::span<double> out) {
  if (out.empty()) return;
  check_cut(x);
  if (!(mu >= 0.0)) throw DomainError("order parameter mu must be >= 0");
  const double start = 0.5 * lgamma_pos(2.0 * mu + 1.0) - lgamma_pos(mu + 1.0) -
                       mu * std::numbers::ln2 +
                       0.5 * mu * (std::log1p(-x) + std::log1p(x));
  double scale = start;
  double factor = std::exp(scale);
  auto emit = [&](std::size_t k, double mantissa) {
    if (scale > -700.0 || mantissa == 0.0) {
      out[k] = mantissa * factor;
    } else {
      out[k] = std::copysign(std::exp(scale + std::log(std::abs(mantissa))),
                             mantissa);
    }
  };
  double prev = 0.0;
  double cur = 1.0;
  emit(0, cur);
  for (std::size_t k = 1; k < out.size(); ++k) {
    const double nu = mu + static_cast<double>(k - 1);
    const double denom = (nu + mu + 1.0) * (nu - mu + 1.0);
    const double next = ((2.0 * nu + 1.0) * x * cur -
                         std::sqrt((nu - mu) * (nu + mu)) * prev) /
                        std::sqrt(denom);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e200) {
      prev *= 1e-200;
      cur *= 1e-200;
      scale += 200.0 * kLn10;
      factor = std::exp(scale);
    }
    emit(k, cur);
  }
}

double ferrers_P(DegreeOrder d, double x) {
  check_cut(x);
  if (!(d.mu >= 0.0)) throw DomainError("order parameter mu must be >= 0");
  double nu = d.nu;
  const double mu = d.mu;
  const double k = nu - mu;
  const double kr = std::round(k);
  if (std::abs(k - kr) < 1e-12 && kr >= 0.0 && kr < 1e6) {
    std::vector<double> band(static_cast<std::size_t>(kr) + 1);
    ferrers_band(mu, x, band);
    const double norm = 0.5 * log_gamma_ratio(nu + mu + 1.0, nu - mu + 1.0);
    return band.back() * std::exp(-norm);
  }
  if (nu < -0.5) nu = -nu - 1.0;
  auto f = hyp2f1(-nu, nu + 1.0, 1.0 + mu, 0.5 * (1.0 - x));
  check_cancellation(f, "Ferrers P");
  const double pref = 0.5 * mu * (std::log1p(-x) - std::log1p(x)) -
                      lgamma_pos(1.0 + mu);
  return f.sign * std::exp(f.log_abs + pref);
}

double legendre_Q(double lambda, double zeta) {
  const auto v = axis_vars(zeta);
  return std::exp(log_legendre_Q(lambda, v));
}

void legendre_Q_band(double mu, double zeta, std::span<double> out) {
  if (out.empty()) return;
  const auto v = axis_vars(zeta);
  const std::size_t n = out.size();
  const double l0 = log_legendre_Q(mu, v);
  out[0] = std::exp(l0);
  if (n == 1) return;
  if (n == 2) {
    out[1] = std::exp(log_legendre_Q(mu + 1.0, v));
    return;
  }
  const double top = mu + static_cast<double>(n - 1);
  // ratios[k] = Q_{mu+k} / Q_{mu+k+1}
  std::vector<double> ratios(n - 1);
  ratios[n - 2] =
      std::exp(log_legendre_Q(top - 1.0, v) - log_legendre_Q(top, v));
  for (std::size_t k = n - 2; k > 0; --k) {
    const double nu = mu + static_cast<double>(k);
    ratios[k - 1] = ((2.0 * nu + 1.0) * zeta - (nu + 1.0) / ratios[k]) / nu;
  }
  double log_q = l0;
  for (std::size_t k = 1; k < n; ++k) {
    log_q -= std::log(ratios[k - 1]);
    out[k] = std::exp(log_q);
  }
}

double legendre_P_axis(DegreeOrder d, double x) {
  const auto s = log_P_axis(d.nu, d.mu, x);
  return s.sign * std::exp(s.log_abs);
}

double olver_Q(DegreeOrder d, double x) {
  const auto v = axis_vars(x);
  return std::exp(log_olver_Q(d.nu, std::abs(d.mu), v));
}

AxisPair legendre_PQ_axis(DegreeOrder d, double x) {
  const auto v = axis_vars(x);
  const auto g = signed_lgamma(d.nu - d.mu + 1.0);
  AxisPair out;
  out.P = legendre_P_axis(d, x);
  if (d.mu == 0.0 && d.nu > -1.0) {
    out.Qhat = std::exp(log_legendre_Q(d.nu, v));
  } else {
    out.Qhat = g.sign * std::exp(g.log_abs + log_olver_Q(d.nu, d.mu, v));
  }
  return out;
}

double axis_pq_product(double nu, double mu, double x_lo, double x_hi) {
  if (!(x_lo <= x_hi)) {
    throw DomainError("axis_pq_product requires x_lo <= x_hi");
  }
  const auto v = axis_vars(x_hi);
  const auto p = log_P_axis(nu, mu, x_lo);
  const auto g = signed_lgamma(nu + mu + 1.0);
  return p.sign * g.sign *
         std::exp(g.log_abs + p.log_abs + log_olver_Q(nu, mu, v));
}

}  // namespace stringvac::specfun
