#include "stringvac/conespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "stringvac/errors.hpp"
#include "stringvac/specfun.hpp"

namespace stringvac::conespace {

namespace {

using std::numbers::pi;

constexpr double kTwoPi = 2.0 * pi;
constexpr int kMaxBands = 100000;

struct Cyl {
  double rho, z, phi, tau;
};

Cyl cyl(const ConePoint& p) {
  validate(p);
  const auto& c = p.coords;
  const double tau = p.tau.value_or(0.0);
  switch (p.chart) {
    case Chart::spherical:
      return {c[0] * std::sin(c[1]), c[0] * std::cos(c[1]), c[2], tau};
    case Chart::cylindrical:
      return {c[0], c[1], c[2], tau};
    case Chart::toroidal: {
      const double d = std::cosh(c[0]) - std::cos(c[1]);
      return {std::sinh(c[0]) / d, std::sin(c[1]) / d, c[2], tau};
    }
    case Chart::spheroidal:
      return {std::sinh(c[0]) * std::sin(c[1]), std::cosh(c[0]) * std::cos(c[1]),
              c[2], tau};
  }
  throw DomainError("unknown chart");
}

// acosh(1 + d) without cancellation for small d.
double acosh1p(double d) { return std::log1p(d + std::sqrt(d * (2.0 + d))); }

// (dz^2 + (rho - rho')^2) / (2 rho rho'), i.e. chi3 - 1 for the 3D kernel.
double chi3_minus_one(const Cyl& a, const Cyl& b) {
  const double dz = a.z - b.z;
  const double dr = a.rho - b.rho;
  return (dz * dz + dr * dr) / (2.0 * a.rho * b.rho);
}

void guard(const ConePoint& a, const ConePoint& b) {
  if (chart_distance(a, b) < kCoincidenceGuard) {
    throw CoincidenceError("points closer than the coincidence guard " +
                           to_text(kCoincidenceGuard));
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1] (got " + to_text(alpha) +
                      ")");
  }
}

double sin_half_sq(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

// Shared driver for the single-index m sums of the 3D kernel. `term(mu)` is
// the m-th coefficient; the terms decay at least like e^{-mu xi3}.
Estimate sum_over_m(double alpha, double dphi, double xi3, double tol,
                    const std::function<double(double)>& term) {
  if (!(xi3 > 1e-12)) {
    throw SlowConvergence(
        "points share rho and z; the azimuthal sum does not converge");
  }
  const double rho = std::exp(-xi3 / alpha);
  double sum = term(0.0);
  double last = std::abs(sum);
  for (int m = 1; m < kMaxBands; ++m) {
    const double t = term(m / alpha);
    sum += 2.0 * std::cos(m * dphi) * t;
    last = std::abs(t);
    const double tail = 2.0 * last * rho / (1.0 - rho);
    if (tail <= tol * std::max(1.0, std::abs(sum))) return {sum, tail};
  }
  throw SlowConvergence("azimuthal sum did not converge in " +
                        std::to_string(kMaxBands) + " bands");
}

}  // namespace

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::spherical: return "spherical";
    case Chart::cylindrical: return "cylindrical";
    case Chart::toroidal: return "toroidal";
    case Chart::spheroidal: return "spheroidal";
  }
  return "?";
}

ConePoint ConePoint::spherical(double r, double theta, double phi,
                               std::optional<double> tau) {
  return {Chart::spherical, {r, theta, phi}, tau};
}
ConePoint ConePoint::cylindrical(double rho, double z, double phi,
                                 std::optional<double> tau) {
  return {Chart::cylindrical, {rho, z, phi}, tau};
}
ConePoint ConePoint::toroidal(double mu, double eta, double phi,
                              std::optional<double> tau) {
  return {Chart::toroidal, {mu, eta, phi}, tau};
}
ConePoint ConePoint::spheroidal(double sigma, double theta, double phi,
                                std::optional<double> tau) {
  return {Chart::spheroidal, {sigma, theta, phi}, tau};
}

void validate(const ConePoint& p) {
  const auto& c = p.coords;
  for (double v : c) {
    if (!std::isfinite(v)) throw DomainError("non-finite coordinate");
  }
  if (p.tau && !std::isfinite(*p.tau)) throw DomainError("non-finite tau");
  if (!(c[2] >= 0.0 && c[2] < kTwoPi)) {
    throw DomainError("phi must lie in [0, 2 pi)");
  }
  const std::string name = chart_name(p.chart);
  switch (p.chart) {
    case Chart::spherical:
    case Chart::spheroidal:
      if (!(c[0] > 0.0)) throw DomainError(name + " radial coordinate must be > 0");
      if (!(c[1] > 0.0 && c[1] < pi)) {
        throw DomainError(name + " theta must lie in (0, pi)");
      }
      break;
    case Chart::cylindrical:
      if (!(c[0] > 0.0)) throw DomainError("cylindrical rho must be > 0");
      break;
    case Chart::toroidal:
      if (!(c[0] > 0.0)) throw DomainError("toroidal mu must be > 0");
      if (!(c[1] >= 0.0 && c[1] < kTwoPi)) {
        throw DomainError("toroidal eta must lie in [0, 2 pi)");
      }
      break;
  }
}

ConePoint convert(const ConePoint& p, Chart to) {
  const Cyl c = cyl(p);
  ConePoint out;
  out.chart = to;
  out.tau = p.tau;
  switch (to) {
    case Chart::cylindrical:
      out.coords = {c.rho, c.z, c.phi};
      break;
    case Chart::spherical:
      out.coords = {std::hypot(c.rho, c.z), std::atan2(c.rho, c.z), c.phi};
      break;
    case Chart::toroidal: {
      const double d1 = std::hypot(c.rho + 1.0, c.z);
      const double d2 = std::hypot(c.rho - 1.0, c.z);
      double eta = std::atan2(2.0 * c.z, c.rho * c.rho + c.z * c.z - 1.0);
      if (eta < 0.0) eta += kTwoPi;
      out.coords = {std::log(d1 / d2), eta, c.phi};
      break;
    }
    case Chart::spheroidal: {
      const double dp = std::hypot(c.rho, c.z - 1.0);
      const double dm = std::hypot(c.rho, c.z + 1.0);
      const double ch = 0.5 * (dp + dm);
      const double ct = std::clamp(0.5 * (dm - dp), -1.0, 1.0);
      out.coords = {acosh1p(ch - 1.0), std::acos(ct), c.phi};
      break;
    }
  }
  validate(out);
  return out;
}

double chart_distance(const ConePoint& a, const ConePoint& b) {
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double dz = p.z - q.z;
  const double dt = p.tau - q.tau;
  const double dr = p.rho - q.rho;
  const double s2 = dz * dz + dt * dt + dr * dr +
                    4.0 * p.rho * q.rho * sin_half_sq(p.phi - q.phi);
  return std::sqrt(s2);
}

SeparationInvariants separation(const ConePoint& a, const ConePoint& b) {
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double r1 = std::hypot(p.rho, p.z);
  const double r2 = std::hypot(q.rho, q.z);
  const double dt = p.tau - q.tau;
  const double s1 = p.rho / r1;
  const double s2 = q.rho / r2;
  const double c1 = p.z / r1;
  const double c2 = q.z / r2;
  SeparationInvariants out;
  out.zeta = (dt * dt + r1 * r1 + r2 * r2) / (2.0 * r1 * r2);
  const double dz = p.z - q.z;
  const double dr = p.rho - q.rho;
  out.chi = acosh1p((dt * dt + dz * dz + dr * dr) / (2.0 * p.rho * q.rho));
  out.cos_gamma = c1 * c2 + s1 * s2 * std::cos(p.phi - q.phi);
  return out;
}

double generalized_heine_rhs(double alpha, double theta, double theta_p,
                             double dphi, double chi) {
  check_alpha(alpha);
  if (!(chi >= 0.0)) throw DomainError("chi must be >= 0");
  const double denom =
      2.0 * std::pow(std::sinh(0.5 * chi / alpha), 2) + 2.0 * sin_half_sq(dphi);
  if (!(denom > 1e-14)) {
    throw CoincidenceError("generalized Heine kernel is singular (chi = 0, dphi = 0)");
  }
  const double ratio =
      chi < 1e-8 ? 1.0 / alpha : std::sinh(chi / alpha) / std::sinh(chi);
  return ratio / (std::sin(theta) * std::sin(theta_p) * denom);
}

double g4_closed(const ConePoint& a, const ConePoint& b, double alpha) {
  check_alpha(alpha);
  guard(a, b);
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double dt = p.tau - q.tau;
  const double dz = p.z - q.z;
  const double dr = p.rho - q.rho;
  const double chi = acosh1p((dt * dt + dz * dz + dr * dr) / (2.0 * p.rho * q.rho));
  const double denom =
      2.0 * std::pow(std::sinh(0.5 * chi / alpha), 2) + 2.0 * sin_half_sq(p.phi - q.phi);
  if (!(denom > 1e-14)) {
    throw CoincidenceError("null-separated image: cosh(chi/alpha) - cos(dphi) vanishes");
  }
  const double ratio =
      chi < 1e-8 ? 1.0 / alpha : std::sinh(chi / alpha) / std::sinh(chi);
  return ratio / (8.0 * pi * pi * alpha * p.rho * q.rho * denom);
}

modesum::SumResult g4_modesum_spherical(const ConePoint& a, const ConePoint& b,
                                        double alpha,
                                        const modesum::Truncation& t) {
  check_alpha(alpha);
  guard(a, b);
  const auto sa = convert(a, Chart::spherical);
  const auto sb = convert(b, Chart::spherical);
  const auto inv = separation(a, b);
  if (!(inv.zeta > 1.0 + 1e-6)) {
    throw SlowConvergence("zeta too close to 1 for the spherical mode sum");
  }
  const double zeta = inv.zeta;
  modesum::Problem prob;
  prob.alpha = alpha;
  prob.x1 = std::cos(sa.coords[1]);
  prob.x2 = std::cos(sb.coords[1]);
  prob.dphi = sa.coords[2] - sb.coords[2];
  prob.decay = std::acosh(zeta);
  prob.weight = [zeta](double mu, std::span<double> w) {
    specfun::legendre_Q_band(mu, zeta, w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] *= 2.0 * (mu + static_cast<double>(k)) + 1.0;
    }
  };
  auto r = modesum::azimuthal_sum(prob, t);
  const double scale = 1.0 / (8.0 * pi * pi * alpha * sa.coords[0] * sb.coords[0]);
  r.value *= scale;
  r.tail *= scale;
  return r;
}

Estimate bessel_integral_lhs(double lambda, double r_lo, double r_hi,
                             double dtau, double tol) {
  if (!(lambda > -1.0)) {
    throw DomainError("the frequency integral diverges for lambda <= -1 (got " +
                      to_text(lambda) + ")");
  }
  if (!(r_lo > 0.0 && r_lo <= r_hi)) {
    throw DomainError("bessel_integral_lhs requires 0 < r_lo <= r_hi");
  }
  if (r_lo == r_hi && dtau == 0.0) {
    throw CoincidenceError("coincident radii with zero time separation");
  }
  const double nu = lambda + 0.5;
  auto f = [=](double w) {
    if (w == 0.0) return 0.0;
    const double x1 = w * r_lo;
    const double x2 = w * r_hi;
    const double order = std::abs(nu);
    const auto lo = specfun::bessel_IK_scaled(order, x1);
    const auto hi = specfun::bessel_IK_scaled(order, x2);
    double i_lo = lo.I;
    if (nu < 0.0) {
      // I_{-a} = I_a + (2/pi) sin(a pi) K_a
      i_lo += 2.0 / pi * std::sin(order * pi) * lo.K * std::exp(-2.0 * x1);
    }
    return i_lo * hi.K * std::exp(x1 - x2);
  };
  const double scale = r_hi > r_lo ? 1.0 / (r_hi - r_lo) : 1.0 / r_hi;
  return numerics::integrate_cosine(f, dtau, tol, std::min(scale, 1e3));
}

Estimate g3_spherical_sum(const ConePoint& a, const ConePoint& b, double alpha,
                          const modesum::Truncation& t) {
  check_alpha(alpha);
  guard(a, b);
  const auto sa = convert(a, Chart::spherical);
  const auto sb = convert(b, Chart::spherical);
  const double r_lo = std::min(sa.coords[0], sb.coords[0]);
  const double r_hi = std::max(sa.coords[0], sb.coords[0]);
  const double decay = std::log(r_hi / r_lo);
  modesum::Problem prob;
  prob.alpha = alpha;
  prob.x1 = std::cos(sa.coords[1]);
  prob.x2 = std::cos(sb.coords[1]);
  prob.dphi = sa.coords[2] - sb.coords[2];
  prob.decay = decay;
  prob.weight = [decay](double mu, std::span<double> w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = std::exp(-decay * (mu + static_cast<double>(k)));
    }
  };
  const auto r = modesum::azimuthal_sum(prob, t);
  const double scale = 1.0 / (4.0 * pi * alpha * r_hi);
  return {r.value * scale, r.tail * scale};
}

Estimate g3_cylindrical_Qsum(const ConePoint& a, const ConePoint& b,
                             double alpha, double tol) {
  check_alpha(alpha);
  guard(a, b);
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double d = chi3_minus_one(p, q);
  const double xi3 = acosh1p(d);
  const double chi3 = 1.0 + d;
  const auto s = sum_over_m(alpha, p.phi - q.phi, xi3, tol, [chi3](double mu) {
    return specfun::legendre_Q(mu - 0.5, chi3);
  });
  const double scale = 1.0 / (4.0 * pi * pi * alpha * std::sqrt(p.rho * q.rho));
  return {s.value * scale, s.error * scale};
}

Estimate g3_axisym_integral(const ConePoint& a, const ConePoint& b,
                            double alpha, double tol) {
  check_alpha(alpha);
  guard(a, b);
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double dz = p.z - q.z;
  const double dr = p.rho - q.rho;
  const double base = dz * dz + dr * dr;
  const double rr = p.rho * q.rho;
  const double xi3 = acosh1p(chi3_minus_one(p, q));
  double quad_error = 0.0;
  const auto s = sum_over_m(alpha, p.phi - q.phi, xi3, tol, [&](double mu) {
    auto f = [=](double psi) {
      const double den = base + 4.0 * rr * sin_half_sq(psi);
      const double sn = std::sin(psi);
      const double core = rr * sn * sn / den;
      return (mu == 0.0 ? 1.0 : std::pow(core, mu)) / std::sqrt(den);
    };
    const auto e = numerics::integrate(f, 0.0, pi, tol);
    quad_error += std::abs(e.error);
    return e.value;
  });
  const double scale = 1.0 / (4.0 * pi * pi * alpha);
  return {s.value * scale, (s.error + 2.0 * quad_error) * scale};
}

double linet_F(double alpha, double u, double psi) {
  if (alpha == 1.0) return 0.0;
  const double a = pi / alpha;
  const double s = std::sinh(0.5 * u / alpha);
  const double s2 = s * s;
  if (s2 > 1e150) return 0.0;  // F ~ e^{-u/alpha}; below any tolerance
  const double dm = 2.0 * s2 + 2.0 * sin_half_sq(psi - a);
  const double dp = 2.0 * s2 + 2.0 * sin_half_sq(psi + a);
  // sin 2a - 2 cosh(u/alpha) cos(psi) sin a, regrouped so that nothing
  // cancels where dm or dp vanish.
  const double num = 2.0 * std::sin(a) *
                     (2.0 * std::sin(0.5 * (psi + a)) * std::sin(0.5 * (psi - a)) -
                      2.0 * s2 * std::cos(psi));
  return num / (dm * dp);
}

double linet_images(double alpha, double d, double rr, double dphi) {
  const double psi = std::remainder(dphi, kTwoPi);
  const double base = d - 2.0 * rr;  // dz^2 + (rho - rho')^2
  double sum = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double ang = alpha * (psi + kTwoPi * k);
    if (std::abs(ang) >= pi) continue;
    const double s2 = base + 4.0 * rr * sin_half_sq(ang);
    if (!(s2 > kCoincidenceGuard * kCoincidenceGuard)) {
      throw CoincidenceError("point coincides with an image");
    }
    sum += 1.0 / (4.0 * pi * std::sqrt(s2));
  }
  return sum;
}

Estimate g3_linet(const ConePoint& a, const ConePoint& b, double alpha,
                  double tol) {
  check_alpha(alpha);
  if (!(alpha > 0.5)) {
    throw DomainError("the Linet representation needs alpha > 1/2 (got " +
                      to_text(alpha) + ")");
  }
  guard(a, b);
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double dz = p.z - q.z;
  const double d = p.rho * p.rho + q.rho * q.rho + dz * dz;
  const double rr = p.rho * q.rho;
  const double dphi = p.phi - q.phi;
  const double images = linet_images(alpha, d, rr, dphi);
  if (alpha == 1.0) return {images, 0.0};
  const double psi = std::remainder(dphi, kTwoPi);
  auto f = [=](double u) {
    return linet_F(alpha, u, psi) / std::sqrt(d + 2.0 * rr * std::cosh(u));
  };
  const auto e = numerics::integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol);
  const double scale = 1.0 / (8.0 * pi * pi * alpha);
  return {images + e.value * scale, e.error * scale};
}

Estimate g3_toroidal_sum(const ConePoint& a, const ConePoint& b, double alpha,
                         double tol) {
  check_alpha(alpha);
  guard(a, b);
  const auto ta = convert(a, Chart::toroidal);
  const auto tb = convert(b, Chart::toroidal);
  const double mu_lo = std::min(ta.coords[0], tb.coords[0]);
  const double mu_hi = std::max(ta.coords[0], tb.coords[0]);
  const double dmu = mu_hi - mu_lo;
  if (!(dmu > 1e-9)) {
    throw SlowConvergence("toroidal sum needs distinct mu coordinates");
  }
  const double x_lo = std::cosh(mu_lo);
  const double x_hi = std::cosh(mu_hi);
  const double deta = ta.coords[1] - tb.coords[1];
  const double rho_n = std::exp(-dmu);
  double err = 0.0;
  auto n_sum = [&](double mu) {
    double s = specfun::axis_pq_product(-0.5, mu, x_lo, x_hi);
    for (int n = 1; n < kMaxBands; ++n) {
      const double t = specfun::axis_pq_product(n - 0.5, mu, x_lo, x_hi);
      s += 2.0 * std::cos(n * deta) * t;
      const double tail = 2.0 * std::abs(t) * rho_n / (1.0 - rho_n);
      if (tail <= 0.1 * tol * std::max(1.0, std::abs(s))) {
        err += tail;
        return s;
      }
    }
    throw SlowConvergence("toroidal n-sum did not converge");
  };
  const Cyl p = cyl(a);
  const Cyl q = cyl(b);
  const double xi3 = acosh1p(chi3_minus_one(p, q));
  const auto s = sum_over_m(alpha, p.phi - q.phi, xi3, tol, n_sum);
  const double da = std::cosh(ta.coords[0]) - std::cos(ta.coords[1]);
  const double db = std::cosh(tb.coords[0]) - std::cos(tb.coords[1]);
  const double scale = std::sqrt(da * db) / (4.0 * pi * pi * alpha);
  return {s.value * scale, (s.error + 2.0 * err) * scale};
}

Estimate g3_spheroidal_sum(const ConePoint& a, const ConePoint& b,
                           double alpha, const modesum::Truncation& t) {
  check_alpha(alpha);
  guard(a, b);
  const auto pa = convert(a, Chart::spheroidal);
  const auto pb = convert(b, Chart::spheroidal);
  const double s_lo = std::min(pa.coords[0], pb.coords[0]);
  const double s_hi = std::max(pa.coords[0], pb.coords[0]);
  const double x_lo = std::cosh(s_lo);
  const double x_hi = std::cosh(s_hi);
  modesum::Problem prob;
  prob.alpha = alpha;
  prob.x1 = std::cos(pa.coords[1]);
  prob.x2 = std::cos(pb.coords[1]);
  prob.dphi = pa.coords[2] - pb.coords[2];
  prob.decay = s_hi - s_lo;
  prob.weight = [x_lo, x_hi](double mu, std::span<double> w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double lam = mu + static_cast<double>(k);
      w[k] = (2.0 * lam + 1.0) * specfun::axis_pq_product(lam, mu, x_lo, x_hi);
    }
  };
  const auto r = modesum::azimuthal_sum(prob, t);
  const double scale = 1.0 / (4.0 * pi * alpha);
  return {r.value * scale, r.tail * scale};
}

}  // namespace stringvac::conespace
