#include "stringvac/identities.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "stringvac/conespace.hpp"
#include "stringvac/errors.hpp"
#include "stringvac/modesum.hpp"
#include "stringvac/numerics.hpp"
#include "stringvac/specfun.hpp"

namespace stringvac::identities {

namespace {

using std::numbers::pi;

// Mode sums run well below the identity tolerance so that the residual
// measures the identity, not the truncation.
double sum_tol(double tol) { return std::clamp(1e-4 * tol, 1e-14, 1e-9); }

void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1]");
  }
}

void check_angle(double theta, const char* name) {
  if (!(theta > 0.0 && theta < pi)) {
    throw DomainError(std::string(name) + " must lie in (0, pi)");
  }
}

void check_m(int m) {
  if (m < 0) throw IndexError("band index m must be >= 0");
}

// One band with its degree cutoff raised until the tail certificate meets
// tol (or fixed when lmax > 0).
struct BandResult {
  modesum::Band band;
  double lambda_max = 0.0;
};

BandResult single_band(const modesum::Problem& p, int m, double tol,
                       int lmax) {
  const double mu = m / p.alpha;
  if (lmax > 0) {
    const double lam = lmax - m + mu;
    return {modesum::band_sum(p, m, lam), lam};
  }
  double lam = mu + modesum::default_lambda_max(p.decay, tol);
  for (;;) {
    const auto b = modesum::band_sum(p, m, lam);
    if (b.tail <= tol * std::max(1.0, std::abs(b.sum))) return {b, lam};
    lam += std::max(10.0, 0.5 * (lam - mu));
    if (lam > 2e5) throw SlowConvergence("band sum needs lambda_max beyond 2e5");
  }
}

modesum::Truncation truncation(int lmax, int mmax, double tol) {
  modesum::Truncation t;
  t.lambda_max = lmax > 0 ? static_cast<double>(lmax) : 0.0;
  t.mmax = mmax;
  t.tol = sum_tol(tol);
  t.threads = 1;
  return t;
}

// Abel summation of an equal-radius sum: values at t = 1 - s on the ladder
// s_k = s0/(k+1), extrapolated to s = 0. The regulated sum is analytic in s
// out to the nearest singularity at |s| = 2 sin(gamma/2), gamma being the
// smallest angle between the points; s0 is kept at a quarter of that.
struct AbelResult {
  double value = 0.0;
  double extrapolation_error = 0.0;
  double tail = 0.0;
  double lambda_max = 0.0;
  int bands = 0;
};

constexpr int kAbelLevels = 8;

double abel_start(double gamma) {
  const double s0 = std::min(0.4, 0.5 * std::sin(0.5 * gamma));
  if (s0 / kAbelLevels < 2e-3) {
    throw SlowConvergence(
        "points too close in angle for the equal-radius sum (gamma = " +
        to_text(gamma) + ")");
  }
  return s0;
}

AbelResult abel_sum(const std::function<modesum::SumResult(double decay)>& reg,
                    double s0) {
  std::vector<double> h;
  std::vector<double> v;
  AbelResult out;
  for (int k = 0; k < kAbelLevels; ++k) {
    const double s = s0 / (k + 1);
    const auto r = reg(-std::log1p(-s));
    h.push_back(s);
    v.push_back(r.value);
    out.tail = std::max(out.tail, r.tail);
    out.lambda_max = std::max(out.lambda_max, r.lambda_max);
    out.bands = std::max(out.bands, r.bands);
  }
  const auto e = numerics::extrapolate_to_zero(h, v);
  out.value = e.value;
  out.extrapolation_error = e.error;
  return out;
}

// Generic (m, l) sum with (2 lam + 1) Q_lam(zeta) weights.
modesum::SumResult heine_double_sum(double alpha, double theta, double theta_p,
                                    double dphi, double zeta, int lmax, int mmax,
                                    double tol) {
  if (!(zeta > 1.0 + specfun::kSingularGuard)) {
    throw DomainError("zeta = " + to_text(zeta) +
                      " is not above 1; the Q-form mode sum is undefined there");
  }
  modesum::Problem p;
  p.alpha = alpha;
  p.x1 = std::cos(theta);
  p.x2 = std::cos(theta_p);
  p.dphi = dphi;
  p.decay = std::acosh(zeta);
  p.weight = [zeta](double mu, std::span<double> w) {
    specfun::legendre_Q_band(mu, zeta, w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] *= 2.0 * (mu + static_cast<double>(k)) + 1.0;
    }
  };
  return modesum::azimuthal_sum(p, truncation(lmax, mmax, tol));
}

double heine_zeta(double theta, double theta_p, double chi) {
  return std::cos(theta) * std::cos(theta_p) +
         std::cosh(chi) * std::sin(theta) * std::sin(theta_p);
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::error: return "error";
    case Status::outside_domain: return "outside_domain";
  }
  return "?";
}

void finalize(IdentityCase& c, double abs_tail) {
  c.residual_abs = std::abs(c.lhs - c.rhs);
  c.residual_rel = c.rhs != 0.0 ? c.residual_abs / std::abs(c.rhs) : c.residual_abs;
  const bool relative = std::abs(c.rhs) > 1.0;
  c.residual = relative ? c.residual_rel : c.residual_abs;
  c.certified_tail = relative ? abs_tail / std::abs(c.rhs) : abs_tail;
  c.passed = std::isfinite(c.residual) && c.residual <= c.tol;
  c.status = c.passed ? Status::passed : Status::failed;
}

IdentityCase check_heine_classic(double zeta, double psi, int lmax, double tol) {
  check_tol(tol);
  if (!(zeta > 1.0 + specfun::kSingularGuard)) {
    throw DomainError("classic Heine identity needs zeta > 1");
  }
  if (!(std::abs(psi) < zeta)) {
    throw DomainError("classic Heine identity needs |psi| < zeta");
  }
  IdentityCase c;
  c.name = "heine_classic";
  c.params = {{"zeta", zeta}, {"psi", psi}};
  c.tol = tol;
  const double xi = std::acosh(zeta);
  const double apsi = std::abs(psi);
  const double decay = xi - (apsi > 1.0 ? std::acosh(apsi) : 0.0);
  const double stol = sum_tol(tol);
  int L = lmax > 0 ? lmax
                   : static_cast<int>(modesum::default_lambda_max(decay, stol));
  const double rho = std::exp(-decay);
  double tail = 0.0;
  for (;;) {
    std::vector<double> q(static_cast<std::size_t>(L) + 1);
    specfun::legendre_Q_band(0.0, zeta, q);
    double p_prev = 0.0;
    double p = 1.0;
    double sum = 0.0;
    for (int l = 0; l <= L; ++l) {
      sum += (2.0 * l + 1.0) * p * q[static_cast<std::size_t>(l)];
      if (l < L) {
        const double next = ((2.0 * l + 1.0) * psi * p - l * p_prev) / (l + 1.0);
        p_prev = p;
        p = next;
      }
    }
    const double pmax = apsi > 1.0 ? std::abs(p) : 1.0;
    tail = (2.0 * L + 1.0) * q.back() * pmax * rho / (1.0 - rho);
    c.lhs = sum;
    if (lmax > 0 || tail <= stol * std::max(1.0, std::abs(sum))) break;
    L += std::max(10, L / 2);
    if (L > 200000) throw SlowConvergence("classic Heine sum needs lmax > 2e5");
  }
  c.lmax = L;
  c.rhs = 1.0 / (zeta - psi);
  finalize(c, tail);
  return c;
}

IdentityCase check_heine_addition(double zeta, double theta, double theta_p,
                                  double dphi, int lmax, double tol) {
  check_tol(tol);
  check_angle(theta, "theta");
  check_angle(theta_p, "theta'");
  IdentityCase c;
  c.name = "heine_addition";
  c.params = {{"zeta", zeta}, {"theta", theta}, {"theta_p", theta_p}, {"dphi", dphi}};
  c.tol = tol;
  const auto r = heine_double_sum(1.0, theta, theta_p, dphi, zeta, lmax, -1, tol);
  const double cos_gamma = std::cos(theta) * std::cos(theta_p) +
                           std::sin(theta) * std::sin(theta_p) * std::cos(dphi);
  c.lhs = r.value;
  c.rhs = 1.0 / (zeta - cos_gamma);
  c.lmax = static_cast<int>(r.lambda_max);
  c.mmax = r.bands;
  finalize(c, r.tail);
  return c;
}

IdentityCase check_heine_generalized(double alpha, double theta,
                                     double theta_p, double dphi, double chi,
                                     int lmax, int mmax, double tol) {
  check_tol(tol);
  check_alpha(alpha);
  check_angle(theta, "theta");
  check_angle(theta_p, "theta'");
  if (!(chi > 0.0)) throw DomainError("chi must be > 0");
  IdentityCase c;
  c.name = "heine_generalized";
  c.params = {{"alpha", alpha}, {"theta", theta}, {"theta_p", theta_p},
              {"dphi", dphi},   {"chi", chi}};
  c.tol = tol;
  const double zeta = heine_zeta(theta, theta_p, chi);
  c.diagnostics["zeta"] = zeta;
  const auto r = heine_double_sum(alpha, theta, theta_p, dphi, zeta, lmax, mmax, tol);
  c.lhs = r.value;
  c.rhs = conespace::generalized_heine_rhs(alpha, theta, theta_p, dphi, chi);
  c.lmax = static_cast<int>(r.lambda_max);
  c.mmax = r.bands;
  c.diagnostics["terms"] = static_cast<double>(r.terms);
  finalize(c, r.tail);
  return c;
}

IdentityCase check_app5(double alpha, int m, double theta, double theta_p,
                        int lmax, double tol) {
  check_tol(tol);
  check_alpha(alpha);
  check_m(m);
  check_angle(theta, "theta");
  check_angle(theta_p, "theta'");
  if (std::abs(theta - theta_p) < 1e-3) {
    throw CoincidenceError("equal-radius band sum diverges at theta = theta'");
  }
  IdentityCase c;
  c.name = "app5";
  c.params = {{"alpha", alpha}, {"m", static_cast<double>(m)},
              {"theta", theta}, {"theta_p", theta_p}};
  c.tol = tol;
  const double stol = sum_tol(tol);
  modesum::Problem p;
  p.alpha = alpha;
  p.x1 = std::cos(theta);
  p.x2 = std::cos(theta_p);
  const auto abel = abel_sum(
      [&](double decay) {
        p.decay = decay;
        p.weight = [decay](double mu, std::span<double> w) {
          for (std::size_t k = 0; k < w.size(); ++k) {
            w[k] = std::exp(-decay * (mu + static_cast<double>(k)));
          }
        };
        const auto b = single_band(p, m, stol, lmax);
        modesum::SumResult r;
        r.value = b.band.sum;
        r.tail = b.band.tail;
        r.lambda_max = b.lambda_max;
        r.bands = m;
        return r;
      },
      abel_start(std::abs(theta - theta_p)));
  const double s = std::sin(theta) * std::sin(theta_p);
  const double arg_m1 = (1.0 - std::cos(theta - theta_p)) / s;
  c.lhs = abel.value;
  c.rhs = specfun::legendre_Q(m / alpha - 0.5, 1.0 + arg_m1) / (pi * std::sqrt(s));
  c.lmax = static_cast<int>(abel.lambda_max);
  c.mmax = m;
  c.diagnostics["extrapolation_error"] = abel.extrapolation_error;
  finalize(c, abel.extrapolation_error + abel.tail);
  return c;
}

IdentityCase check_linet_sum(double alpha, double theta, double theta_p,
                             double dphi, double tol) {
  check_tol(tol);
  check_alpha(alpha);
  if (!(alpha > 0.5)) {
    throw DomainError("the Linet representation needs alpha > 1/2 (got " +
                      to_text(alpha) + ")");
  }
  check_angle(theta, "theta");
  check_angle(theta_p, "theta'");
  IdentityCase c;
  c.name = "linet";
  c.params = {{"alpha", alpha}, {"theta", theta}, {"theta_p", theta_p}, {"dphi", dphi}};
  c.tol = tol;
  const double ss = std::sin(theta) * std::sin(theta_p);
  const double cc = std::cos(theta) * std::cos(theta_p);
  // Unit radius: rho = sin th, z = cos th.
  const double d = 2.0 - 2.0 * cc;
  if (std::abs(theta - theta_p) < 1e-7 &&
      std::abs(std::remainder(dphi, 2.0 * pi)) < 1e-7) {
    throw CoincidenceError("Linet identity is singular at coincidence");
  }
  const double images = 4.0 * pi * conespace::linet_images(alpha, d, ss, dphi);
  const double cosh_xi = (1.0 - cc) / ss;
  const double psi = std::remainder(dphi, 2.0 * pi);
  double integral = 0.0;
  double integral_err = 0.0;
  if (alpha != 1.0) {
    const auto e = numerics::integrate(
        [&](double u) {
          return conespace::linet_F(alpha, u, psi) / std::sqrt(cosh_xi + std::cosh(u));
        },
        0.0, std::numeric_limits<double>::infinity(), 1e-12);
    const double pref = 1.0 / (2.0 * pi * alpha * std::sqrt(2.0 * ss));
    integral = pref * e.value;
    integral_err = pref * e.error;
  }
  // Smallest angle between the points measured on the cone; beyond
  // alpha |psi| = pi the shortest route passes the axis.
  const double gamma_min = std::acos(
      std::clamp(cc + ss * std::cos(std::min(alpha * std::abs(psi), pi)), -1.0, 1.0));
  modesum::Problem p;
  p.alpha = alpha;
  p.x1 = std::cos(theta);
  p.x2 = std::cos(theta_p);
  p.dphi = dphi;
  const auto trunc = truncation(0, -1, tol);
  const auto abel = abel_sum(
      [&](double decay) {
        p.decay = decay;
        p.weight = [decay](double mu, std::span<double> w) {
          for (std::size_t k = 0; k < w.size(); ++k) {
            w[k] = std::exp(-decay * (mu + static_cast<double>(k)));
          }
        };
        return modesum::azimuthal_sum(p, trunc);
      },
      abel_start(gamma_min));
  c.lhs = abel.value / alpha;
  c.rhs = images + integral;
  c.lmax = static_cast<int>(abel.lambda_max);
  c.mmax = abel.bands;
  c.diagnostics["image_term"] = images;
  c.diagnostics["integral_term"] = integral;
  c.diagnostics["extrapolation_error"] = abel.extrapolation_error;
  finalize(c, (abel.extrapolation_error + abel.tail) / alpha + integral_err);
  return c;
}

IdentityCase check_toroidal_addition(double alpha, int m, double mu,
                                     double mu_p, double eta, double eta_p,
                                     int nmax, double tol) {
  check_tol(tol);
  check_alpha(alpha);
  check_m(m);
  if (!(mu > 0.0 && mu_p > 0.0)) throw DomainError("toroidal mu must be > 0");
  const double mu_lo = std::min(mu, mu_p);
  const double mu_hi = std::max(mu, mu_p);
  if (!(mu_hi - mu_lo > 1e-9)) {
    throw SlowConvergence("toroidal n-sum needs distinct mu coordinates");
  }
  IdentityCase c;
  c.name = "toroidal";
  c.params = {{"alpha", alpha}, {"m", static_cast<double>(m)}, {"mu", mu},
              {"mu_p", mu_p},   {"eta", eta},                  {"eta_p", eta_p}};
  c.tol = tol;
  const double order = m / alpha;
  const double x_lo = std::cosh(mu_lo);
  const double x_hi = std::cosh(mu_hi);
  const double deta = eta - eta_p;
  const double rho = std::exp(-(mu_hi - mu_lo));
  const double stol = sum_tol(tol);
  double re = specfun::axis_pq_product(-0.5, order, x_lo, x_hi);
  double im = 0.0;
  double max_imag = 0.0;
  double tail = 0.0;
  int n = 1;
  for (;; ++n) {
    const double t = specfun::axis_pq_product(n - 0.5, order, x_lo, x_hi);
    // +n and -n terms accumulated separately, as in the complex sum.
    re += std::cos(n * deta) * t;
    im += std::sin(n * deta) * t;
    re += std::cos(-n * deta) * t;
    im += std::sin(-n * deta) * t;
    max_imag = std::max(max_imag, std::abs(im));
    tail = 2.0 * std::abs(t) * rho / (1.0 - rho);
    if (nmax > 0 ? n >= nmax : tail <= stol * std::max(1.0, std::abs(re))) break;
    if (n > 100000) throw SlowConvergence("toroidal n-sum did not converge");
  }
  const double chi = (std::cosh(mu) * std::cosh(mu_p) - std::cos(deta)) /
                     (std::sinh(mu) * std::sinh(mu_p));
  const double shs = std::sinh(mu) * std::sinh(mu_p);
  c.lhs = re;
  c.rhs = specfun::legendre_Q(order - 0.5, chi) / std::sqrt(shs);
  c.lmax = n;
  c.mmax = m;
  const double dd = (std::cosh(mu) - std::cos(eta)) * (std::cosh(mu_p) - std::cos(eta_p));
  c.diagnostics["chi"] = chi;
  c.diagnostics["max_imag"] = max_imag;
  c.diagnostics["printed_form_ratio"] = (c.rhs / std::sqrt(dd)) / c.lhs;
  finalize(c, tail);
  return c;
}

IdentityCase check_spheroidal_sum(double alpha, int m, double theta,
                                  double theta_p, double sigma_lo,
                                  double sigma_hi, int lmax, double tol) {
  check_tol(tol);
  check_alpha(alpha);
  check_m(m);
  check_angle(theta, "theta");
  check_angle(theta_p, "theta'");
  if (!(sigma_lo > 0.0 && sigma_hi > sigma_lo)) {
    throw DomainError("spheroidal sum needs 0 < sigma_lo < sigma_hi");
  }
  IdentityCase c;
  c.name = "spheroidal";
  c.params = {{"alpha", alpha},   {"m", static_cast<double>(m)},
              {"theta", theta},   {"theta_p", theta_p},
              {"sigma_lo", sigma_lo}, {"sigma_hi", sigma_hi}};
  c.tol = tol;
  const double x_lo = std::cosh(sigma_lo);
  const double x_hi = std::cosh(sigma_hi);
  modesum::Problem p;
  p.alpha = alpha;
  p.x1 = std::cos(theta);
  p.x2 = std::cos(theta_p);
  p.decay = sigma_hi - sigma_lo;
  p.weight = [x_lo, x_hi](double mu, std::span<double> w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double lam = mu + static_cast<double>(k);
      w[k] = (2.0 * lam + 1.0) * specfun::axis_pq_product(lam, mu, x_lo, x_hi);
    }
  };
  const auto b = single_band(p, m, sum_tol(tol), lmax);
  const double ch1 = x_lo;
  const double ch2 = x_hi;
  const double s1 = std::sin(theta);
  const double s2 = std::sin(theta_p);
  const double sh = std::sinh(sigma_lo) * std::sinh(sigma_hi);
  const double chi = (ch1 * ch1 + ch2 * ch2 - s1 * s1 - s2 * s2 -
                      2.0 * ch1 * ch2 * std::cos(theta) * std::cos(theta_p)) /
                     (2.0 * sh * s1 * s2);
  if (!(chi > 1.0)) {
    throw CoincidenceError("spheroidal chi must exceed 1 for separated points");
  }
  const double order = m / alpha;
  const double q = specfun::legendre_Q(order - 0.5, chi) / std::sqrt(sh * s1 * s2);
  c.lhs = b.band.sum;
  c.rhs = q / pi;
  c.lmax = static_cast<int>(b.lambda_max);
  c.mmax = m;
  c.diagnostics["chi"] = chi;
  c.diagnostics["audit_ratio"] = c.lhs / (q / (pi * alpha));
  finalize(c, b.band.tail);
  return c;
}

IdentityCase check_norm_integral(double alpha, int m, int l, int l_p,
                                 double tol) {
  check_tol(tol);
  check_alpha(alpha);
  check_m(m);
  if (l < m || l_p < m) throw IndexError("norm integral needs l, l' >= m");
  IdentityCase c;
  c.name = "norm_integral";
  c.params = {{"alpha", alpha},
              {"m", static_cast<double>(m)},
              {"l", static_cast<double>(l)},
              {"l_p", static_cast<double>(l_p)}};
  c.tol = tol;
  const double mu = m / alpha;
  const double lam = l - m + mu;
  const double lam_p = l_p - m + mu;
  const double edge = std::lgamma(1.0 + mu) + mu * std::numbers::ln2;
  // Near x = +-1 the functions are (1-x^2)^{mu/2} / (2^mu Gamma(1+mu)) times
  // the parity sign; that limit replaces the evaluator inside the guard band.
  auto ferrers = [&](double nu, double x) {
    if (1.0 - std::abs(x) > 1e-11) return specfun::ferrers_P({nu, mu}, x);
    const double v = std::exp(0.5 * mu * std::log1p(-x * x) - edge);
    const int k = static_cast<int>(std::lround(nu - mu));
    return (x < 0.0 && (k % 2 == 1)) ? -v : v;
  };
  const auto e = numerics::integrate_endpoint(
      [&](double x) { return ferrers(lam, x) * ferrers(lam_p, x); }, -1.0, 1.0,
      1e-12);
  // Compared in normalised form so the tolerance means the same thing for
  // every order.
  auto norm_of = [mu](double nu) {
    return 2.0 / (2.0 * nu + 1.0) *
           std::exp(-specfun::log_gamma_ratio(nu + mu + 1.0, nu - mu + 1.0));
  };
  const double norm = norm_of(lam);
  const double norm_p = norm_of(lam_p);
  const double scale = std::sqrt(norm * norm_p);
  c.lhs = e.value / scale;
  c.rhs = l == l_p ? 1.0 : 0.0;
  c.diagnostics["raw_integral"] = e.value;
  c.diagnostics["norm"] = l == l_p ? norm : 0.0;
  c.lmax = std::max(l, l_p);
  c.mmax = m;
  finalize(c, e.error / scale);
  return c;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "heine_classic", "heine_addition", "heine_generalized", "app5",
      "linet",         "toroidal",       "spheroidal",        "norm_integral"};
  return names;
}

const std::vector<std::string>& identity_params(const std::string& identity) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"heine_classic", {"zeta", "psi"}},
      {"heine_addition", {"zeta", "theta", "theta_p", "dphi"}},
      {"heine_generalized", {"alpha", "theta", "theta_p", "dphi", "chi"}},
      {"app5", {"alpha", "m", "theta", "theta_p"}},
      {"linet", {"alpha", "theta", "theta_p", "dphi"}},
      {"toroidal", {"alpha", "m", "mu", "mu_p", "eta", "eta_p"}},
      {"spheroidal", {"alpha", "m", "theta", "theta_p", "sigma_lo", "sigma_hi"}},
      {"norm_integral", {"alpha", "m", "l", "l_p"}}};
  const auto it = table.find(identity);
  if (it == table.end()) {
    throw std::invalid_argument("unknown identity '" + identity + "'");
  }
  return it->second;
}

bool in_domain(const std::string& identity,
               const std::map<std::string, double>& p, std::string& why) {
  if (identity == "heine_generalized") {
    const double zeta = heine_zeta(p.at("theta"), p.at("theta_p"), p.at("chi"));
    if (!(zeta > 1.0 + specfun::kSingularGuard)) {
      why = "zeta = " + to_text(zeta) + " <= 1";
      return false;
    }
  } else if (identity == "heine_classic" || identity == "heine_addition") {
    if (!(p.at("zeta") > 1.0 + specfun::kSingularGuard)) {
      why = "zeta <= 1";
      return false;
    }
  }
  return true;
}

namespace {

int as_int(const std::map<std::string, double>& p, const char* key) {
  const double v = p.at(key);
  if (v != std::round(v)) {
    throw DomainError(std::string("parameter ") + key + " must be an integer");
  }
  return static_cast<int>(v);
}

}  // namespace

IdentityCase run_case(const std::string& id,
                      const std::map<std::string, double>& p, double tol,
                      int lmax, int mmax) {
  if (id == "heine_classic") {
    return check_heine_classic(p.at("zeta"), p.at("psi"), lmax, tol);
  }
  if (id == "heine_addition") {
    return check_heine_addition(p.at("zeta"), p.at("theta"), p.at("theta_p"),
                                p.at("dphi"), lmax, tol);
  }
  if (id == "heine_generalized") {
    return check_heine_generalized(p.at("alpha"), p.at("theta"), p.at("theta_p"),
                                   p.at("dphi"), p.at("chi"), lmax, mmax, tol);
  }
  if (id == "app5") {
    return check_app5(p.at("alpha"), as_int(p, "m"), p.at("theta"),
                      p.at("theta_p"), lmax, tol);
  }
  if (id == "linet") {
    return check_linet_sum(p.at("alpha"), p.at("theta"), p.at("theta_p"),
                           p.at("dphi"), tol);
  }
  if (id == "toroidal") {
    return check_toroidal_addition(p.at("alpha"), as_int(p, "m"), p.at("mu"),
                                   p.at("mu_p"), p.at("eta"), p.at("eta_p"),
                                   lmax, tol);
  }
  if (id == "spheroidal") {
    return check_spheroidal_sum(p.at("alpha"), as_int(p, "m"), p.at("theta"),
                                p.at("theta_p"), p.at("sigma_lo"),
                                p.at("sigma_hi"), lmax, tol);
  }
  if (id == "norm_integral") {
    return check_norm_integral(p.at("alpha"), as_int(p, "m"), as_int(p, "l"),
                               as_int(p, "l_p"), tol);
  }
  throw std::invalid_argument("unknown identity '" + id + "'");
}

std::vector<IdentityCase> run_suite(const std::vector<CaseSpec>& cases,
                                    int parallelism) {
  std::vector<IdentityCase> out(cases.size());
  const int n = static_cast<int>(cases.size());
  const int threads = std::max(1, parallelism);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    const auto& spec = cases[static_cast<std::size_t>(i)];
    auto& rec = out[static_cast<std::size_t>(i)];
    std::string why;
    if (spec.skip_outside_domain && !in_domain(spec.identity, spec.params, why)) {
      rec.name = spec.identity;
      rec.params = spec.params;
      rec.tol = spec.tol;
      rec.status = Status::outside_domain;
      rec.message = why;
      continue;
    }
    try {
      rec = run_case(spec.identity, spec.params, spec.tol, spec.lmax, spec.mmax);
    } catch (const Error& e) {
      rec = {};
      rec.name = spec.identity;
      rec.params = spec.params;
      rec.tol = spec.tol;
      rec.status = Status::error;
      rec.error_kind = e.kind();
      rec.message = e.what();
    } catch (const std::exception& e) {
      rec = {};
      rec.name = spec.identity;
      rec.params = spec.params;
      rec.tol = spec.tol;
      rec.status = Status::error;
      rec.error_kind = "Error";
      rec.message = e.what();
    }
  }
  return out;
}

}  // namespace stringvac::identities
