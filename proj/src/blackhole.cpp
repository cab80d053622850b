#include "stringvac/blackhole.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "stringvac/conespace.hpp"
#include "stringvac/errors.hpp"
#include "stringvac/numerics.hpp"
#include "stringvac/specfun.hpp"

namespace stringvac::blackhole {

namespace {

using std::numbers::pi;
using State = std::array<double, 2>;

// Homogeneous radial equation in u = ln(eta - 1), t = eta - 1:
//   chi_uu + t/(t+2) chi_u - [lam(lam+1) t/(t+2) + (n^2/16)(t+2)^2] chi = 0.
struct RadialSystem {
  double ll;  // lambda (lambda + 1)
  double n2;  // n^2 / 16

  void operator()(const State& y, State& dy, double u) const {
    const double t = std::exp(u);
    const double r = t / (t + 2.0);
    dy[0] = y[1];
    dy[1] = -r * y[1] + (ll * r + n2 * (t + 2.0) * (t + 2.0)) * y[0];
  }
};

void check_eta(double eta, double eta_max) {
  if (!(eta > 1.0)) throw DomainError("eta must be > 1 (got " + to_text(eta) + ")");
  if (eta > eta_max * (1.0 + 1e-12)) {
    throw DomainError("eta = " + to_text(eta) +
                      " lies beyond the tabulated range (eta_max = " +
                      to_text(eta_max) + ")");
  }
}

std::vector<State> integrate_table(const RadialSystem& sys, State y0,
                                   const std::vector<double>& times,
                                   double rtol) {
  namespace odeint = boost::numeric::odeint;
  std::vector<State> out;
  out.reserve(times.size());
  auto stepper = odeint::make_dense_output(1e-300, rtol,
                                           odeint::runge_kutta_dopri5<State>());
  const double dt = times[1] - times[0];
  try {
    odeint::integrate_times(stepper, sys, y0, times.begin(), times.end(), dt,
                            [&out](const State& y, double) { out.push_back(y); },
                            odeint::max_step_checker(100000));
  } catch (const std::exception& e) {
    throw StiffnessError(std::string("radial integration failed: ") + e.what());
  }
  for (const auto& y : out) {
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      throw StiffnessError("radial integration produced non-finite values");
    }
  }
  return out;
}

}  // namespace

DeficitGeometry DeficitGeometry::make(double alpha, double M) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1] (got " + to_text(alpha) + ")");
  }
  if (!(M > 0.0)) throw DomainError("mass must be > 0 (got " + to_text(M) + ")");
  return {alpha, M};
}

double lambda_of(int l, int m, double alpha) {
  if (l < 0 || std::abs(m) > l) {
    throw IndexError("mode index needs l >= |m| >= 0 (l = " + std::to_string(l) +
                     ", m = " + std::to_string(m) + ")");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  const int am = std::abs(m);
  return (l - am) + am / alpha;
}

double lambda_of(const ModeIndex& k, double alpha) { return lambda_of(k.l, k.m, alpha); }

double RadialSolutionPair::series_p(double t, double* dpdt) const {
  const double s = 0.5 * std::abs(n_);
  double sum = 0.0;
  double dsum = 0.0;
  double tk = 1.0;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    sum += coeff_[k] * tk;
    dsum += (static_cast<double>(k) + s) * coeff_[k] * tk;
    tk *= t;
  }
  const double ts = std::pow(t, s);
  if (dpdt) *dpdt = ts * dsum / t;
  return ts * sum;
}

double RadialSolutionPair::hermite(const std::vector<Node>& table, double u,
                                   double* chi_u) const {
  const double x = (u - u0_) / du_;
  const auto last = static_cast<double>(table.size() - 1);
  const double xc = std::clamp(x, 0.0, last);
  auto i = static_cast<std::size_t>(std::min(std::floor(xc), last - 1.0));
  const double s = xc - static_cast<double>(i);
  const Node& a = table[i];
  const Node& b = table[i + 1];
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  if (chi_u) {
    const double d00 = 6 * s2 - 6 * s;
    const double d10 = 3 * s2 - 4 * s + 1;
    const double d01 = -6 * s2 + 6 * s;
    const double d11 = 3 * s2 - 2 * s;
    *chi_u = (d00 * a.chi + d01 * b.chi) / du_ + d10 * a.chi_u + d11 * b.chi_u;
  }
  return h00 * a.chi + h10 * du_ * a.chi_u + h01 * b.chi + h11 * du_ * b.chi_u;
}

// Below the Frobenius start q follows from p and the Wronskian:
//   q = p [q0/p0 + int_eta^{eta0} 2|n| / ((x^2-1) p^2) dx].
double RadialSolutionPair::q_below_start(double eta, double* dq) const {
  const double t = eta - 1.0;
  const double an = std::abs(n_);
  const double p0 = series_p(delta0_, nullptr);
  const double q0 = q_.front().chi;
  const double u = std::log(t);
  double integral = 0.0;
  if (u0_ - u > 1e-12) {
    integral = numerics::integrate(
                   [&](double v) {
                     const double tt = std::exp(v);
                     const double pp = series_p(tt, nullptr);
                     return 2.0 * an / ((tt + 2.0) * pp * pp);
                   },
                   u, u0_, 1e-13)
                   .value;
  }
  const double ratio = q0 / p0 + integral;
  double dpdt = 0.0;
  const double p = series_p(t, &dpdt);
  if (dq) *dq = dpdt * ratio - 2.0 * an / (t * (t + 2.0) * p);
  return p * ratio;
}

double RadialSolutionPair::p(double eta) const {
  check_eta(eta, eta_max_);
  const double t = eta - 1.0;
  if (t <= delta0_) return series_p(t, nullptr);
  return hermite(p_, std::log(t), nullptr);
}

double RadialSolutionPair::dp(double eta) const {
  check_eta(eta, eta_max_);
  const double t = eta - 1.0;
  double d = 0.0;
  if (t <= delta0_) {
    series_p(t, &d);
    return d;
  }
  hermite(p_, std::log(t), &d);
  return d / t;
}

double RadialSolutionPair::q(double eta) const {
  check_eta(eta, eta_max_);
  const double t = eta - 1.0;
  if (t < delta0_) return q_below_start(eta, nullptr);
  return hermite(q_, std::log(t), nullptr);
}

double RadialSolutionPair::dq(double eta) const {
  check_eta(eta, eta_max_);
  const double t = eta - 1.0;
  double d = 0.0;
  if (t < delta0_) {
    q_below_start(eta, &d);
    return d;
  }
  hermite(q_, std::log(t), &d);
  return d / t;
}

double RadialSolutionPair::scaled_wronskian(double eta) const {
  return (eta * eta - 1.0) * (p(eta) * dq(eta) - dp(eta) * q(eta));
}

double RadialSolutionPair::wronskian_spread(double lo, double hi) const {
  const double w0 = wronskian_scale();
  double worst = 0.0;
  for (std::size_t i = 0; i < eta_.size(); ++i) {
    if (eta_[i] < lo || eta_[i] > hi) continue;
    const double t = eta_[i] - 1.0;
    const double w = (t + 2.0) * (p_[i].chi * q_[i].chi_u - p_[i].chi_u * q_[i].chi);
    worst = std::max(worst, std::abs(w / w0 - 1.0));
  }
  return worst;
}

std::vector<double> RadialSolutionPair::p_table() const {
  std::vector<double> out;
  out.reserve(p_.size());
  for (const auto& node : p_) out.push_back(node.chi);
  return out;
}

std::vector<double> RadialSolutionPair::q_table() const {
  std::vector<double> out;
  out.reserve(q_.size());
  for (const auto& node : q_) out.push_back(node.chi);
  return out;
}

RadialSolutionPair radial_solutions(int n, double lambda, const RadialOptions& opt) {
  if (n == 0) throw DomainError("radial_solutions needs n != 0; n = 0 is P/Q");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be >= 0");
  if (opt.series_terms < 4) throw DomainError("at least 4 series terms are needed");
  if (opt.samples < 16) throw DomainError("tabulation needs at least 16 samples");
  if (!(opt.delta0 > 0.0)) throw SeriesRadiusError("Frobenius start offset must be > 0");
  if (!(opt.eta_max > 1.0 + 2.0 * opt.delta0)) {
    throw DomainError("eta_max must exceed the Frobenius start");
  }

  RadialSolutionPair r;
  r.n_ = n;
  r.lambda_ = lambda;
  r.eta_max_ = opt.eta_max;
  r.delta0_ = opt.delta0;

  // Frobenius coefficients, exponent s = |n|/2, c_0 = 1:
  //   2k(k+2s) c_k = -[(k+s-1)(k+s) - lam(lam+1) - 3n^2/4] c_{k-1}
  //                  + (n^2/16)(6 c_{k-2} + c_{k-3}).
  const double s = 0.5 * std::abs(n);
  const double n2 = static_cast<double>(n) * n;
  const double ll = lambda * (lambda + 1.0);
  r.coeff_.assign(static_cast<std::size_t>(opt.series_terms), 0.0);
  r.coeff_[0] = 1.0;
  for (int k = 1; k < opt.series_terms; ++k) {
    auto c = [&](int j) { return j >= 0 ? r.coeff_[static_cast<std::size_t>(j)] : 0.0; };
    const double kk = k;
    r.coeff_[static_cast<std::size_t>(k)] =
        (-((kk + s - 1.0) * (kk + s) - ll - 0.75 * n2) * c(k - 1) +
         n2 / 16.0 * (6.0 * c(k - 2) + c(k - 3))) /
        (2.0 * kk * (kk + 2.0 * s));
  }
  // The singularity at eta = -1 limits the radius to 2; also demand the
  // last retained term be negligible at the start.
  const double last = std::abs(r.coeff_.back()) * std::pow(opt.delta0, opt.series_terms - 1);
  if (opt.delta0 >= 1.0 || last > 1e-12) {
    throw SeriesRadiusError("Frobenius start delta0 = " + to_text(opt.delta0) +
                            " is outside the series' useful range");
  }

  const double u0 = std::log(opt.delta0);
  const double u1 = std::log(opt.eta_max - 1.0);
  const auto count = static_cast<std::size_t>(opt.samples);
  r.u0_ = u0;
  r.du_ = (u1 - u0) / static_cast<double>(count - 1);
  std::vector<double> times(count);
  r.eta_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    times[i] = i + 1 == count ? u1 : u0 + r.du_ * static_cast<double>(i);
    r.eta_[i] = 1.0 + std::exp(times[i]);
  }
  const RadialSystem sys{ll, n2 / 16.0};

  double dpdt = 0.0;
  const double p0 = r.series_p(opt.delta0, &dpdt);
  const auto p_states = integrate_table(sys, {p0, dpdt * opt.delta0}, times, opt.rtol);

  // Outer start: q ~ eta^{-1-|n|/2} exp(-|n| eta / 4) at large eta.
  const double em = opt.eta_max;
  const double t1 = em - 1.0;
  const double q1 = std::pow(em, -1.0 - s) * std::exp(-0.25 * std::abs(n) * (em - 1.0));
  const double dq1 = q1 * (-0.25 * std::abs(n) - (1.0 + s) / em);
  std::vector<double> rtimes(times.rbegin(), times.rend());
  auto q_states = integrate_table(sys, {q1, dq1 * t1}, rtimes, opt.rtol);
  std::reverse(q_states.begin(), q_states.end());

  r.p_.resize(count);
  r.q_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    r.p_[i] = {p_states[i][0], p_states[i][1]};
    r.q_[i] = {q_states[i][0], q_states[i][1]};
  }
  // Normalise q through the Wronskian at eta ~ 2: only its t^{-|n|/2} part
  // contributes there, with coefficient -(eta^2-1) W / (2|n|).
  const auto mid = static_cast<std::size_t>(
      std::clamp((std::log(1.0) - u0) / r.du_, 0.0, static_cast<double>(count - 1)));
  const double t_mid = r.eta_[mid] - 1.0;
  const double w_mid = (t_mid + 2.0) * (r.p_[mid].chi * r.q_[mid].chi_u -
                                        r.p_[mid].chi_u * r.q_[mid].chi);
  const double a = w_mid / r.wronskian_scale();
  if (!(std::isfinite(a) && a != 0.0)) {
    throw StiffnessError("outer solution lost independence from p");
  }
  for (auto& node : r.q_) {
    node.chi /= a;
    node.chi_u /= a;
  }
  return r;
}

double chi_radial_green(int n, double lambda, double eta, double eta_p,
                        const DeficitGeometry& g, const RadialSolutionPair* pair) {
  const double lo = std::min(eta, eta_p);
  const double hi = std::max(eta, eta_p);
  if (!(lo > 1.0)) throw DomainError("chi_radial_green needs eta, eta' > 1");
  if (n == 0) {
    return specfun::legendre_P_axis({lambda, 0.0}, lo) * specfun::legendre_Q(lambda, hi) /
           (g.alpha * g.M);
  }
  RadialSolutionPair local;
  if (!pair) {
    RadialOptions opt;
    opt.eta_max = std::max(opt.eta_max, 2.0 * hi);
    local = radial_solutions(n, lambda, opt);
    pair = &local;
  }
  if (std::abs(pair->n()) != std::abs(n)) {
    throw DomainError("radial solution pair built for a different n");
  }
  return pair->p(lo) * pair->q(hi) / (2.0 * std::abs(n) * g.alpha * g.M);
}

double radial_jump(int n, double lambda, double eta_p, const DeficitGeometry& g,
                   const RadialSolutionPair* pair) {
  if (!(eta_p > 1.0)) throw DomainError("radial_jump needs eta' > 1");
  if (n == 0) {
    auto P = [lambda](double x) { return specfun::legendre_P_axis({lambda, 0.0}, x); };
    auto Q = [lambda](double x) { return specfun::legendre_Q(lambda, x); };
    // Fourth-order central differences.
    const double h = 1e-3 * (eta_p - 1.0);
    auto d = [h](const auto& f, double x) {
      return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
    };
    return (P(eta_p) * d(Q, eta_p) - d(P, eta_p) * Q(eta_p)) / (g.alpha * g.M);
  }
  RadialSolutionPair local;
  if (!pair) {
    RadialOptions opt;
    opt.eta_max = std::max(opt.eta_max, 2.0 * eta_p);
    local = radial_solutions(n, lambda, opt);
    pair = &local;
  }
  return (pair->p(eta_p) * pair->dq(eta_p) - pair->dp(eta_p) * pair->q(eta_p)) /
         (2.0 * std::abs(n) * g.alpha * g.M);
}

ExponentFit fit_horizon_exponent(const RadialSolutionPair& pair, bool second) {
  std::vector<double> h;
  std::vector<double> slope;
  for (int k = 0; k < 6; ++k) {
    const double d = 1e-2 * std::ldexp(1.0, -k);
    const double a = second ? pair.q(1.0 + d) : pair.p(1.0 + d);
    const double b = second ? pair.q(1.0 + 0.5 * d) : pair.p(1.0 + 0.5 * d);
    h.push_back(d);
    slope.push_back(std::log(std::abs(a / b)) / std::numbers::ln2);
  }
  const auto e = numerics::extrapolate_to_zero(h, slope, 3);
  return {e.value, e.error};
}

double horizon_vanishing_order(const RadialSolutionPair& pair, double delta,
                               double eta_ext, const DeficitGeometry& g) {
  const double a = chi_radial_green(pair.n(), pair.lambda(), 1.0 + delta, eta_ext, g, &pair);
  const double b =
      chi_radial_green(pair.n(), pair.lambda(), 1.0 + 0.5 * delta, eta_ext, g, &pair);
  return std::log(std::abs(a / b)) / std::numbers::ln2;
}

modesum::SumResult horizon_green(double theta, double theta_p, double dphi,
                                 double eta, const DeficitGeometry& g,
                                 const modesum::Truncation& t) {
  if (!(eta > 1.0)) throw DomainError("horizon_green needs eta > 1");
  if (!(theta > 0.0 && theta < pi && theta_p > 0.0 && theta_p < pi)) {
    throw DomainError("polar angles must lie in (0, pi)");
  }
  modesum::Problem p;
  p.alpha = g.alpha;
  p.x1 = std::cos(theta);
  p.x2 = std::cos(theta_p);
  p.dphi = dphi;
  p.decay = std::acosh(eta);
  p.weight = [eta](double mu, std::span<double> w) {
    specfun::legendre_Q_band(mu, eta, w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] *= 2.0 * (mu + static_cast<double>(k)) + 1.0;
    }
  };
  auto r = modesum::azimuthal_sum(p, t);
  const double scale = 1.0 / (32.0 * pi * pi * g.M * g.M * g.alpha);
  r.value *= scale;
  r.tail *= scale;
  return r;
}

double horizon_green_closed(double theta, double theta_p, double dphi,
                            double eta, const DeficitGeometry& g) {
  if (!(eta > 1.0)) throw DomainError("horizon_green_closed needs eta > 1");
  const double ss = std::sin(theta) * std::sin(theta_p);
  if (!(ss > 0.0)) throw DomainError("polar angles must lie in (0, pi)");
  // cosh chi - 1 = (eta - cos(theta - theta')) / (sin th sin th').
  const double sd = std::sin(0.5 * (theta - theta_p));
  const double d = ((eta - 1.0) + 2.0 * sd * sd) / ss;
  const double chi = std::log1p(d + std::sqrt(d * (2.0 + d)));
  return conespace::generalized_heine_rhs(g.alpha, theta, theta_p, dphi, chi) /
         (32.0 * pi * pi * g.M * g.M * g.alpha);
}

HorizonSeparation HorizonSeparation::make(double epsilon, double theta,
                                          const DeficitGeometry& g) {
  if (!(epsilon > 0.0 && epsilon < 0.1 * g.M)) {
    throw DomainError("radial split epsilon must lie in (0, 0.1 M)");
  }
  if (!(theta > 0.0 && theta < pi)) throw DomainError("theta must lie in (0, pi)");
  return {epsilon, theta};
}

double HorizonSeparation::cosh_chi_minus_one(const DeficitGeometry& g) const {
  const double s = std::sin(theta);
  return epsilon / (g.M * s * s);
}

double geodesic_distance(double epsilon, const DeficitGeometry& g) {
  if (!(epsilon > 0.0 && epsilon < 0.1 * g.M)) {
    throw DomainError("geodesic_distance needs 0 < epsilon < 0.1 M");
  }
  // r = 2M + eps t^2 removes the endpoint singularity of dr / sqrt(1 - 2M/r)
  // and keeps the integral O(1) on [0, 1].
  const double two_m = 2.0 * g.M;
  const double root = std::sqrt(epsilon);
  return root * numerics::integrate(
                    [two_m, epsilon](double t) {
                      return 2.0 * std::sqrt(two_m + epsilon * t * t);
                    },
                    0.0, 1.0, 1e-14)
                    .value;
}

double geodesic_distance_series(double epsilon, const DeficitGeometry& g) {
  return std::sqrt(2.0 * g.M * epsilon) * (2.0 + epsilon / (6.0 * g.M));
}

double g_sing(double epsilon, const DeficitGeometry& g) {
  if (!(epsilon > 0.0)) throw DomainError("g_sing needs epsilon > 0");
  return 1.0 / (32.0 * pi * pi * g.M * epsilon) - 1.0 / (192.0 * pi * pi * g.M * g.M);
}

}  // namespace stringvac::blackhole
