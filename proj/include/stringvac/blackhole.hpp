#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "stringvac/modesum.hpp"

/// Schwarzschild black hole threaded by a cosmic string, in the Euclidean
/// Hartle-Hawking state. Radial variable eta = r/M - 1 (horizon at eta = 1).
namespace stringvac::blackhole {

struct DeficitGeometry {
  double alpha = 1.0;
  double M = 1.0;

  /// Throws DomainError unless 0 < alpha <= 1 and M > 0.
  static DeficitGeometry make(double alpha, double M);

  double kappa() const { return 1.0 / (4.0 * M); }
  double tau_period() const { return 8.0 * std::numbers::pi * M; }
};

struct ModeIndex {
  int n = 0;
  int l = 0;
  int m = 0;
};

/// l - |m| + |m|/alpha. IndexError when |m| > l or l < 0.
double lambda_of(int l, int m, double alpha);
double lambda_of(const ModeIndex& k, double alpha);

struct RadialOptions {
  double delta0 = 1e-4;  ///< Frobenius start offset eta - 1
  int series_terms = 6;
  double rtol = 1e-10;
  double eta_max = 20.0;
  int samples = 4000;    ///< tabulation points, uniform in ln(eta - 1)
};

/// The horizon-regular (p) and outer (q) solutions of the homogeneous
/// radial equation for n != 0, normalised so that
///   p ~ (eta-1)^{|n|/2},  q ~ (eta-1)^{-|n|/2}  as eta -> 1,
/// which fixes (eta^2 - 1) W[p, q] = -2|n|.
class RadialSolutionPair {
 public:
  int n() const { return n_; }
  double lambda() const { return lambda_; }
  double eta_max() const { return eta_max_; }

  double p(double eta) const;
  double dp(double eta) const;
  double q(double eta) const;
  double dq(double eta) const;

  /// (eta^2 - 1) W[p, q](eta).
  double scaled_wronskian(double eta) const;
  /// -2|n|, the value implied by the normalisation.
  double wronskian_scale() const { return -2.0 * std::abs(n_); }
  /// Largest relative deviation of scaled_wronskian from wronskian_scale on
  /// the tabulation grid restricted to [lo, hi].
  double wronskian_spread(double lo = 1.01, double hi = 5.0) const;

  /// Tabulation grid (eta values) and the solutions on it.
  const std::vector<double>& eta_grid() const { return eta_; }
  std::vector<double> p_table() const;
  std::vector<double> q_table() const;

 private:
  friend RadialSolutionPair radial_solutions(int, double, const RadialOptions&);

  struct Node {
    double chi;
    double chi_u;  // derivative in u = ln(eta - 1)
  };

  double series_p(double t, double* dpdt) const;
  double hermite(const std::vector<Node>& table, double u, double* chi_u) const;
  double q_below_start(double eta, double* dq) const;

  int n_ = 0;
  double lambda_ = 0.0;
  double eta_max_ = 0.0;
  double delta0_ = 0.0;
  double u0_ = 0.0;
  double du_ = 0.0;
  std::vector<double> coeff_;  // Frobenius coefficients of p
  std::vector<double> eta_;
  std::vector<Node> p_;
  std::vector<Node> q_;
};

/// Integrates both solutions. DomainError for n == 0 or lambda < 0 or
/// eta_max <= 1 + delta0; SeriesRadiusError when the Frobenius start is not
/// inside the series' useful range; StiffnessError when step control fails.
RadialSolutionPair radial_solutions(int n, double lambda,
                                    const RadialOptions& opt = {});

/// The radial Green's function chi_{n lambda}(eta, eta'). n = 0 uses
/// P_lambda Q_lambda; otherwise `pair` (built on demand when null) supplies
/// p, q.
double chi_radial_green(int n, double lambda, double eta, double eta_p,
                        const DeficitGeometry& g,
                        const RadialSolutionPair* pair = nullptr);

/// d chi/d eta just above eta' minus just below, from exact derivatives of
/// the two branches. The source fixes it to -1/(alpha M (eta'^2 - 1)).
double radial_jump(int n, double lambda, double eta_p, const DeficitGeometry& g,
                   const RadialSolutionPair* pair = nullptr);

/// Observed near-horizon exponent of p (or q when `second` is set): local
/// log-log slopes at delta = 1e-2 2^{-k}, extrapolated to delta = 0.
struct ExponentFit {
  double exponent = 0.0;
  double error = 0.0;
};
ExponentFit fit_horizon_exponent(const RadialSolutionPair& pair,
                                 bool second = false);

/// log2(f(delta) / f(delta/2)) for the n != 0 contribution
/// chi_n(1 + delta, eta_ext): the observed order of its vanishing.
double horizon_vanishing_order(const RadialSolutionPair& pair, double delta,
                               double eta_ext, const DeficitGeometry& g);

/// The n = 0 horizon Green's function as a mode sum with Q_lambda(eta)
/// radial weights.
modesum::SumResult horizon_green(double theta, double theta_p, double dphi,
                                 double eta, const DeficitGeometry& g,
                                 const modesum::Truncation& t = {});

/// Its closed form via the generalized Heine identity.
double horizon_green_closed(double theta, double theta_p, double dphi,
                            double eta, const DeficitGeometry& g);

/// Radial split r' = 2M + epsilon at polar angle theta.
struct HorizonSeparation {
  double epsilon = 0.0;
  double theta = 0.0;

  /// DomainError unless 0 < epsilon < 0.1 M and 0 < theta < pi.
  static HorizonSeparation make(double epsilon, double theta,
                                const DeficitGeometry& g);
  double eta(const DeficitGeometry& g) const { return 1.0 + epsilon / g.M; }
  /// cosh chi - 1 = epsilon / (M sin^2 theta).
  double cosh_chi_minus_one(const DeficitGeometry& g) const;
};

/// Proper radial distance from the horizon to r = 2M + epsilon, by
/// quadrature. DomainError unless 0 < epsilon < 0.1 M.
double geodesic_distance(double epsilon, const DeficitGeometry& g);
/// sqrt(2 M eps) [2 + eps/(6M)].
double geodesic_distance_series(double epsilon, const DeficitGeometry& g);

/// 1/(32 pi^2 M eps) - 1/(192 pi^2 M^2).
double g_sing(double epsilon, const DeficitGeometry& g);

}  // namespace stringvac::blackhole
