#pragma once

#include <vector>

#include "stringvac/blackhole.hpp"

/// Renormalised <phi^2> on the horizon. Values are in units of M^-2 only in
/// the sense that M is carried explicitly: pass M and get phi^2 itself.
namespace stringvac::vacuumpol {

/// (1/(192 pi^2 M^2)) (1 + (1 - alpha^2)/(alpha^2 sin^2 theta)).
/// DomainError at the poles, where it diverges.
double phi2_closed(double theta, double alpha, double M);

/// The same with cos(theta) as the argument (sin^2 = (1-c)(1+c)).
double phi2_closed_cos(double cos_theta, double alpha, double M);

struct Phi2Limit {
  double value = 0.0;
  double error = 0.0;            ///< last-level Richardson difference
  std::vector<double> epsilon;   ///< the sequence used
  std::vector<double> bracket;   ///< G(eps) - g_sing(eps) at each epsilon
};

/// Default sequence eps_k = eps0 2^{-k}, k = 0..6, with
/// eps0 = min(1e-2 M, 0.05 M sin^2 theta).
std::vector<double> default_epsilons(double theta, double M);

/// Horizon Green's function at the radial split (closed form through the
/// generalized Heine identity) minus g_sing, Richardson-extrapolated to
/// eps -> 0 over the last three levels. ExtrapolationError when successive
/// brackets do not settle.
Phi2Limit phi2_limit(double theta, double alpha, double M,
                     std::vector<double> eps = {});

/// (1 - alpha^2)/(192 pi^2 alpha^2 M^2 sin^2 theta), the leading behaviour
/// near the string. DomainError at alpha = 1 or sin(theta) >= 0.1.
double phi2_near_axis(double theta, double alpha, double M);

struct DominanceAngle {
  double cos_theta = 1.0;    ///< 1/sqrt(2 - alpha^2)
  double first_order = 0.0;  ///< 1 - alpha, the leading term of 1 - cos_theta
};

/// Where phi^2 reaches twice its equatorial value. DomainError unless
/// 0 < alpha < 1.
DominanceAngle dominance_angle(double alpha);

struct FigureRow {
  double cos_theta;
  double alpha;
  double phi2_M2;  ///< M^2 phi^2
};

/// Uniform cos(theta) grid on [-margin, margin] with `points` nodes, exactly
/// symmetric about 0.
std::vector<double> cos_grid(int points, double margin = 0.995);

/// Rows sorted by alpha descending, then cos(theta) ascending.
std::vector<FigureRow> figure1_data(std::vector<double> alphas, int points = 201,
                                    double margin = 0.995, double M = 1.0);

}  // namespace stringvac::vacuumpol
