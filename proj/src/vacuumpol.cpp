#include "stringvac/vacuumpol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stringvac/conespace.hpp"
#include "stringvac/errors.hpp"
#include "stringvac/numerics.hpp"

namespace stringvac::vacuumpol {

namespace {

using std::numbers::pi;

void check(double alpha, double M) { blackhole::DeficitGeometry::make(alpha, M); }

double candelas(double M) { return 1.0 / (192.0 * pi * pi * M * M); }

// G(eps) on the horizon at coincident angles, from the closed form with
// cosh chi = 1 + x, x = eps/(M sin^2 theta):
//   G = sinh(chi/a) / (32 pi^2 M^2 a sin^2 th sinh chi (cosh(chi/a) - 1)).
double horizon_g(double sin2, double alpha, double M, double eps) {
  const double x = eps / (M * sin2);
  const double chi = std::log1p(x + std::sqrt(x * (2.0 + x)));
  const double sinh_chi = std::sqrt(x * (2.0 + x));
  const double sh = std::sinh(0.5 * chi / alpha);
  const double ratio = std::sinh(chi / alpha) / (2.0 * sh * sh);
  return ratio / (32.0 * pi * pi * M * M * alpha * sin2 * sinh_chi);
}

}  // namespace

double phi2_closed_cos(double c, double alpha, double M) {
  check(alpha, M);
  const double sin2 = (1.0 - c) * (1.0 + c);
  if (!(sin2 > 0.0)) {
    throw DomainError("phi2 diverges on the string axis (cos theta = " +
                      to_text(c) + ")");
  }
  return candelas(M) * (1.0 + (1.0 - alpha * alpha) / (alpha * alpha * sin2));
}

double phi2_closed(double theta, double alpha, double M) {
  if (!(theta > 0.0 && theta < pi)) {
    throw DomainError("phi2 diverges at the poles; theta must lie in (0, pi) (got " +
                      to_text(theta) + ")");
  }
  const double s = std::sin(theta);
  check(alpha, M);
  return candelas(M) * (1.0 + (1.0 - alpha * alpha) / (alpha * alpha * s * s));
}

std::vector<double> default_epsilons(double theta, double M) {
  const double s = std::sin(theta);
  const double eps0 = std::min(1e-2 * M, 0.05 * M * s * s);
  std::vector<double> out;
  for (int k = 0; k < 7; ++k) out.push_back(eps0 * std::ldexp(1.0, -k));
  return out;
}

Phi2Limit phi2_limit(double theta, double alpha, double M, std::vector<double> eps) {
  if (!(theta > 0.0 && theta < pi)) {
    throw DomainError("phi2 diverges at the poles; theta must lie in (0, pi) (got " +
                      to_text(theta) + ")");
  }
  check(alpha, M);
  if (eps.empty()) eps = default_epsilons(theta, M);
  if (eps.size() < 4) throw ExtrapolationError("need at least four epsilon levels");
  const double sin2 = std::sin(theta) * std::sin(theta);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < 0.1 * M * sin2)) {
      throw DomainError("epsilon levels must lie in (0, 0.1 M sin^2 theta)");
    }
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw DomainError("epsilon sequence must be strictly decreasing");
    }
  }
  const blackhole::DeficitGeometry g{alpha, M};
  Phi2Limit out;
  out.epsilon = eps;
  for (double e : eps) out.bracket.push_back(horizon_g(sin2, alpha, M, e) - blackhole::g_sing(e, g));

  // The bracket is analytic in eps; its differences must shrink down to the
  // rounding floor of the subtraction.
  const std::size_t n = eps.size();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       horizon_g(sin2, alpha, M, eps.back());
  const double d_last = std::abs(out.bracket[n - 1] - out.bracket[n - 2]);
  const double d_prev = std::abs(out.bracket[n - 2] - out.bracket[n - 3]);
  if (!(std::isfinite(d_last) && d_last <= 0.9 * d_prev + floor)) {
    throw ExtrapolationError("epsilon sequence shows no convergent trend");
  }
  auto richardson = [&](std::size_t end) {
    const std::span<const double> h(out.epsilon.data() + end - 3, 3);
    const std::span<const double> v(out.bracket.data() + end - 3, 3);
    return numerics::extrapolate_to_zero(h, v).value;
  };
  out.value = richardson(n);
  out.error = std::abs(out.value - richardson(n - 1));
  return out;
}

double phi2_near_axis(double theta, double alpha, double M) {
  check(alpha, M);
  if (!(alpha < 1.0)) throw DomainError("no near-axis divergence at alpha = 1");
  const double s = std::sin(theta);
  if (!(s > 0.0 && s < 0.1)) throw DomainError("near-axis form needs 0 < sin theta < 0.1");
  return (1.0 - alpha * alpha) / (192.0 * pi * pi * alpha * alpha * M * M * s * s);
}

DominanceAngle dominance_angle(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("dominance angle needs 0 < alpha < 1");
  return {1.0 / std::sqrt(2.0 - alpha * alpha), 1.0 - alpha};
}

std::vector<double> cos_grid(int points, double margin) {
  if (points < 2) throw DomainError("cos theta grid needs at least two points");
  if (!(margin > 0.0 && margin < 1.0)) throw DomainError("pole margin must lie in (0, 1)");
  std::vector<double> out;
  const int last = points - 1;
  for (int k = 0; k < points; ++k) {
    out.push_back(margin * static_cast<double>(2 * k - last) / last);
  }
  return out;
}

std::vector<FigureRow> figure1_data(std::vector<double> alphas, int points,
                                    double margin, double M) {
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  const auto grid = cos_grid(points, margin);
  std::vector<FigureRow> rows;
  rows.reserve(alphas.size() * grid.size());
  for (double a : alphas) {
    for (double c : grid) rows.push_back({c, a, M * M * phi2_closed_cos(c, a, M)});
  }
  return rows;
}

}  // namespace stringvac::vacuumpol
