#pragma once

#include <array>
#include <optional>

#include "stringvac/modesum.hpp"
#include "stringvac/numerics.hpp"

/// Green's functions on flat space threaded by a cosmic string,
///   ds^2 = dtau^2 + drho^2 + alpha^2 rho^2 dphi^2 + dz^2,  phi ~ phi + 2 pi,
/// in each representation that separates in some chart. The 3D functions
/// solve Laplace's equation with a unit source (G3 = 1/(4 pi |x - x'|) at
/// alpha = 1); the 4D function is the Euclidean propagator
/// (1/(4 pi^2 s^2) at alpha = 1).
namespace stringvac::conespace {

using numerics::Estimate;

enum class Chart { spherical, cylindrical, toroidal, spheroidal };

const char* chart_name(Chart c);

/// A point in one chart. Coordinates, in order:
///   spherical   (r, theta, phi)
///   cylindrical (rho, z, phi)
///   toroidal    (mu, eta, phi)    focal ring of unit radius
///   spheroidal  (sigma, theta, phi) foci at z = +-1
/// `tau` is the Euclidean time, used by the 4D functions only.
struct ConePoint {
  Chart chart = Chart::cylindrical;
  std::array<double, 3> coords{};
  std::optional<double> tau;

  static ConePoint spherical(double r, double theta, double phi,
                             std::optional<double> tau = std::nullopt);
  static ConePoint cylindrical(double rho, double z, double phi,
                               std::optional<double> tau = std::nullopt);
  static ConePoint toroidal(double mu, double eta, double phi,
                            std::optional<double> tau = std::nullopt);
  static ConePoint spheroidal(double sigma, double theta, double phi,
                              std::optional<double> tau = std::nullopt);
};

/// Throws DomainError when the chart invariants fail.
void validate(const ConePoint& p);

/// Re-express a point in another chart.
ConePoint convert(const ConePoint& p, Chart to);

/// Distance in the embedding (rho cos phi, rho sin phi, z, tau); zero only
/// for coincident points.
double chart_distance(const ConePoint& a, const ConePoint& b);

/// Points closer than this are refused by every representation.
inline constexpr double kCoincidenceGuard = 1e-7;

struct SeparationInvariants {
  double zeta = 1.0;       ///< (dtau^2 + r^2 + r'^2) / (2 r r')
  double chi = 0.0;        ///< cosh chi = (zeta - cos th cos th')/(sin th sin th')
  double cos_gamma = 1.0;  ///< cos th cos th' + sin th sin th' cos dphi
};

SeparationInvariants separation(const ConePoint& a, const ConePoint& b);

/// sinh(chi/alpha) / [sin th sin th' sinh chi (cosh(chi/alpha) - cos dphi)].
double generalized_heine_rhs(double alpha, double theta, double theta_p,
                             double dphi, double chi);

/// Closed-form 4D propagator.
double g4_closed(const ConePoint& a, const ConePoint& b, double alpha);

/// 4D propagator from the spherical (m, lam) mode sum with the frequency
/// integral done: Q_lam(zeta) weights.
modesum::SumResult g4_modesum_spherical(const ConePoint& a, const ConePoint& b,
                                        double alpha,
                                        const modesum::Truncation& t);

/// Integral over [0, inf) of cos(w dtau) I_{lam+1/2}(w r_lo) K_{lam+1/2}(w r_hi).
Estimate bessel_integral_lhs(double lambda, double r_lo, double r_hi,
                             double dtau, double tol = 1e-10);

/// 3D Green's function, one function per representation.
Estimate g3_spherical_sum(const ConePoint& a, const ConePoint& b, double alpha,
                          const modesum::Truncation& t);
Estimate g3_cylindrical_Qsum(const ConePoint& a, const ConePoint& b,
                             double alpha, double tol = 1e-12);
Estimate g3_axisym_integral(const ConePoint& a, const ConePoint& b,
                            double alpha, double tol = 1e-10);
/// Valid for alpha > 1/2 only.
Estimate g3_linet(const ConePoint& a, const ConePoint& b, double alpha,
                  double tol = 1e-10);
Estimate g3_toroidal_sum(const ConePoint& a, const ConePoint& b, double alpha,
                         double tol = 1e-12);
Estimate g3_spheroidal_sum(const ConePoint& a, const ConePoint& b,
                           double alpha, const modesum::Truncation& t);

/// The integrand of the Linet regular term, combined over a common
/// denominator so it keeps its digits as psi approaches +-pi/alpha.
double linet_F(double alpha, double u, double psi);

/// Sum over the direct images of the Linet form: 1/(4 pi sigma_k) for every
/// winding k with |alpha (psi + 2 pi k)| < pi, where psi is dphi reduced to
/// [-pi, pi] and sigma_k^2 = D - 2 rho rho' cos(alpha (psi + 2 pi k)).
/// `d` is rho^2 + rho'^2 + dz^2 and `rr` is rho rho'.
double linet_images(double alpha, double d, double rr, double dphi);

}  // namespace stringvac::conespace
