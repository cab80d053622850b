#pragma once

#include <span>

/// Real special functions of non-integer degree and order.
///
/// Conventions: `DegreeOrder{nu, mu}` always denotes degree nu and order
/// -mu (mu >= 0). On the cut these are Ferrers functions P_nu^{-mu}(x),
/// |x| < 1; on the axis x > 1 they are the Legendre functions of the same
/// name. The second-kind function on the axis is exported either as Olver's
/// normalisation (`olver_Q`, real and even in the order) or as the
/// phase-absorbed Qhat_nu^{-mu} = e^{i mu pi} Q_nu^{-mu}
/// = Gamma(nu - mu + 1) * olver_Q.
namespace stringvac::specfun {

struct DegreeOrder {
  double nu = 0.0;
  double mu = 0.0;
};

/// Argument region; constructing one validates the argument.
enum class Region { cut, axis };

struct EvalDomain {
  double x;
  Region region;

  /// Throws DomainError within 1e-12 of x = +-1.
  static EvalDomain classify(double x);
};

/// Arguments closer than this to a singular point are rejected.
inline constexpr double kSingularGuard = 1e-12;

/// ln|Gamma(a)/Gamma(b)| together with the sign of the ratio.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};

SignedLog signed_log_gamma_ratio(double a, double b);

/// ln[Gamma(a)/Gamma(b)]; stable for arguments up to ~1e5 and for a close
/// to b. Throws PoleError at gamma poles and DomainError if the ratio is
/// negative.
double log_gamma_ratio(double a, double b);

/// Ferrers function P_nu^{-mu}(x) on the cut.
double ferrers_P(DegreeOrder d, double x);

/// Normalised Ferrers functions along one band of fixed order:
/// out[k] = sqrt(Gamma(lam+mu+1)/Gamma(lam-mu+1)) P_lam^{-mu}(x),
/// lam = mu + k. The square of the normalisation factor is exactly the gamma
/// ratio in the mode sums, so a product of two band entries carries it.
void ferrers_band(double mu, double x, std::span<double> out);

/// Legendre function of the second kind Q_lambda(zeta), zeta > 1,
/// lambda > -1.
double legendre_Q(double lambda, double zeta);

/// Q_{mu+k}(zeta) for k = 0 .. out.size()-1 (backward ratio recurrence
/// seeded by two direct evaluations).
void legendre_Q_band(double mu, double zeta, std::span<double> out);

/// P_nu^{-mu}(x) on the axis x > 1.
double legendre_P_axis(DegreeOrder d, double x);

/// Olver's second-kind function on the axis (even in the order).
double olver_Q(DegreeOrder d, double x);

struct AxisPair {
  double P;     ///< P_nu^{-mu}(x)
  double Qhat;  ///< e^{i mu pi} Q_nu^{-mu}(x), real
};

/// Pair of axis functions. Throws PoleError when Gamma(nu - mu + 1) has a
/// pole, in which case only `axis_pq_product` is meaningful.
AxisPair legendre_PQ_axis(DegreeOrder d, double x);

/// Gamma(nu+mu+1) P_nu^{-mu}(x_lo) olver_Q(nu, mu; x_hi): the combination
/// (Gamma ratio) * P * Qhat that every separable axis expansion needs,
/// evaluated in logarithmic form so it stays finite at large degree.
double axis_pq_product(double nu, double mu, double x_lo, double x_hi);

struct BesselIK {
  double I = 0.0;
  double K = 0.0;
};

/// Modified Bessel functions I_order(z), K_order(z), order >= 0, z > 0.
/// Throws OverflowError when I or K is not representable (z > ~700);
/// use `bessel_IK_scaled` there.
BesselIK bessel_IK(double order, double z);

/// Exponentially scaled pair: {I e^{-z}, K e^{z}}.
BesselIK bessel_IK_scaled(double order, double z);

}  // namespace stringvac::specfun
