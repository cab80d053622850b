#pragma once

#include <map>
#include <string>
#include <vector>

/// Summation identities stated as LHS - RHS with a truncation certificate.
namespace stringvac::identities {

enum class Status { passed, failed, error, outside_domain };

const char* status_name(Status s);

struct IdentityCase {
  std::string name;
  /// Ordered parameter map (std::map keeps reports deterministic).
  std::map<std::string, double> params;
  int lmax = 0;    ///< highest degree summed (0 when not applicable)
  int mmax = 0;    ///< highest band summed
  double tol = 1e-6;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  /// Relative residual when |rhs| > 1, absolute otherwise.
  double residual = 0.0;
  /// Truncation/extrapolation certificate, in the units of `residual`.
  double certified_tail = 0.0;
  bool passed = false;
  Status status = Status::failed;
  std::map<std::string, double> diagnostics;
  std::string error_kind;
  std::string message;
};

/// Fills residuals, `passed` and `status` from lhs, rhs, tol and the raw
/// absolute tail. passed <=> residual <= tol; the tail is reported alongside.
void finalize(IdentityCase& c, double abs_tail);

/// sum (2l+1) P_l(psi) Q_l(zeta) = 1/(zeta - psi), |psi| < zeta, zeta > 1.
IdentityCase check_heine_classic(double zeta, double psi, int lmax = 0,
                                 double tol = 1e-6);

/// alpha = 1 double (m, l) sum against 1/(zeta - cos gamma).
IdentityCase check_heine_addition(double zeta, double theta, double theta_p,
                                  double dphi, int lmax = 0, double tol = 1e-6);

/// The generalized Heine identity; zeta = cos th cos th' + cosh chi sin th
/// sin th' must exceed 1.
IdentityCase check_heine_generalized(double alpha, double theta,
                                     double theta_p, double dphi, double chi,
                                     int lmax = 0, int mmax = -1,
                                     double tol = 1e-6);

/// Single-band sum of Pbar Pbar at equal radii against
/// Q_{m/alpha - 1/2}((1 - c c')/(s s')) / (pi sqrt(s s')).
IdentityCase check_app5(double alpha, int m, double theta, double theta_p,
                        int lmax = 0, double tol = 1e-6);

/// Equal-radius (m, l) double sum against the Linet image + integral form.
IdentityCase check_linet_sum(double alpha, double theta, double theta_p,
                             double dphi, double tol = 1e-6);

/// Toroidal addition theorem for one band m.
IdentityCase check_toroidal_addition(double alpha, int m, double mu,
                                     double mu_p, double eta, double eta_p,
                                     int nmax = 0, double tol = 1e-6);

/// Four-Legendre prolate-spheroidal sum for one band m.
IdentityCase check_spheroidal_sum(double alpha, int m, double theta,
                                  double theta_p, double sigma_lo,
                                  double sigma_hi, int lmax = 0,
                                  double tol = 1e-6);

/// Orthogonality/normalisation integral of two Ferrers functions of order
/// -m/alpha, divided by the product of the two norms (so rhs is 0 or 1).
IdentityCase check_norm_integral(double alpha, int m, int l, int l_p,
                                 double tol = 1e-8);

/// Parameter names each identity takes, in canonical order.
const std::vector<std::string>& identity_params(const std::string& identity);

/// Names of all identities known to the harness.
const std::vector<std::string>& identity_names();

/// True when the point lies in the identity's domain; otherwise `why` says
/// which precondition fails. Used to mark grid points as outside_domain.
bool in_domain(const std::string& identity,
               const std::map<std::string, double>& params, std::string& why);

/// Dispatch by name. Exceptions propagate.
IdentityCase run_case(const std::string& identity,
                      const std::map<std::string, double>& params, double tol,
                      int lmax, int mmax);

/// Case specification after manifest expansion.
struct CaseSpec {
  std::string identity;
  std::map<std::string, double> params;
  double tol = 1e-6;
  int lmax = 0;
  int mmax = -1;
  bool skip_outside_domain = false;
};

/// Runs every case (concurrently when parallelism > 1); exceptions become
/// `error` records. Output order equals input order.
std::vector<IdentityCase> run_suite(const std::vector<CaseSpec>& cases,
                                    int parallelism = 1);

}  // namespace stringvac::identities
