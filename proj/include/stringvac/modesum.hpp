#pragma once

#include <functional>
#include <span>

/// Double sums over azimuthal bands m and degrees lam = m/alpha + k of the
/// form
///
///   S = sum_m e^{i m dphi} sum_k w(lam) Pbar_lam(x1) Pbar_lam(x2),
///
/// where Pbar are the normalised Ferrers functions of order -m/alpha. Each
/// band is independent, so the parallel kernel evaluates bands across
/// threads and reduces them in band order; the serial kernel is the
/// reference it is tested against.
namespace stringvac::modesum {

/// Fills weights[k] = w(mu + k) for one band of order mu.
using BandWeight = std::function<void(double mu, std::span<double> weights)>;

struct Problem {
  double alpha = 1.0;
  double x1 = 0.0;  ///< cos(theta)
  double x2 = 0.0;  ///< cos(theta')
  double dphi = 0.0;
  /// Weights decay at least like e^{-decay * lam}.
  double decay = 1.0;
  BandWeight weight;
};

struct Truncation {
  double lambda_max = 0.0;  ///< 0 picks ceil(ln(1/tol)/decay) + 10
  int mmax = -1;            ///< -1 means no cap beyond lambda_max
  double tol = 1e-12;       ///< relative to max(1, |S|)
  int threads = 0;          ///< 0 uses the OpenMP default
};

struct SumResult {
  double value = 0.0;
  double tail = 0.0;  ///< certified truncation error estimate
  double lambda_max = 0.0;
  int bands = 0;      ///< highest m included
  long terms = 0;
};

/// Degree cutoff from the decay rate: ceil(ln(1/tol)/decay) + 10.
double default_lambda_max(double decay, double tol);

/// One band: sum over k of w Pbar Pbar for lam <= lambda_max, plus the
/// band's tail bound |w_last| rho/(1-rho) with rho = e^{-decay}
/// (|Pbar| <= 1 bounds the angular factors).
struct Band {
  double sum = 0.0;
  double tail = 0.0;
  long terms = 0;
};
Band band_sum(const Problem& p, int m, double lambda_max);

/// OpenMP kernel. The cutoff is raised until the certificate meets `tol`.
/// Throws SlowConvergence if that needs lambda_max > 2e4.
SumResult azimuthal_sum(const Problem& p, const Truncation& t);

/// Serial reference; same arithmetic, same order, bit-identical result.
SumResult azimuthal_sum_serial(const Problem& p, const Truncation& t);

}  // namespace stringvac::modesum
