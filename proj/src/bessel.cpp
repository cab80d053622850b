#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "stringvac/errors.hpp"
#include "stringvac/specfun.hpp"

namespace stringvac::specfun {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(1+x) about x = 0.
constexpr std::array<double, 25> kRecipGamma = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15};

// gam1 = (1/Gamma(1-m) - 1/Gamma(1+m)) / (2m), gam2 = (1/Gamma(1-m) +
// 1/Gamma(1+m)) / 2, plus both reciprocals, for |m| <= 1/2.
struct GammaPieces {
  double gam1, gam2, gampl, gammi;
};

GammaPieces temme_gammas(double m) {
  double odd = 0.0;
  double even = 0.0;
  double p = 1.0;  // m^{2i}
  for (std::size_t j = 0; j + 1 < kRecipGamma.size(); j += 2) {
    even += kRecipGamma[j] * p;
    odd += kRecipGamma[j + 1] * p;
    p *= m * m;
  }
  even += kRecipGamma.back() * p;
  const double gampl = even + m * odd;
  const double gammi = even - m * odd;
  return {-odd, even, gampl, gammi};
}

}  // namespace

BesselIK bessel_IK_scaled(double order, double z) {
  if (!(z > 0.0)) {
    throw DomainError("Bessel argument must be positive (got " +
                      to_text(z) + ")");
  }
  if (!(order >= 0.0)) {
    throw DomainError("Bessel order must be >= 0 (got " +
                      to_text(order) + ")");
  }
  const int nl = static_cast<int>(order + 0.5);
  const double m = order - nl;  // |m| <= 1/2
  const double m2 = m * m;
  const double xi = 1.0 / z;
  const double xi2 = 2.0 * xi;

  // CF1 (modified Lentz) for I'_order / I_order.
  double h = order * xi;
  if (h < kTiny) h = kTiny;
  double b = xi2 * order;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= kMaxIter; ++i) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (i > kMaxIter) {
    throw ConvergenceError("Bessel continued fraction did not converge for z = " +
                           to_text(z));
  }

  // Downward recurrence from the top order to m, unnormalised.
  double ril = kTiny;
  double ripl = h * ril;
  const double ril1 = ril;
  double fact = order * xi;
  for (int l = nl; l >= 1; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;  // I'_m / I_m

  double rkmu = 0.0;  // K_m e^{z}
  double rk1 = 0.0;   // K_{m+1} e^{z}
  if (z < 2.0) {
    // Temme's series.
    const double x2 = 0.5 * z;
    const double pimu = std::numbers::pi * m;
    const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const double dd = -std::log(x2);
    const double e = m * dd;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const auto g = temme_gammas(m);
    double ff = fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
    double sum = ff;
    const double ee = std::exp(e);
    double p = 0.5 * ee / g.gampl;
    double q = 0.5 / (ee * g.gammi);
    double cc = 1.0;
    const double dq = x2 * x2;
    double sum1 = p;
    int k = 1;
    for (; k <= kMaxIter; ++k) {
      ff = (k * ff + p + q) / (k * k - m2);
      cc *= dq / k;
      p /= (k - m);
      q /= (k + m);
      const double del = cc * ff;
      sum += del;
      sum1 += cc * (p - k * ff);
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (k > kMaxIter) throw ConvergenceError("Temme series did not converge");
    const double ez = std::exp(z);
    rkmu = sum * ez;
    rk1 = sum1 * xi2 * ez;
  } else {
    // Steed's CF2 for K, evaluated directly in scaled form.
    double bb = 2.0 * (1.0 + z);
    double dd = 1.0 / bb;
    double delh = dd;
    double hh = delh;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - m2;
    double q = a1;
    double cc = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int k = 2;
    for (; k <= kMaxIter; ++k) {
      a -= 2 * (k - 1);
      cc = -a * cc / k;
      const double qnew = (q1 - bb * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += cc * qnew;
      bb += 2.0;
      dd = 1.0 / (bb + a * dd);
      delh = (bb * dd - 1.0) * delh;
      hh += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < kEps) break;
    }
    if (k > kMaxIter) throw ConvergenceError("Steed continued fraction did not converge");
    hh = a1 * hh;
    rkmu = std::sqrt(std::numbers::pi / (2.0 * z)) / s;
    rk1 = rkmu * xi * (m + z + 0.5 - hh);
  }
  const double rkmup = m * xi * rkmu - rk1;  // scaled K'_m
  // Wronskian: I_m K'_m - I'_m K_m = -1/z; with K scaled by e^z this gives
  // I_m e^{-z}.
  const double rimu = xi / (f * rkmu - rkmup);
  const double ri = (rimu * ril1) / ril;
  for (int l = 1; l <= nl; ++l) {
    const double rktemp = (m + l) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = rktemp;
  }
  return {ri, rkmu};
}

BesselIK bessel_IK(double order, double z) {
  if (z > 700.0) {
    throw OverflowError("unscaled Bessel pair overflows at z = " +
                        to_text(z) + "; use bessel_IK_scaled");
  }
  const auto s = bessel_IK_scaled(order, z);
  const double e = std::exp(z);
  const BesselIK out{s.I * e, s.K / e};
  if (!std::isfinite(out.K) || !std::isfinite(out.I)) {
    throw OverflowError("Bessel pair not representable at order " +
                        to_text(order) + ", z = " + to_text(z));
  }
  return out;
}

}  // namespace stringvac::specfun
