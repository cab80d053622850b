#include "stringvac/modesum.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "stringvac/errors.hpp"
#include "stringvac/specfun.hpp"

namespace stringvac::modesum {

namespace {

// Compact "%.3g" rendering for error messages.
std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

constexpr double kLambdaCap = 2e4;

int band_count(const Problem& p, const Truncation& t, double lambda_max) {
  int m_top = static_cast<int>(std::floor(p.alpha * lambda_max + 1e-9));
  if (t.mmax >= 0) m_top = std::min(m_top, t.mmax);
  return m_top + 1;
}

// Reduction shared by both kernels: bands are consumed strictly in m order
// and the stopping rule (three consecutive quiet bands) is applied
// to the running sum, so the result does not depend on how the bands were
// produced.
class Reducer {
 public:
  Reducer(const Problem& p, double tol) : p_(p), tol_(tol) {}

  // Returns true once the stopping rule fires.
  bool add(int m, const Band& b) {
    const double weight = m == 0 ? 1.0 : 2.0;
    const double c = m == 0 ? 1.0 : std::cos(m * p_.dphi);
    value_ += weight * c * b.sum;
    tail_ += weight * b.tail;
    terms_ += b.terms;
    last_m_ = m;
    last_mag_[m % 3] = std::abs(b.sum);
    // Quiet once the geometric bound on everything beyond this band is
    // below tol/10.
    const double rho = std::exp(-p_.decay / p_.alpha);
    const double beyond = 2.0 * std::abs(b.sum) * rho / (1.0 - rho);
    if (beyond < 0.1 * tol_ * std::max(1.0, std::abs(value_))) {
      ++quiet_;
    } else {
      quiet_ = 0;
    }
    return quiet_ >= 3;
  }

  SumResult finish(bool stopped, double lambda_max) const {
    SumResult r;
    r.value = value_;
    r.tail = tail_;
    if (stopped) {
      // Remaining bands start at order (m+1)/alpha and decay at least like
      // the weights; bound them geometrically from the last three.
      const double rho = std::exp(-p_.decay / p_.alpha);
      const double big =
          std::max({last_mag_[0], last_mag_[1], last_mag_[2]});
      r.tail += 2.0 * big * rho / (1.0 - rho);
    }
    r.lambda_max = lambda_max;
    r.bands = last_m_;
    r.terms = terms_;
    return r;
  }

 private:
  const Problem& p_;
  double tol_;
  double value_ = 0.0;
  double tail_ = 0.0;
  long terms_ = 0;
  int last_m_ = 0;
  int quiet_ = 0;
  double last_mag_[3] = {0.0, 0.0, 0.0};
};

void validate(const Problem& p, const Truncation& t) {
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1]");
  }
  if (!(p.decay > 0.0)) {
    throw SlowConvergence("mode sum weights do not decay (decay rate " +
                          short_num(p.decay) + ")");
  }
  if (!(t.tol > 0.0)) throw DomainError("mode-sum tolerance must be positive");
  if (!p.weight) throw DomainError("mode-sum weight function missing");
}

double start_lambda(const Problem& p, const Truncation& t) {
  if (t.lambda_max > 0.0) return t.lambda_max;
  const double l = default_lambda_max(p.decay, t.tol);
  if (l > kLambdaCap) {
    throw SlowConvergence("mode sum needs lambda_max " + short_num(l) +
                          " (decay rate " + short_num(p.decay) + ")");
  }
  return l;
}

bool certified(const SumResult& r, const Truncation& t) {
  return t.lambda_max > 0.0 ||
         r.tail <= t.tol * std::max(1.0, std::abs(r.value));
}

double grow(double lambda_max, const Problem& p) {
  const double next = lambda_max + std::max(10.0, 0.5 * (lambda_max - 10.0));
  if (next > kLambdaCap) {
    throw SlowConvergence("mode sum needs lambda_max beyond " +
                          to_text(kLambdaCap) + " (decay rate " +
                          short_num(p.decay) + ")");
  }
  return next;
}

SumResult serial_pass(const Problem& p, const Truncation& t, double lambda_max) {
  Reducer red(p, t.tol);
  const int n = band_count(p, t, lambda_max);
  bool stopped = false;
  for (int m = 0; m < n && !stopped; ++m) {
    stopped = red.add(m, band_sum(p, m, lambda_max));
  }
  return red.finish(stopped, lambda_max);
}

SumResult parallel_pass(const Problem& p, const Truncation& t,
                        double lambda_max) {
  Reducer red(p, t.tol);
  const int n = band_count(p, t, lambda_max);
  const int threads = t.threads > 0 ? t.threads : omp_get_max_threads();
  const int chunk = std::max(4, 4 * threads);
  std::vector<Band> bands(static_cast<std::size_t>(chunk));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunk));
  bool stopped = false;
  for (int first = 0; first < n && !stopped; first += chunk) {
    const int count = std::min(chunk, n - first);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < count; ++i) {
      try {
        bands[static_cast<std::size_t>(i)] = band_sum(p, first + i, lambda_max);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (int i = 0; i < count && !stopped; ++i) {
      if (errors[static_cast<std::size_t>(i)]) {
        std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
      }
      stopped = red.add(first + i, bands[static_cast<std::size_t>(i)]);
    }
  }
  return red.finish(stopped, lambda_max);
}

template <class Pass>
SumResult run(const Problem& p, const Truncation& t, Pass pass) {
  validate(p, t);
  double lambda_max = start_lambda(p, t);
  for (;;) {
    SumResult r = pass(p, t, lambda_max);
    if (certified(r, t)) return r;
    lambda_max = grow(lambda_max, p);
  }
}

}  // namespace

double default_lambda_max(double decay, double tol) {
  return std::ceil(std::log(1.0 / tol) / decay) + 10.0;
}

Band band_sum(const Problem& p, int m, double lambda_max) {
  const double mu = m / p.alpha;
  if (mu > lambda_max) return {};
  const auto n = static_cast<std::size_t>(std::floor(lambda_max - mu + 1e-9)) + 1;
  std::vector<double> p1(n);
  std::vector<double> p2(n);
  std::vector<double> w(n);
  specfun::ferrers_band(mu, p.x1, p1);
  if (p.x2 == p.x1) {
    p2 = p1;
  } else {
    specfun::ferrers_band(mu, p.x2, p2);
  }
  p.weight(mu, w);
  Band b;
  for (std::size_t k = 0; k < n; ++k) b.sum += w[k] * p1[k] * p2[k];
  const double rho = std::exp(-p.decay);
  b.tail = std::abs(w[n - 1]) * rho / (1.0 - rho);
  b.terms = static_cast<long>(n);
  return b;
}

SumResult azimuthal_sum(const Problem& p, const Truncation& t) {
  return run(p, t, parallel_pass);
}

SumResult azimuthal_sum_serial(const Problem& p, const Truncation& t) {
  return run(p, t, serial_pass);
}

}  // namespace stringvac::modesum
