#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stringvac/blackhole.hpp"
#include "stringvac/errors.hpp"
#include "stringvac/manifest.hpp"
#include "stringvac/report.hpp"
#include "stringvac/specfun.hpp"
#include "stringvac/vacuumpol.hpp"

namespace stringvac::cli {

namespace {

using nlohmann::ordered_json;
using report::format_double;

struct Config {
  double tolerance = 1e-6;
  std::string manifest;
  std::string out;
  std::string format;
  int parallelism = 1;

  double theta = std::numbers::pi / 2;
  double alpha = 1.0;
  double mass = 1.0;
  std::vector<double> alphas = {1.0, 0.9, 0.75, 0.5};
  int points = 201;
  double margin = 0.995;
  int n = 1;
  int l = 0;
  int m = 0;
};

class ConfigFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const Config& c) {
  if (!(c.tolerance >= manifest::kMinTolerance && c.tolerance <= manifest::kMaxTolerance)) {
    throw ConfigFailure("--tolerance must lie in [1e-12, 1e-3] (got " +
                        format_double(c.tolerance) + ")");
  }
  if (c.parallelism < 1) throw ConfigFailure("--parallelism must be >= 1");
}

// Writes to --out when given, else to `out`.
void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigFailure("cannot open output file '" + c.out + "'");
  f << text;
  if (!f) throw ConfigFailure("failed writing output file '" + c.out + "'");
}

std::string params_text(const std::map<std::string, double>& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ' ';
    s += k + "=" + format_double(v);
  }
  return s;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const auto cases = c.manifest.empty()
                         ? manifest::parse(manifest::default_manifest(), c.tolerance,
                                           "default manifest")
                         : manifest::load(c.manifest, c.tolerance);
  if (cases.empty()) err << "warning: manifest contains no cases\n";
  const auto results = identities::run_suite(cases, c.parallelism);
  const bool csv = c.format == "csv";
  emit(c, csv ? report::to_csv(results) : report::to_json(results), out);

  const auto s = report::summarize(results);
  for (const auto& r : results) {
    if (r.status == identities::Status::failed) {
      err << "FAIL " << r.name << " " << params_text(r.params)
          << " residual=" << format_double(r.residual) << "\n";
    } else if (r.status == identities::Status::error) {
      err << "ERROR " << r.name << " " << params_text(r.params) << ": "
          << r.error_kind << ": " << r.message << "\n";
    }
  }
  err << "verify: " << s.total << " records, " << s.passed << " passed, " << s.failed
      << " failed, " << s.errors << " errors, " << s.outside_domain
      << " outside domain\n";
  if (s.errors > 0) return kNumericError;
  if (s.failed > 0) return kVerificationFailed;
  return kOk;
}

int cmd_phi2(const Config& c, std::ostream& out) {
  const double closed = vacuumpol::phi2_closed(c.theta, c.alpha, c.mass);
  const auto limit = vacuumpol::phi2_limit(c.theta, c.alpha, c.mass);
  const double agreement = std::abs(closed - limit.value);
  const double m2 = c.mass * c.mass;
  const std::vector<std::pair<std::string, double>> fields = {
      {"theta", c.theta},
      {"alpha", c.alpha},
      {"M", c.mass},
      {"value_closed", closed},
      {"value_limit", limit.value},
      {"extrapolation_error", limit.error},
      {"route_agreement", agreement},
      {"value_closed_M2", closed * m2},
  };
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    for (const auto& [k, v] : fields) j[k] = v;
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
    os << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      os << (i ? "," : "") << format_double(fields[i].second);
    }
    os << "\n";
  } else {
    for (const auto& [k, v] : fields) {
      os << k << std::string(21 - k.size(), ' ') << format_double(v) << "\n";
    }
  }
  emit(c, os.str(), out);
  // Agreement is judged in units of M^-2.
  return agreement * m2 <= c.tolerance ? kOk : kVerificationFailed;
}

int cmd_figure1(const Config& c, std::ostream& out) {
  for (double a : c.alphas) blackhole::DeficitGeometry::make(a, c.mass);
  const auto rows = vacuumpol::figure1_data(c.alphas, c.points, c.margin, c.mass);
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"cos_theta", r.cos_theta}, {"alpha", r.alpha}, {"phi2_M2", r.phi2_M2}});
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "cos_theta,alpha,phi2_M2\n";
    for (const auto& r : rows) {
      os << format_double(r.cos_theta) << ',' << format_double(r.alpha) << ','
         << format_double(r.phi2_M2) << '\n';
    }
  }
  emit(c, os.str(), out);
  return kOk;
}

std::vector<double> radial_grid(double eta_max) {
  std::vector<double> out;
  const double lo = std::log(1e-4);
  const double hi = std::log(eta_max - 1.0);
  for (int i = 0; i <= 40; ++i) out.push_back(1.0 + std::exp(lo + (hi - lo) * i / 40.0));
  out.back() = eta_max;
  return out;
}

int cmd_radial(const Config& c, std::ostream& out) {
  const auto g = blackhole::DeficitGeometry::make(c.alpha, c.mass);
  const double lambda = blackhole::lambda_of(c.l, c.m, c.alpha);
  ordered_json j;
  j["n"] = c.n;
  j["l"] = c.l;
  j["m"] = c.m;
  j["alpha"] = c.alpha;
  j["M"] = c.mass;
  j["lambda"] = lambda;
  std::vector<std::array<double, 4>> table;
  bool ok = true;
  if (c.n == 0) {
    j["branch"] = "legendre";
    for (double eta : radial_grid(20.0)) {
      table.push_back({eta, specfun::legendre_P_axis({lambda, 0.0}, eta),
                       specfun::legendre_Q(lambda, eta),
                       blackhole::radial_jump(0, lambda, eta, g) *
                           (-g.alpha * g.M * (eta * eta - 1.0))});
    }
  } else {
    j["branch"] = "numerical";
    const auto pair = blackhole::radial_solutions(c.n, lambda);
    const auto fp = blackhole::fit_horizon_exponent(pair);
    const auto fq = blackhole::fit_horizon_exponent(pair, true);
    const double target = 0.5 * std::abs(c.n);
    j["wronskian_scale"] = pair.wronskian_scale();
    j["wronskian_spread"] = pair.wronskian_spread();
    j["exponent_p"] = fp.exponent;
    j["exponent_p_error"] = fp.error;
    j["exponent_q"] = fq.exponent;
    j["exponent_q_error"] = fq.error;
    j["exponent_target"] = target;
    ok = std::abs(fp.exponent - target) <= 1e-3 && pair.wronskian_spread() <= 1e-6;
    for (double eta : radial_grid(pair.eta_max())) {
      table.push_back({eta, pair.p(eta), pair.q(eta), pair.scaled_wronskian(eta)});
    }
  }
  const char* third = c.n == 0 ? "Q" : "q";
  const char* second = c.n == 0 ? "P" : "p";
  const char* fourth = c.n == 0 ? "jump_ratio" : "scaled_wronskian";
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table) {
      rows.push_back({{"eta", r[0]}, {second, r[1]}, {third, r[2]}, {fourth, r[3]}});
    }
    j["table"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else {
    if (c.format != "csv") {
      for (const auto& [k, v] : j.items()) {
        os << "# " << k << " = "
           << (v.is_number_float() ? format_double(v.get<double>()) : v.dump()) << "\n";
      }
    }
    os << "eta," << second << ',' << third << ',' << fourth << "\n";
    for (const auto& r : table) {
      os << format_double(r[0]) << ',' << format_double(r[1]) << ','
         << format_double(r[2]) << ',' << format_double(r[3]) << '\n';
    }
  }
  emit(c, os.str(), out);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Vacuum polarization on a Schwarzschild horizon threaded by a cosmic string",
               "stringvac"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", c.tolerance, "tolerance in [1e-12, 1e-3]");
  app.add_option("--manifest", c.manifest, "identity grid (YAML); default is built in");
  app.add_option("--out", c.out, "write output here instead of stdout");
  app.add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--parallelism", c.parallelism, "worker threads (>= 1)");

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  auto* phi2 = app.add_subcommand("phi2", "renormalized phi^2 on the horizon");
  phi2->add_option("--theta", c.theta, "polar angle");
  phi2->add_option("--alpha", c.alpha, "deficit parameter in (0, 1]");
  phi2->add_option("--mass", c.mass, "black hole mass");
  auto* fig = app.add_subcommand("figure1", "phi^2 M^2 against cos theta");
  fig->add_option("--alpha", c.alphas, "deficit parameters (repeatable)");
  fig->add_option("--points", c.points, "cos theta grid size");
  fig->add_option("--margin", c.margin, "largest |cos theta|");
  fig->add_option("--mass", c.mass, "black hole mass");
  auto* radial = app.add_subcommand("radial", "radial mode functions");
  radial->add_option("--n", c.n, "Matsubara index");
  radial->add_option("--l", c.l, "degree index");
  radial->add_option("--m", c.m, "azimuthal index");
  radial->add_option("--alpha", c.alpha, "deficit parameter in (0, 1]");
  radial->add_option("--mass", c.mass, "black hole mass");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    validate(c);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (phi2->parsed()) return cmd_phi2(c, out);
    if (fig->parsed()) return cmd_figure1(c, out);
    if (radial->parsed()) return cmd_radial(c, out);
  } catch (const ConfigFailure& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const manifest::ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kNumericError;
  }
  return kConfigError;
}

}  // namespace stringvac::cli
