#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stringvac/identities.hpp"

/// Identity grids read from YAML.
///
///   version: 1
///   cases:
///     - identity: heine_generalized
///       grid: {alpha: [1, 0.75], theta: [pi/4, pi/2], ...}
///       params: {dphi: 0}          # fixed values, merged into the grid
///       tol: 1e-6                  # optional, else the run tolerance
///       lmax: 0                    # optional truncation overrides
///       mmax: -1
///       skip_outside_domain: true  # optional
///
/// Numeric scalars accept arithmetic on numbers and `pi` ("2*pi/3").
namespace stringvac::manifest {

/// Invalid manifest or configuration; the message carries the line number.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates "+ - * / ( )" over decimal numbers and `pi`.
double parse_expression(const std::string& text);

/// Cases in manifest order; grids expand in the identity's canonical
/// parameter order with the last parameter varying fastest.
/// `default_tol` fills cases without their own tol. `origin` names the source
/// in error messages.
std::vector<identities::CaseSpec> parse(const std::string& yaml_text,
                                        double default_tol,
                                        const std::string& origin = "manifest");

std::vector<identities::CaseSpec> load(const std::string& path,
                                       double default_tol);

/// The manifest compiled into the binary (manifests/default.yaml).
const char* default_manifest();

/// Allowed tolerance range for runs and cases.
inline constexpr double kMinTolerance = 1e-12;
inline constexpr double kMaxTolerance = 1e-3;

}  // namespace stringvac::manifest
