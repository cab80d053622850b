#pragma once

#include <string>
#include <vector>

#include "stringvac/identities.hpp"

/// Serialisation of identity runs. No timestamps or host data, so the same
/// cases always give the same bytes.
namespace stringvac::report {

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errors = 0;
  int outside_domain = 0;
};

Summary summarize(const std::vector<identities::IdentityCase>& cases);

/// "%.17g".
std::string format_double(double v);

std::string to_json(const std::vector<identities::IdentityCase>& cases);
std::string to_csv(const std::vector<identities::IdentityCase>& cases);

}  // namespace stringvac::report
