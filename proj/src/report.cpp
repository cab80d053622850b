#include "stringvac/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace stringvac::report {

namespace {

using nlohmann::ordered_json;

// JSON has no inf/nan; store them as strings so the record stays readable.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

ordered_json to_object(const std::map<std::string, double>& m) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : m) o[k] = number(v);
  return o;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Summary summarize(const std::vector<identities::IdentityCase>& cases) {
  Summary s;
  for (const auto& c : cases) {
    ++s.total;
    switch (c.status) {
      case identities::Status::passed: ++s.passed; break;
      case identities::Status::failed: ++s.failed; break;
      case identities::Status::error: ++s.errors; break;
      case identities::Status::outside_domain: ++s.outside_domain; break;
    }
  }
  return s;
}

std::string to_json(const std::vector<identities::IdentityCase>& cases) {
  const auto s = summarize(cases);
  ordered_json root;
  root["summary"] = {{"total", s.total},
                     {"passed", s.passed},
                     {"failed", s.failed},
                     {"errors", s.errors},
                     {"outside_domain", s.outside_domain}};
  ordered_json records = ordered_json::array();
  for (const auto& c : cases) {
    ordered_json r;
    r["identity"] = c.name;
    r["params"] = to_object(c.params);
    r["status"] = identities::status_name(c.status);
    r["tol"] = number(c.tol);
    if (c.status == identities::Status::error ||
        c.status == identities::Status::outside_domain) {
      if (!c.error_kind.empty()) r["error_kind"] = c.error_kind;
      r["message"] = c.message;
    } else {
      r["lmax"] = c.lmax;
      r["mmax"] = c.mmax;
      r["lhs"] = number(c.lhs);
      r["rhs"] = number(c.rhs);
      r["residual_abs"] = number(c.residual_abs);
      r["residual_rel"] = number(c.residual_rel);
      r["residual"] = number(c.residual);
      r["certified_tail"] = number(c.certified_tail);
      r["diagnostics"] = to_object(c.diagnostics);
    }
    records.push_back(std::move(r));
  }
  root["records"] = std::move(records);
  return root.dump(2) + "\n";
}

std::string to_csv(const std::vector<identities::IdentityCase>& cases) {
  std::ostringstream os;
  os << "identity,params,status,tol,lmax,mmax,lhs,rhs,residual_abs,"
        "residual_rel,residual,certified_tail,error_kind,message\n";
  for (const auto& c : cases) {
    std::string params;
    for (const auto& [k, v] : c.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + format_double(v);
    }
    os << c.name << ',' << csv_quote(params) << ','
       << identities::status_name(c.status) << ',' << format_double(c.tol) << ','
       << c.lmax << ',' << c.mmax << ',' << format_double(c.lhs) << ','
       << format_double(c.rhs) << ',' << format_double(c.residual_abs) << ','
       << format_double(c.residual_rel) << ',' << format_double(c.residual) << ','
       << format_double(c.certified_tail) << ',' << c.error_kind << ','
       << csv_quote(c.message) << '\n';
  }
  return os.str();
}

}  // namespace stringvac::report
