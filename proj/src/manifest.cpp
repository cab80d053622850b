#include "stringvac/manifest.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "stringvac/default_manifest.hpp"

namespace stringvac::manifest {

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  double run() {
    const double v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("cannot evaluate '" + s_ + "': " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        const double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip_ws();
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return std::numbers::pi;
    }
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number or pi");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Context {
  std::string origin;

  [[noreturn]] void fail(const YAML::Node& n, const std::string& what) const {
    const auto mark = n.Mark();
    std::ostringstream os;
    os << origin;
    if (mark.line >= 0) os << ":" << mark.line + 1;
    os << ": " << what;
    throw ConfigError(os.str());
  }

  double number(const YAML::Node& n, const std::string& key) const {
    if (!n.IsScalar()) fail(n, "'" + key + "' must be a number");
    try {
      const double v = parse_expression(n.Scalar());
      if (!std::isfinite(v)) fail(n, "'" + key + "' is not finite");
      return v;
    } catch (const ConfigError& e) {
      fail(n, e.what());
    }
  }

  int integer(const YAML::Node& n, const std::string& key) const {
    const double v = number(n, key);
    if (v != std::round(v) || std::abs(v) > 1e9) {
      fail(n, "'" + key + "' must be an integer");
    }
    return static_cast<int>(v);
  }

  bool boolean(const YAML::Node& n, const std::string& key) const {
    try {
      return n.as<bool>();
    } catch (const YAML::Exception&) {
      fail(n, "'" + key + "' must be true or false");
    }
  }

  std::vector<double> values(const YAML::Node& n, const std::string& key) const {
    std::vector<double> out;
    if (n.IsSequence()) {
      if (n.size() == 0) fail(n, "grid axis '" + key + "' is empty");
      for (const auto& item : n) out.push_back(number(item, key));
    } else {
      out.push_back(number(n, key));
    }
    return out;
  }

  double tolerance(const YAML::Node& n) const {
    const double t = number(n, "tol");
    if (!(t >= kMinTolerance && t <= kMaxTolerance)) {
      fail(n, "tol must lie in [1e-12, 1e-3]");
    }
    return t;
  }
};

void expand(const Context& ctx, const YAML::Node& node, double default_tol,
            std::vector<identities::CaseSpec>& out) {
  static const std::set<std::string> allowed = {
      "identity", "params", "grid", "tol", "lmax", "mmax", "skip_outside_domain"};
  if (!node.IsMap()) ctx.fail(node, "each case must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) ctx.fail(kv.first, "unknown key '" + key + "'");
  }
  const auto id_node = node["identity"];
  if (!id_node) ctx.fail(node, "case is missing 'identity'");
  const auto identity = id_node.as<std::string>();
  const auto& names = identities::identity_names();
  if (std::find(names.begin(), names.end(), identity) == names.end()) {
    ctx.fail(id_node, "unknown identity '" + identity + "'");
  }
  const auto& param_names = identities::identity_params(identity);

  identities::CaseSpec base;
  base.identity = identity;
  base.tol = node["tol"] ? ctx.tolerance(node["tol"]) : default_tol;
  if (node["lmax"]) base.lmax = ctx.integer(node["lmax"], "lmax");
  if (node["mmax"]) base.mmax = ctx.integer(node["mmax"], "mmax");
  if (node["skip_outside_domain"]) {
    base.skip_outside_domain =
        ctx.boolean(node["skip_outside_domain"], "skip_outside_domain");
  }

  std::map<std::string, std::vector<double>> axes;
  for (const char* section : {"params", "grid"}) {
    const auto sec = node[section];
    if (!sec) continue;
    if (!sec.IsMap()) ctx.fail(sec, std::string("'") + section + "' must be a mapping");
    for (const auto& kv : sec) {
      const auto key = kv.first.as<std::string>();
      if (std::find(param_names.begin(), param_names.end(), key) == param_names.end()) {
        ctx.fail(kv.first, "identity '" + identity + "' has no parameter '" + key + "'");
      }
      if (axes.contains(key)) ctx.fail(kv.first, "parameter '" + key + "' given twice");
      if (std::string(section) == "params" && kv.second.IsSequence()) {
        ctx.fail(kv.second, "'params' values are scalars; use 'grid' for lists");
      }
      axes[key] = ctx.values(kv.second, key);
    }
  }
  for (const auto& name : param_names) {
    if (!axes.contains(name)) ctx.fail(node, "case is missing parameter '" + name + "'");
  }

  // Odometer over the canonical parameter order, last parameter fastest.
  std::vector<std::size_t> idx(param_names.size(), 0);
  for (;;) {
    auto spec = base;
    for (std::size_t k = 0; k < param_names.size(); ++k) {
      spec.params[param_names[k]] = axes[param_names[k]][idx[k]];
    }
    out.push_back(std::move(spec));
    std::size_t k = param_names.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[param_names[k]].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (param_names.empty()) return;
  }
}

}  // namespace

double parse_expression(const std::string& text) { return ExprParser(text).run(); }

std::vector<identities::CaseSpec> parse(const std::string& yaml_text,
                                        double default_tol,
                                        const std::string& origin) {
  Context ctx{origin};
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  std::vector<identities::CaseSpec> out;
  if (root.IsNull()) return out;
  if (!root.IsMap()) ctx.fail(root, "top level must be a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "version" && key != "cases") {
      ctx.fail(kv.first, "unknown key '" + key + "'");
    }
  }
  if (root["version"] && ctx.integer(root["version"], "version") != 1) {
    ctx.fail(root["version"], "unsupported manifest version");
  }
  const auto cases = root["cases"];
  if (!cases || cases.IsNull()) return out;
  if (!cases.IsSequence()) ctx.fail(cases, "'cases' must be a list");
  for (const auto& c : cases) expand(ctx, c, default_tol, out);
  return out;
}

std::vector<identities::CaseSpec> load(const std::string& path,
                                       double default_tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open manifest");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str(), default_tol, path);
}

const char* default_manifest() { return kDefaultManifestText; }

}  // namespace stringvac::manifest
