#include "pbsim/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pbsim/errors.hpp"

namespace pbsim {

namespace {

using Json = nlohmann::json;

bool read_number(const Json& v, double& out) {
  if (!v.is_number()) return false;
  out = v.get<double>();
  return true;
}

bool read_integer(const Json& v, int& out) {
  if (!v.is_number_integer()) return false;
  out = v.get<int>();
  return true;
}

void type_issue(std::vector<std::string>& issues, const std::string& path,
                const char* expected) {
  issues.push_back("key '" + path + "' must be " + expected);
}

// Returns false when the key is not a member of params; value problems are
// reported through `issues`.
bool set_params_field(SystemParams& p, const std::string& key, const Json& v,
                      const std::string& path, std::vector<std::string>& issues) {
  double num = 0.0;
  if (key == "delta_a" || key == "kappa_hz") {
    auto& slot = key == "delta_a" ? p.delta_a : p.kappa_hz;
    if (v.is_null())
      slot.reset();
    else if (read_number(v, num))
      slot = num;
    else
      type_issue(issues, path, "a number or null");
    return true;
  }
  static const std::vector<std::string> keys = {
      "g", "u0", "delta_c", "eta", "omega_m", "theta", "kappa", "gamma_g", "gamma_d"};
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) return false;
  if (!read_number(v, num)) {
    type_issue(issues, path, "a number");
    return true;
  }
  if (key == "g") p.g = num;
  else if (key == "u0") p.u0 = num;
  else if (key == "delta_c") p.delta_c = num;
  else if (key == "eta") p.eta = num;
  else if (key == "omega_m") p.omega_m = num;
  else if (key == "theta") p.theta = canonical_phase(num);
  else if (key == "kappa") p.kappa = num;
  else if (key == "gamma_g") p.gamma_g = num;
  else if (key == "gamma_d") p.gamma_d = num;
  return true;
}

bool set_solver_field(SolverSettings& s, const std::string& key, const Json& v,
                      const std::string& path, std::vector<std::string>& issues) {
  if (key == "n_max" || key == "workers") {
    int num = 0;
    if (!read_integer(v, num))
      type_issue(issues, path, "an integer");
    else if (key == "n_max")
      s.n_max = num;
    else
      s.workers = num;
    return true;
  }
  if (key != "steady_tol" && key != "time_step" && key != "traj_tol") return false;
  double num = 0.0;
  if (!read_number(v, num)) {
    type_issue(issues, path, "a number");
    return true;
  }
  if (key == "steady_tol") s.steady_tol = num;
  else if (key == "time_step") s.time_step = num;
  else s.traj_tol = num;
  return true;
}

bool set_sweep_field(SweepSpec& spec, const std::string& key, const Json& v,
                     const std::string& path, std::vector<std::string>& issues) {
  if (key == "mode" || key == "interference") {
    if (!v.is_string()) {
      type_issue(issues, path, "a string");
      return true;
    }
    try {
      if (key == "mode")
        spec.mode = sweep_mode_from_string(v.get<std::string>());
      else
        spec.interference = interference_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      issues.push_back("key '" + path + "': " + e.what());
    }
    return true;
  }
  return false;
}

bool set_output_field(OutputSettings& out, const std::string& key, const Json& v,
                      const std::string& path, std::vector<std::string>& issues) {
  if (key == "path") {
    if (v.is_string())
      out.path = v.get<std::string>();
    else
      type_issue(issues, path, "a string");
    return true;
  }
  if (key == "precision") {
    int num = 0;
    if (read_integer(v, num))
      out.precision = num;
    else
      type_issue(issues, path, "an integer");
    return true;
  }
  return false;
}

void parse_axes(const Json& v, std::vector<Axis>& axes,
                std::vector<std::string>& issues) {
  if (!v.is_array()) {
    type_issue(issues, "sweep.axes", "an array");
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "sweep.axes[" + std::to_string(i) + "]";
    const Json& item = v[i];
    if (!item.is_object()) {
      type_issue(issues, path, "an object");
      continue;
    }
    Axis ax;
    bool ok = true;
    for (const auto& [key, val] : item.items()) {
      double num = 0.0;
      if (key == "name") {
        if (val.is_string()) ax.name = val.get<std::string>();
        else { type_issue(issues, path + ".name", "a string"); ok = false; }
      } else if (key == "min" || key == "max") {
        if (read_number(val, num)) (key == "min" ? ax.min : ax.max) = num;
        else { type_issue(issues, path + "." + key, "a number"); ok = false; }
      } else if (key == "count") {
        if (!read_integer(val, ax.count)) {
          type_issue(issues, path + ".count", "an integer");
          ok = false;
        }
      } else if (key == "spacing") {
        if (!val.is_string() || val.get<std::string>() != "linear") {
          issues.push_back("key '" + path + ".spacing' only supports \"linear\"");
          ok = false;
        }
      } else {
        issues.push_back("unknown key '" + path + "." + key + "'");
        ok = false;
      }
    }
    for (const char* req : {"name", "min", "max", "count"})
      if (!item.contains(req)) {
        issues.push_back("key '" + path + "' is missing '" + req + "'");
        ok = false;
      }
    if (ok) axes.push_back(ax);
  }
}

void parse_section(RunConfig& cfg, const std::string& section, const Json& v,
                   std::vector<std::string>& issues) {
  if (!v.is_object()) {
    type_issue(issues, section, "an object");
    return;
  }
  for (const auto& [key, val] : v.items()) {
    const std::string path = section + "." + key;
    bool known = false;
    if (section == "params") {
      known = set_params_field(cfg.spec.fixed, key, val, path, issues);
    } else if (section == "solver") {
      known = set_solver_field(cfg.spec.solver, key, val, path, issues);
    } else if (section == "sweep") {
      known = set_sweep_field(cfg.spec, key, val, path, issues);
      if (!known && key == "axes") {
        parse_axes(val, cfg.spec.axes, issues);
        known = true;
      }
    } else if (section == "output") {
      known = set_output_field(cfg.output, key, val, path, issues);
    }
    if (!known) issues.push_back("unknown key '" + path + "'");
  }
}

void check_output(const OutputSettings& out, std::vector<std::string>& issues) {
  if (out.precision < 1 || out.precision > 17)
    issues.push_back("output.precision must be between 1 and 17");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError({e.what()});
  }
  if (!root.is_object()) throw ValidationError({"config root must be an object"});

  RunConfig cfg;
  std::vector<std::string> issues;
  for (const auto& [key, val] : root.items()) {
    if (key == "params" || key == "sweep" || key == "solver" || key == "output")
      parse_section(cfg, key, val, issues);
    else
      issues.push_back("unknown key '" + key + "'");
  }
  for (auto& issue : cfg.spec.issues()) issues.push_back(std::move(issue));
  check_output(cfg.output, issues);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return cfg;
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ValidationError({"override '" + assignment + "' is not of the form key=value"});
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  Json value = Json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;  // bare words are strings

  std::vector<std::string> issues;
  const auto dot = key.find('.');
  if (dot != std::string::npos) {
    const std::string section = key.substr(0, dot);
    const std::string field = key.substr(dot + 1);
    bool known = false;
    if (section == "params")
      known = set_params_field(cfg.spec.fixed, field, value, key, issues);
    else if (section == "solver")
      known = set_solver_field(cfg.spec.solver, field, value, key, issues);
    else if (section == "sweep")
      known = set_sweep_field(cfg.spec, field, value, key, issues);
    else if (section == "output")
      known = set_output_field(cfg.output, field, value, key, issues);
    else
      issues.push_back("unknown section '" + section + "' in override '" + key + "'");
    if (issues.empty() && !known)
      issues.push_back(section == "sweep" && field == "axes"
                           ? "axes cannot be overridden with --set; use a config file"
                           : "unknown key '" + key + "'");
  } else {
    const bool known = set_params_field(cfg.spec.fixed, key, value, key, issues) ||
                       set_solver_field(cfg.spec.solver, key, value, key, issues) ||
                       set_sweep_field(cfg.spec, key, value, key, issues) ||
                       set_output_field(cfg.output, key, value, key, issues);
    if (!known) issues.push_back("unknown key '" + key + "'");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

}  // namespace pbsim
