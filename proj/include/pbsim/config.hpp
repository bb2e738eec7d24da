#pragma once

#include <string>

#include "pbsim/sweep.hpp"

namespace pbsim {

struct OutputSettings {
  std::string path;    // empty: the front end derives "<mode>.csv"
  int precision = 12;  // significant digits in CSV cells
};

struct RunConfig {
  SweepSpec spec;
  OutputSettings output;
};

// Strict-schema parse of a JSON config with sections params, sweep, solver
// and output. Unknown keys, type mismatches and parameter violations are all
// collected into a single ValidationError; syntax errors carry line/column.
// Missing sections and keys keep their documented defaults.
RunConfig parse_config(const std::string& text);

// One "key=value" override. Bare keys are looked up in params, then solver,
// then sweep, then output; dotted keys ("solver.n_max") address a section
// directly. The value is parsed as a JSON scalar, falling back to a plain
// string. Axes cannot be overridden this way. Throws ValidationError.
void apply_override(RunConfig& cfg, const std::string& assignment);

}  // namespace pbsim
