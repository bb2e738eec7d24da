#include <doctest.h>

#include <cmath>
#include <string>

#include "pbsim/config.hpp"
#include "pbsim/errors.hpp"
#include "pbsim/sweep.hpp"

using namespace pbsim;

TEST_CASE("a full config populates every section") {
  const std::string text = R"({
    "params": {"g": 1.2, "u0": -5.0, "delta_c": 5.19, "eta": 0.1, "omega_m": 0.2,
               "theta": -1.0, "kappa": 1.0, "gamma_g": 0.002, "gamma_d": 0.001,
               "delta_a": 4.5, "kappa_hz": 923628.24},
    "sweep": {"mode": "map_g2_ns", "interference": "manual",
              "axes": [{"name": "delta_c", "min": -8, "max": 8, "count": 17},
                       {"name": "u0", "min": -5, "max": 5, "count": 11, "spacing": "linear"}]},
    "solver": {"n_max": 10, "steady_tol": 1e-9, "time_step": 0.002, "traj_tol": 1e-7,
               "workers": 3},
    "output": {"path": "map.csv", "precision": 9}
  })";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.spec.fixed.g == 1.2);
  CHECK(cfg.spec.fixed.u0 == -5.0);
  CHECK(cfg.spec.fixed.delta_a.value() == 4.5);
  CHECK(cfg.spec.fixed.kappa_hz.value() == 923628.24);
  // phases are canonicalized on entry
  CHECK(cfg.spec.fixed.theta == doctest::Approx(2.0 * M_PI - 1.0).epsilon(1e-15));
  CHECK(cfg.spec.mode == SweepMode::map_g2_ns);
  CHECK(cfg.spec.interference == InterferenceMode::manual);
  REQUIRE(cfg.spec.axes.size() == 2);
  CHECK(cfg.spec.axes[0].name == "delta_c");
  CHECK(cfg.spec.axes[1].count == 11);
  CHECK(cfg.spec.solver.n_max == 10);
  CHECK(cfg.spec.solver.workers == 3);
  CHECK(cfg.output.path == "map.csv");
  CHECK(cfg.output.precision == 9);
}

TEST_CASE("an empty object yields pure defaults") {
  const RunConfig cfg = parse_config("{}");
  CHECK(cfg.spec.fixed.g == 1.0);
  CHECK(cfg.spec.mode == SweepMode::cut);
  CHECK(cfg.spec.interference == InterferenceMode::optimal);
  CHECK(cfg.spec.axes.empty());
  CHECK(cfg.output.path.empty());
  CHECK(cfg.output.precision == 12);
}

TEST_CASE("all problems are reported in one validation error") {
  const std::string text = R"({
    "params": {"g": "fast", "kappa": -1.0, "bogus": 1},
    "sweep": {"mode": "sideways"},
    "solver": {"n_max": 0},
    "output": {"precision": 40},
    "extra_section": {}
  })";
  try {
    parse_config(text);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const auto& issues = e.issues();
    CHECK(issues.size() >= 6);
    const auto contains = [&](const std::string& needle) {
      for (const auto& s : issues)
        if (s.find(needle) != std::string::npos) return true;
      return false;
    };
    CHECK(contains("params.g"));
    CHECK(contains("kappa must be > 0"));
    CHECK(contains("unknown key 'params.bogus'"));
    CHECK(contains("sweep.mode"));
    CHECK(contains("n_max"));
    CHECK(contains("output.precision"));
    CHECK(contains("unknown key 'extra_section'"));
  }
}

TEST_CASE("syntax errors surface the parser position") {
  try {
    parse_config("{\"params\": {\n  \"g\": 1.0,,\n}}");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues().size() == 1);
    // nlohmann reports "parse error at line L, column C"
    CHECK(e.issues()[0].find("parse error") != std::string::npos);
    CHECK(e.issues()[0].find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("[1, 2]"), ValidationError);
}

TEST_CASE("axis entries are validated field by field") {
  const std::string text = R"({
    "sweep": {"axes": [{"name": "delta_c", "min": 0, "max": 1},
                       {"name": 5, "min": 0, "max": 1, "count": 3, "mystery": true}]}
  })";
  try {
    parse_config(text);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const auto& issues = e.issues();
    bool missing_count = false, bad_name = false, unknown = false;
    for (const auto& s : issues) {
      if (s.find("missing 'count'") != std::string::npos) missing_count = true;
      if (s.find("axes[1].name") != std::string::npos) bad_name = true;
      if (s.find("axes[1].mystery") != std::string::npos) unknown = true;
    }
    CHECK(missing_count);
    CHECK(bad_name);
    CHECK(unknown);
  }
}

TEST_CASE("overrides hit dotted and bare keys") {
  RunConfig cfg = parse_config("{}");
  apply_override(cfg, "params.g=2.5");
  CHECK(cfg.spec.fixed.g == 2.5);
  apply_override(cfg, "u0=-4.0");
  CHECK(cfg.spec.fixed.u0 == -4.0);
  apply_override(cfg, "mode=map_g2_ns");
  CHECK(cfg.spec.mode == SweepMode::map_g2_ns);
  apply_override(cfg, "interference=off");
  CHECK(cfg.spec.interference == InterferenceMode::off);
  apply_override(cfg, "workers=5");
  CHECK(cfg.spec.solver.workers == 5);
  apply_override(cfg, "output.path=custom.csv");  // bare word parses as string
  CHECK(cfg.output.path == "custom.csv");
  apply_override(cfg, "precision=6");
  CHECK(cfg.output.precision == 6);
  apply_override(cfg, "delta_a=null");
  CHECK_FALSE(cfg.spec.fixed.delta_a.has_value());
  apply_override(cfg, "theta=-1.0");
  CHECK(cfg.spec.fixed.theta == doctest::Approx(2.0 * M_PI - 1.0).epsilon(1e-15));
}

TEST_CASE("overrides reject malformed or unknown assignments") {
  RunConfig cfg = parse_config("{}");
  CHECK_THROWS_AS(apply_override(cfg, "no_equals"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "=5"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "nonsense=1"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "params.nonsense=1"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "plumbing.g=1"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "g=fast"), ValidationError);
  CHECK_THROWS_AS(apply_override(cfg, "sweep.axes=[]"), ValidationError);
  // nothing was modified by the failed attempts
  CHECK(cfg.spec.fixed.g == 1.0);
}
