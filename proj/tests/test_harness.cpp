#include <cmath>

#include "doctest.h"
#include "qrebound/harness.hpp"

using namespace qrebound;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.samples_per_case = 5;
  cfg.dims = {2, 3};
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("property list covers every family") {
    const auto names = property_names();
    for (const char* n :
         {"norm_triangle", "ui_norm_vs_E", "dominance_upper", "dominance_lower", "trace_vs_operator",
          "rescaled_distance_max", "klein", "joint_convexity", "scaling", "common_addend", "pinching",
          "gradient_fd", "pinsker_lower", "sharp_lower", "upper_quadratic", "upper_log",
          "upper_sharp", "d2_branch_continuity", "dgt2_branch_continuity", "fannes",
          "fidelity_sandwich", "second_derivative", "witness_lower_saturation",
          "witness_upper_le_saturation", "witness_upper_gt_saturation"})
      CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }

  TEST_CASE("config validation") {
    SuiteConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.samples_per_case = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SuiteConfig{};
    cfg.dims = {1};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SuiteConfig{};
    cfg.slack = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SuiteConfig{};
    cfg.properties = {"no_such_property"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }

  TEST_CASE("runs are deterministic and clean") {
    const SuiteReport a = run_suite(small_config());
    const SuiteReport b = run_suite(small_config());
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.passed());
    CHECK(a.total_samples > 0);
    SuiteConfig other = small_config();
    other.seed = 43;
    CHECK(run_suite(other).to_json().dump() != a.to_json().dump());
  }

  TEST_CASE("sub-seeds separate properties, dimensions and indices") {
    const auto s = sample_seed(42, "klein", 2, 0);
    CHECK(s == sample_seed(42, "klein", 2, 0));
    CHECK(s != sample_seed(42, "klein", 2, 1));
    CHECK(s != sample_seed(42, "klein", 3, 0));
    CHECK(s != sample_seed(42, "scaling", 2, 0));
    CHECK(s != sample_seed(43, "klein", 2, 0));
  }

  TEST_CASE("replay reproduces the recorded margin bit for bit") {
    SuiteConfig cfg = small_config();
    cfg.properties = {"upper_log", "sharp_lower", "klein"};
    const SuiteReport r = run_suite(cfg);
    for (const PropertyRecord& p : r.properties) {
      REQUIRE(p.worst_input.contains("case"));
      const ReplayRecord rep = replay(p.name, p.worst_input["case"]);
      CHECK(rep.margin == p.worst_margin);
      CHECK_FALSE(rep.violated);
      const Json regenerated = generate_case(p.name, cfg, p.worst_input["dim"].get<int>(),
                                             p.worst_input["index"].get<long>());
      CHECK(regenerated == p.worst_input["case"]);
    }
    CHECK_THROWS_AS(replay("no_such_property", Json::object()), std::invalid_argument);
  }

  TEST_CASE("perturbed replay changes the margin") {
    SuiteConfig cfg = small_config();
    const Json c = generate_case("upper_quadratic", cfg, 3, 0);
    Json p = c;
    p["rho"]["re"][0][0] = p["rho"]["re"][0][0].get<double>() + 1e-3;
    p["rho"]["re"][1][1] = p["rho"]["re"][1][1].get<double>() - 1e-3;
    CHECK(replay("upper_quadratic", p).margin != replay("upper_quadratic", c).margin);
  }

  TEST_CASE("orthogonal pure states replay without a violation") {
    const Json c{{"dim", 2},
                 {"rho", {{"dim", 2}, {"re", {{1, 0}, {0, 0}}}, {"im", {{0, 0}, {0, 0}}}}},
                 {"sigma", {{"dim", 2}, {"re", {{0, 0}, {0, 1}}}, {"im", {{0, 0}, {0, 0}}}}},
                 {"kinds", {"trace", "operator"}}};
    const ReplayRecord r = replay("sharp_lower", c);
    CHECK(r.error.empty());
    CHECK_FALSE(r.violated);
    CHECK(std::isinf(r.margin));
  }

  TEST_CASE("evaluation errors are recorded as violations") {
    const ReplayRecord r = replay("klein", Json{{"dim", 2}});
    CHECK(r.violated);
    CHECK_FALSE(r.error.empty());
  }

  TEST_CASE("refuted claims produce counterexamples outside the verdict") {
    SuiteConfig cfg;
    cfg.samples_per_case = 50;
    cfg.dims = {3};
    cfg.properties = {"dominance_lower", "dominance_upper"};
    const SuiteReport r = run_suite(cfg);
    CHECK(r.passed());
    const PropertyRecord* lower = r.find("dominance_lower");
    REQUIRE(lower != nullptr);
    CHECK(lower->refuted);
    CHECK(lower->violations > 0);
    CHECK(r.counterexamples == lower->violations);
    CHECK(r.find("dominance_upper")->violations == 0);

    const Json diag{{"dim", 3},
                    {"A", {{"dim", 3},
                           {"re", {{2, 0, 0}, {0, -1, 0}, {0, 0, -1}}},
                           {"im", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}}},
                    {"kinds", {"kyfan:2"}}};
    CHECK(replay("dominance_lower", diag).margin == doctest::Approx(-0.5));
  }

  TEST_CASE("zero slack exposes rounding") {
    SuiteConfig cfg;
    cfg.samples_per_case = 200;
    cfg.slack = 0.0;
    cfg.properties = {"norm_unitary_invariance", "norm_homogeneity"};
    CHECK_FALSE(run_suite(cfg).passed());
  }
}
