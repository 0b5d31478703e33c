#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qrebound/bounds.hpp"
#include "qrebound/entropy.hpp"
#include "qrebound/figures.hpp"
#include "qrebound/harness.hpp"
#include "qrebound/norms.hpp"
#include "qrebound/serialization.hpp"
#include "qrebound/witnesses.hpp"

namespace fs = std::filesystem;
using namespace qrebound;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

int cmd_compute(const std::string& rho_path, const std::string& sigma_path, bool csv,
                const std::vector<std::string>& norms) {
  const DensityMatrix rho = load_density(rho_path);
  const DensityMatrix sigma = load_density(sigma_path);
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("rho and sigma must have equal dimension (" +
                                std::to_string(rho.dim()) + " vs " +
                                std::to_string(sigma.dim()) + ")");
  std::vector<NormKind> kinds;
  for (const std::string& n : norms) kinds.push_back(NormKind::parse(n));

  const BoundReport r = bound_report(rho, sigma);
  if (csv) {
    std::cout << report_csv_header() << '\n' << report_csv_row(r) << '\n';
    return 0;
  }
  Json j = report_to_json(r);
  if (!kinds.empty()) {
    Json per = Json::array();
    for (const NormKind& k : kinds) {
      const double t = rescaled_distance(rho, sigma, k);
      per.push_back({{"norm", k.to_string()},
                     {"T", number_sig15(t)},
                     {"lower_s", number_sig15(lower_bound_sharp(rho, sigma, k))}});
    }
    j["norms"] = per;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_figure(int which, const std::string& out) {
  for (const fs::path& p : write_figure(which, out)) std::cerr << "wrote " << p.string() << '\n';
  return 0;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CLI::ValidationError("--dims", "expected a comma separated list of integers");
    dims.push_back(d);
  }
  return dims;
}

int cmd_verify(SuiteConfig cfg, const std::string& out) {
  const SuiteReport report = run_suite(cfg);
  const std::string text = report.to_json().dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  for (const PropertyRecord& r : report.properties)
    if (r.violations > 0)
      std::cerr << (r.refuted ? "counterexample: " : "violation: ") << r.name << " (" << r.violations << " of " << r.samples
                << ")\n";
  return report.passed() ? 0 : kExitViolations;
}

int cmd_replay(const std::string& property, const std::string& case_path, double slack) {
  std::ifstream in(case_path);
  if (!in) throw std::runtime_error("cannot open " + case_path);
  Json j = Json::parse(in);
  // Accept either a bare case or a witness record {"case": ...}.
  if (j.contains("case")) j = j["case"];
  const ReplayRecord r = replay(property, j, slack);
  Json out{{"property", r.property},
           {"margin", std::isfinite(r.margin) ? Json(r.margin) : Json(format_sig15(r.margin))},
           {"tolerance", r.tolerance},
           {"violated", r.violated}};
  if (!r.error.empty()) out["error"] = r.error;
  std::cout << out.dump(2) << '\n';
  return r.violated ? kExitViolations : 0;
}

struct WitnessArgs {
  std::string kind = "upper";
  double x = 0.0;
  double t = 0.0;
  double beta = 0.0;
  int dim = 3;
  int j = -1;
  std::string out = ".";
};

int cmd_witness(const WitnessArgs& a) {
  StatePair pair{DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(1)};
  Json info{{"kind", a.kind}, {"dim", a.dim}};
  double claimed = 0.0;
  if (a.kind == "lower") {
    pair = witness_lower(a.x, a.dim);
    claimed = s_of_x(a.x);
    info["x"] = a.x;
  } else if (a.kind == "upper") {
    info["T"] = a.t;
    info["beta"] = a.beta;
    if (a.t <= a.beta) {
      pair = witness_upper_T_le_beta(a.t, a.beta, a.dim);
    } else {
      // Default: the smallest J with η ≥ 0, kept in range so that an
      // infeasible (T, β) is reported by its own condition.
      int j = a.j;
      if (j < 0 && a.beta > 0.0)
        j = std::clamp(static_cast<int>(std::ceil(a.dim - 1 - (1.0 - a.t) / a.beta - 1e-12)), 0,
                       std::max(0, a.dim - 3));
      j = std::max(j, 0);
      pair = witness_upper_T_gt_beta(a.t, a.beta, a.dim, j);
      info["J"] = j;
    }
    claimed = upper_bound_sharp_dgt2(a.t, a.beta);
  } else {
    throw std::invalid_argument("witness kind must be 'lower' or 'upper'");
  }

  fs::create_directories(a.out);
  const fs::path rho_path = fs::path(a.out) / "rho.json";
  const fs::path sigma_path = fs::path(a.out) / "sigma.json";
  save_json(rho_path, matrix_to_json(pair.rho.matrix()));
  save_json(sigma_path, matrix_to_json(pair.sigma.matrix()));

  info["rho"] = rho_path.string();
  info["sigma"] = sigma_path.string();
  info["claimed_bound"] = number_sig15(claimed);
  info["exact"] = number_sig15(relative_entropy(pair.rho, pair.sigma).value());
  std::cout << info.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum relative entropy bounds: distances, bounds, figure data, verification"};
  app.require_subcommand(1);

  std::string rho_path, sigma_path;
  bool csv = false;
  std::vector<std::string> norms;
  auto* compute = app.add_subcommand("compute", "Distances and bounds for a pair of states");
  compute->add_option("rho", rho_path, "JSON matrix file for rho")->required();
  compute->add_option("sigma", sigma_path, "JSON matrix file for sigma")->required();
  compute->add_flag("--csv", csv, "Print one CSV row instead of JSON");
  compute->add_option("--norm", norms, "Extra norm kinds: trace, operator, kyfan:k, schatten:q");

  int which = 1;
  std::string figure_out;
  auto* figure = app.add_subcommand("figure", "Write figure data as CSV");
  figure->add_option("--which", which, "Figure number")->required()->check(CLI::Range(1, 3));
  figure->add_option("--out", figure_out, "Output CSV path")->required();

  SuiteConfig cfg;
  std::string dims_text = "2,3,4,5";
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run the randomized verification suite");
  verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples_per_case, "Samples per property and dimension")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--dims", dims_text, "Comma separated dimensions")->capture_default_str();
  verify->add_option("--slack", cfg.slack, "Inequality slack")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--property", cfg.properties, "Run only these properties");
  verify->add_option("--out", verify_out, "Write the report here instead of stdout");
  bool list = false;
  verify->add_flag("--list", list, "List property names and exit");

  std::string replay_property, replay_case;
  double replay_slack = 1e-9;
  auto* replay_cmd = app.add_subcommand("replay", "Re-evaluate one recorded case");
  replay_cmd->add_option("--property", replay_property, "Property name")->required();
  replay_cmd->add_option("--case", replay_case, "JSON file with the case")->required();
  replay_cmd->add_option("--slack", replay_slack, "Inequality slack")->capture_default_str();

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Export a witness state pair as JSON files");
  witness->add_option("--kind", wa.kind, "lower or upper")
      ->capture_default_str()
      ->check(CLI::IsMember({"lower", "upper"}));
  witness->add_option("--x", wa.x, "Rescaled distance (lower)");
  witness->add_option("--T", wa.t, "Half trace distance (upper)");
  witness->add_option("--beta", wa.beta, "Smallest eigenvalue of sigma (upper)");
  witness->add_option("--dim", wa.dim, "Dimension")->capture_default_str();
  witness->add_option("--J", wa.j, "Block size J for T > beta (default: smallest feasible)");
  witness->add_option("--out", wa.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*verify) cfg.dims = parse_dims(dims_text);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(rho_path, sigma_path, csv, norms);
    if (*figure) return cmd_figure(which, figure_out);
    if (*verify) {
      if (list) {
        for (const std::string& n : property_names()) std::cout << n << '\n';
        return 0;
      }
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << '\n' << verify->help();
        return kExitUsage;
      }
      return cmd_verify(cfg, verify_out);
    }
    if (*replay_cmd) return cmd_replay(replay_property, replay_case, replay_slack);
    if (*witness) return cmd_witness(wa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
