// One PASS/FAIL line per acceptance criterion. Exit status is 0 when the set
// of failing criteria equals the --expect-fail list (empty by default).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrebound/bounds.hpp"
#include "qrebound/figures.hpp"
#include "qrebound/harness.hpp"
#include "qrebound/witnesses.hpp"

using namespace qrebound;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome series() {
  double worst = -INFINITY;
  for (double x : {0.01, 0.05, 0.1, 0.2}) {
    const double approx = 2 * x * x + 4.0 / 9 * std::pow(x, 4) + 32.0 / 135 * std::pow(x, 6);
    worst = std::max(worst, std::abs(s_of_x(x) - approx) / (10 * std::pow(x, 8)));
  }
  return {worst <= 1.0, "max |s - series| / 10x^8 = " + fmt(worst)};
}

Outcome quadratic_error() {
  double worst = 0.0;
  for (int i = 1; i <= 500; ++i) {
    const double x = i * 1e-3;
    const double s = s_of_x(x);
    worst = std::max(worst, std::abs(s - 2 * x * x) / s);
  }
  return {worst <= 0.065, "max relative error = " + fmt(worst)};
}

// Sums violations over the named properties, counting refuted ones too: the
// criterion asks about the published claims as stated.
Outcome suite_criterion(std::vector<std::string> props, long samples) {
  SuiteConfig cfg;
  cfg.samples_per_case = samples;
  cfg.properties = props;
  const SuiteReport r = run_suite(cfg);
  long bad = 0;
  std::string detail;
  for (const PropertyRecord& p : r.properties) {
    bad += p.violations;
    if (p.violations > 0)
      detail += p.name + " " + std::to_string(p.violations) + "/" + std::to_string(p.samples) +
                " (worst " + fmt(p.worst_margin) + ") ";
  }
  if (detail.empty()) detail = std::to_string(r.total_samples) + " samples, no violations";
  return {bad == 0, detail};
}

Outcome sharpness() {
  double worst = 0.0;
  auto check = [&worst](const StatePair& p, double t) {
    const BoundReport r = bound_report(p.rho, p.sigma);
    worst = std::max({worst, std::abs(r.exact.value() - r.upper_sharp),
                      std::abs(r.t_trace_full - 2 * t)});
  };
  for (double t : {0.05, 0.15, 0.3}) check(witness_upper_T_le_beta(t, 0.3, 3), t);
  for (int d : {3, 4})
    for (double t : {0.2, 0.5, 0.7}) check(witness_upper_T_gt_beta(t, 0.1, d, 0), t);
  return {worst <= 1e-12, "max deviation = " + fmt(worst)};
}

Outcome extremality() {
  int bad = 0;
  double excess = -INFINITY, mismatch = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double beta = 0.5 * (i + 1) / 20.0;
    for (int j = 0; j < 20; ++j) {
      const double t = (1.0 - beta) * j / 19.0;
      const ExtremalPsiCheck c = extremal_psi_check_d2(t, beta, 1000);
      excess = std::max(excess, c.interior_excess);
      mismatch = std::max(mismatch, std::abs(std::max(c.endpoint_e1, c.endpoint_e2) - c.bound));
      if (!c.passed()) ++bad;
    }
  }
  return {bad == 0, "interior excess " + fmt(excess) + ", endpoint mismatch " + fmt(mismatch)};
}

Outcome counterexample() {
  double least = INFINITY;
  for (double r : {1.0, 10.0, 100.0, 1000.0}) least = std::min(least, counterexample_bad_bound(r).margin);
  return {least > 0.0, "smallest margin = " + fmt(least)};
}

Outcome second_derivative() {
  double worst_eq = 0.0;
  bool ok = true;
  std::mt19937_64 rng(2024);
  for (int d : {2, 3, 4}) {
    for (int rep = 0; rep < 20; ++rep) {
      const StateDelta delta(
          (random_density(d, rng()).matrix() - random_density(d, rng()).matrix()) * 0.1);
      const SecondDerivativeCheck c =
          second_derivative_check(DensityMatrix::maximally_mixed(d), delta);
      worst_eq = std::max(worst_eq, std::abs(c.finite_difference - c.closed_form));
      ok &= c.equality;
    }
  }
  int generic_bad = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int d = 2 + rep % 4;
    const DensityMatrix sigma = random_density_min_eig(d, 0.05 / d, rng());
    const StateDelta delta(
        (random_density(d, rng()).matrix() - random_density(d, rng()).matrix()) * 0.1);
    if (!second_derivative_check(sigma, delta).bounded) ++generic_bad;
  }
  return {ok && generic_bad == 0, "|FD - form| at I/d <= " + fmt(worst_eq) + ", generic failures " +
                                      std::to_string(generic_bad) + "/1000"};
}

Outcome figures() {
  long bad = 0, rows = 0;
  const FigureTable f1 = figure1();
  for (const auto& r : f1.rows) {
    if (r[0] <= 0.0) continue;
    ++rows;
    if (!(r[2] <= r[1] && r[1] <= r[3])) ++bad;
  }
  for (double beta : kFigureBetas)
    for (const auto& r : figure3(beta).rows) {
      ++rows;
      if (!(r[2] <= r[1])) ++bad;
    }
  return {bad == 0, std::to_string(bad) + " of " + std::to_string(rows) + " rows out of order"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) {
    SuiteConfig cfg;
    cfg.samples_per_case = 200;
    const bool same = run_suite(cfg).to_json().dump() == run_suite(cfg).to_json().dump();
    return {same, "in-process, 200 samples"};
  }
  const fs::path dir = fs::temp_directory_path() / "qrebound_acceptance";
  fs::create_directories(dir);
  std::string outs[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = "\"" + cli + "\" verify --seed 42 --out \"" + out.string() + "\" 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "verify run " + std::to_string(i + 1) + " failed"};
    outs[i] = slurp(out);
  }
  fs::remove_all(dir);
  const bool same = !outs[0].empty() && outs[0] == outs[1];
  return {same, same ? std::to_string(outs[0].size()) + " identical bytes" : "reports differ"};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli = argv[++i];
    else if (a == "--expect-fail" && i + 1 < argc) expected = parse_list(argv[++i]);
    else {
      std::cerr << "usage: qrebound_acceptance [--cli PATH] [--expect-fail N,M,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"s(x) series", series},
      {"6.5% quadratic approximation", quadratic_error},
      {"sandwich suite",
       [] {
         return suite_criterion({"sharp_lower", "pinsker_lower", "upper_quadratic", "upper_log",
                                 "upper_brat", "upper_minus_log_beta", "upper_sharp",
                                 "upper_sharp_d2_high"},
                                10000);
       }},
      {"sharpness witnesses", sharpness},
      {"d=2 extremality", extremality},
      {"combined bound counterexample", counterexample},
      {"gradient", [] { return suite_criterion({"gradient_fd"}, 250); }},
      {"second derivative", second_derivative},
      {"norm inequalities",
       [] {
         return suite_criterion(
             {"ui_norm_vs_E", "dominance_upper", "dominance_lower", "trace_vs_operator", "rescaled_distance_max"},
             10000);
       }},
      {"figure data", figures},
      {"determinism", [&cli] { return determinism(cli); }},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(n);
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << n << ' ' << criteria[i].first << ": "
              << o.detail << (!o.pass && expected.count(n) ? " [expected]" : "") << std::endl;
  }
  if (failed != expected) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
