#pragma once

// Seeded randomized verification of the library's invariants. Each property
// draws independent cases from a per-sample generator seeded by
// (seed, property, dim, index); a case is a JSON object holding every input,
// so any recorded violation can be replayed on its own.

#include <cstdint>
#include <string>
#include <vector>

#include "qrebound/norms.hpp"
#include "qrebound/serialization.hpp"

namespace qrebound {

/// trace, operator, Schatten {1.5, 2, 3}, Ky Fan {1..5}. Ky Fan kinds with
/// k > d are skipped at dimension d.
std::vector<NormKind> default_norm_kinds();

struct SuiteConfig {
  std::uint64_t seed = 42;
  long samples_per_case = 10000;
  std::vector<int> dims{2, 3, 4, 5};
  double slack = 1e-9;
  std::vector<NormKind> norm_kinds = default_norm_kinds();
  std::vector<std::string> properties;  // empty: all

  /// std::invalid_argument unless samples ≥ 1, slack ≥ 0, dims ≥ 2 and every
  /// named property exists.
  void validate() const;
  Json to_json() const;
};

struct PropertyRecord {
  std::string name;
  std::string scope;  // "per-dim", "scalar" or "grid"
  bool refuted = false;  // checks a published claim known not to hold
  long samples = 0;
  long violations = 0;  // counterexamples, for refuted properties
  double tolerance = 0.0;
  double worst_margin = 0.0;
  Json worst_input;  // {"dim", "index", "case"} of the smallest margin
  Json witnesses = Json::array();  // first violating inputs, with margins
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PropertyRecord> properties;
  long total_samples = 0;
  long total_violations = 0;  // over properties that are expected to hold
  long counterexamples = 0;   // over refuted properties
  bool passed() const { return total_violations == 0; }
  const PropertyRecord* find(const std::string& name) const;
  Json to_json() const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

struct ReplayRecord {
  std::string property;
  double margin = 0.0;
  double tolerance = 0.0;
  bool violated = false;
  std::string error;  // set when evaluation threw
};

/// Re-evaluates one case. The margin is bit-identical to the one recorded by
/// run_suite for the same input. std::invalid_argument on an unknown name.
ReplayRecord replay(const std::string& property, const Json& case_input, double slack = 1e-9);

/// The case run_suite evaluates for (property, dim, index).
Json generate_case(const std::string& property, const SuiteConfig& cfg, int dim, long index);

std::vector<std::string> property_names();

/// splitmix64-derived seed for one sample.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& property, int dim, long index);

}  // namespace qrebound
