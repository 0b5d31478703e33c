#include "qrebound/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qrebound/bounds.hpp"
#include "qrebound/entropy.hpp"
#include "qrebound/witnesses.hpp"

namespace qrebound {

namespace {

using Rng = std::mt19937_64;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxWitnesses = 10;

enum class Scope { PerDim, Scalar, Grid };

// Slack: violation iff margin < −min(slack, nominal).
// Absolute: the allowance is part of the margin; violation iff margin < 0.
// Strict: violation iff margin ≤ 0.
enum class Tolerance { Slack, Absolute, Strict };

struct CaseContext {
  int dim;
  long index;
  const SuiteConfig& cfg;
};

struct Property {
  std::string name;
  Scope scope;
  Tolerance tolerance;
  double nominal;
  int min_dim;
  long grid_size;
  std::function<Json(Rng&, const CaseContext&)> generate;
  std::function<double(const Json&)> evaluate;
  // A published claim that does not hold: violations are reported as
  // counterexamples and do not count against the verdict.
  bool refuted = false;
  int max_dim = 0;  // 0: no limit
};

// ---------------------------------------------------------------- sampling

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

double log_uniform(Rng& rng, double a, double b) {
  return std::exp(uniform(rng, std::log(a), std::log(b)));
}

DensityMatrix ginibre(Rng& rng, int d) { return random_density(d, rng()); }

DensityMatrix random_pure(Rng& rng, int d) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(normal(rng), normal(rng));
  return pure_state(v);
}

// σ with λ_min ≥ β, β log-uniform on [1e-6, 1/d].
DensityMatrix floored_sigma(Rng& rng, int d) {
  const double beta = log_uniform(rng, 1e-6, 1.0 / d);
  return random_density_min_eig(d, beta, rng());
}

DensityMatrix well_conditioned(Rng& rng, int d) {
  return random_density_min_eig(d, 0.05 / d, rng());
}

// Rank d−1 state in a random basis.
DensityMatrix rank_deficient(Rng& rng, int d) {
  const DensityMatrix base = ginibre(rng, d - 1);
  ComplexMatrix padded = ComplexMatrix::Zero(d, d);
  padded.topLeftCorner(d - 1, d - 1) = base.matrix().matrix();
  const ComplexMatrix u = random_unitary(d, rng);
  return DensityMatrix(HermitianMatrix::from_hermitian_part(u * padded * u.adjoint()));
}

// Mixture of regimes: generic, close to σ, pure, and equal to σ.
DensityMatrix sample_rho(Rng& rng, const DensityMatrix& sigma) {
  const int d = sigma.dim();
  const double u = uniform(rng, 0.0, 1.0);
  if (u < 0.4) return ginibre(rng, d);
  if (u < 0.75) {
    const double t = std::pow(uniform(rng, 0.0, 1.0), 2.0);
    return mix(ginibre(rng, d), sigma, t);
  }
  if (u < 0.95) return random_pure(rng, d);
  return sigma;
}

HermitianMatrix traceless(const HermitianMatrix& a) {
  return a - HermitianMatrix::identity(a.dim()) * (a.trace() / a.dim());
}

Json kinds_for(const SuiteConfig& cfg, int d) {
  Json out = Json::array();
  for (const NormKind& k : cfg.norm_kinds)
    if (k.family() != NormKind::Family::KyFan || k.k() <= d) out.push_back(k.to_string());
  return out;
}

std::vector<NormKind> parse_kinds(const Json& j) {
  std::vector<NormKind> out;
  for (const Json& s : j) out.push_back(NormKind::parse(s.get<std::string>()));
  return out;
}

Json pair_case(int d, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return Json{{"dim", d}, {"rho", matrix_to_json(rho.matrix())},
              {"sigma", matrix_to_json(sigma.matrix())}};
}

Json generic_pair(Rng& rng, const CaseContext& c) {
  const DensityMatrix sigma = floored_sigma(rng, c.dim);
  return pair_case(c.dim, sample_rho(rng, sigma), sigma);
}

Json free_pair(Rng& rng, const CaseContext& c) {
  const double u = uniform(rng, 0.0, 1.0);
  if (u < 0.25) return pair_case(c.dim, random_pure(rng, c.dim), random_pure(rng, c.dim));
  const DensityMatrix sigma = u < 0.5 ? rank_deficient(rng, c.dim) : ginibre(rng, c.dim);
  return pair_case(c.dim, sample_rho(rng, sigma), sigma);
}

DensityMatrix rho_of(const Json& j) { return density_from_json(j.at("rho")); }
DensityMatrix sigma_of(const Json& j) { return density_from_json(j.at("sigma")); }

double entropy_value(const ExtendedReal& s) { return s.is_infinite() ? kInf : s.value(); }

// Margin of lo ≤ hi with +∞ handled: ∞ ≤ ∞ holds.
double gap(double lo, double hi) {
  if (std::isinf(hi) && hi > 0) return kInf;
  return hi - lo;
}

// --------------------------------------------------------------- properties

std::vector<Property> build_properties() {
  std::vector<Property> ps;
  auto add = [&ps](Property p) { ps.push_back(std::move(p)); };

  // Norms -------------------------------------------------------------
  auto hermitian_case = [](bool zero_trace, bool with_b) {
    return [zero_trace, with_b](Rng& rng, const CaseContext& c) {
      HermitianMatrix a = random_hermitian(c.dim, rng);
      if (zero_trace) a = traceless(a);
      Json j{{"dim", c.dim}, {"A", matrix_to_json(a)}, {"kinds", kinds_for(c.cfg, c.dim)}};
      if (with_b) j["B"] = matrix_to_json(random_hermitian(c.dim, rng));
      return j;
    };
  };

  add({"norm_unitary_invariance", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         return Json{{"dim", c.dim},
                     {"A", matrix_to_json(random_hermitian(c.dim, rng))},
                     {"U", matrix_to_json(random_unitary(c.dim, rng))},
                     {"kinds", kinds_for(c.cfg, c.dim)}};
       },
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const ComplexMatrix u = complex_matrix_from_json(j.at("U"));
         const HermitianMatrix b =
             HermitianMatrix::from_hermitian_part(u * a.matrix() * u.adjoint());
         double worst = 0.0;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           worst = std::max(worst, std::abs(norm(b, k) - norm(a, k)));
         return -worst;
       }});

  add({"norm_triangle", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, hermitian_case(false, true),
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const HermitianMatrix b = hermitian_from_json(j.at("B"));
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           m = std::min(m, norm(a, k) + norm(b, k) - norm(a + b, k));
         return m;
       }});

  add({"norm_homogeneity", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         return Json{{"dim", c.dim},
                     {"A", matrix_to_json(random_hermitian(c.dim, rng))},
                     {"c", uniform(rng, -3.0, 3.0)},
                     {"kinds", kinds_for(c.cfg, c.dim)}};
       },
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const double s = j.at("c").get<double>();
         double worst = 0.0;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           worst = std::max(worst, std::abs(norm(a * s, k) - std::abs(s) * norm(a, k)));
         return -worst;
       }});

  add({"kyfan_monotone", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       hermitian_case(false, false), [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const RealVector s = singular_values(a);
         double m = kInf;
         for (int k = 1; k < a.dim(); ++k)
           m = std::min(m, norm_of_singular_values(s, NormKind::ky_fan(k + 1)) -
                               norm_of_singular_values(s, NormKind::ky_fan(k)));
         return m;
       }});

  add({"ui_norm_vs_E", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       hermitian_case(false, false), [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const HermitianMatrix e = special_E(a.dim());
         const double op = norm(a, NormKind::operator_norm());
         const double tr = norm(a, NormKind::trace());
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds"))) {
           const double r = norm(a, k) / norm(e, k);
           m = std::min({m, r - op, tr - r});
         }
         return m;
       }});

  auto dom_ratios = [](const HermitianMatrix& a, const NormKind& k) {
    const int d = a.dim();
    return std::array<double, 3>{
        norm(a, NormKind::operator_norm()) / norm_of_F(d, NormKind::operator_norm()),
        norm(a, k) / norm_of_F(d, k),
        norm(a, NormKind::trace()) / norm_of_F(d, NormKind::trace())};
  };

  add({"dominance_upper", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       hermitian_case(true, false), [dom_ratios](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds"))) {
           const auto r = dom_ratios(a, k);
           m = std::min(m, r[2] - r[1]);
         }
         return m;
       }});

  // ‖A‖∞/‖F‖∞ ≤ |||A|||/|||F|||. Fails for d ≥ 3 with Ky Fan k ≥ 2 or
  // Schatten q > 1, e.g. A = Diag(2, −1, −1).
  add({"dominance_lower", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       hermitian_case(true, false), [dom_ratios](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds"))) {
           const auto r = dom_ratios(a, k);
           m = std::min(m, r[1] - r[0]);
         }
         return m;
       }});
  ps.back().refuted = true;

  add({"trace_vs_operator", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0, hermitian_case(true, false),
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         return norm(a, NormKind::trace()) - 2.0 * norm(a, NormKind::operator_norm());
       }});

  add({"rescaled_distance_max", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         Json j = generic_pair(rng, c);
         j["kinds"] = kinds_for(c.cfg, c.dim);
         return j;
       },
       [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         const double beta = std::max(0.0, sigma.min_eigenvalue());
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           m = std::min(m, 1.0 - beta - rescaled_distance(rho, sigma, k));
         return m;
       }});

  add({"pure_state_distance", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         std::normal_distribution<double> normal(0.0, 1.0);
         ComplexVector psi(c.dim), phi(c.dim);
         for (int i = 0; i < c.dim; ++i) {
           psi(i) = Complex(normal(rng), normal(rng));
           phi(i) = Complex(normal(rng), normal(rng));
         }
         Json re_psi = Json::array(), im_psi = Json::array();
         Json re_phi = Json::array(), im_phi = Json::array();
         for (int i = 0; i < c.dim; ++i) {
           re_psi.push_back(psi(i).real());
           im_psi.push_back(psi(i).imag());
           re_phi.push_back(phi(i).real());
           im_phi.push_back(phi(i).imag());
         }
         return Json{{"dim", c.dim},
                     {"psi", {{"re", re_psi}, {"im", im_psi}}},
                     {"phi", {{"re", re_phi}, {"im", im_phi}}},
                     {"kinds", kinds_for(c.cfg, c.dim)}};
       },
       [](const Json& j) {
         const int d = j.at("dim").get<int>();
         auto vec = [d](const Json& v) {
           ComplexVector out(d);
           for (int i = 0; i < d; ++i)
             out(i) = Complex(v.at("re").at(i).get<double>(), v.at("im").at(i).get<double>());
           return out;
         };
         const ComplexVector psi = vec(j.at("psi")), phi = vec(j.at("phi"));
         const double overlap2 =
             std::norm(psi.dot(phi)) / (psi.squaredNorm() * phi.squaredNorm());
         const double expected = std::sqrt(std::max(0.0, 1.0 - overlap2));
         const DensityMatrix a = pure_state(psi), b = pure_state(phi);
         double worst = 0.0;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           worst = std::max(worst, std::abs(rescaled_distance(a, b, k) - expected));
         return -worst;
       }});

  add({"jordan_decomposition", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       hermitian_case(true, false), [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A"));
         const JordanParts p = jordan_decompose(a);
         const double recon =
             (a.matrix() - p.pos.matrix() + p.neg.matrix()).cwiseAbs().maxCoeff();
         const double ortho = (p.pos.matrix() * p.neg.matrix()).cwiseAbs().maxCoeff();
         const double neg_pos = std::max(0.0, -eig_hermitian(p.pos).min_eigenvalue());
         const double neg_neg = std::max(0.0, -eig_hermitian(p.neg).min_eigenvalue());
         return -std::max({recon, ortho, neg_pos, neg_neg});
       }});

  // Entropy -----------------------------------------------------------
  add({"klein", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         const DensityMatrix sigma = floored_sigma(rng, c.dim);
         const bool equal = uniform(rng, 0.0, 1.0) < 0.2;
         Json j = pair_case(c.dim, equal ? sigma : sample_rho(rng, sigma), sigma);
         j["equal"] = equal;
         return j;
       },
       [](const Json& j) {
         const double s = entropy_value(relative_entropy(rho_of(j), sigma_of(j)));
         return j.at("equal").get<bool>() ? -std::abs(s) : s;
       }});

  add({"joint_convexity", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         const DensityMatrix b1 = floored_sigma(rng, c.dim), b2 = floored_sigma(rng, c.dim);
         const DensityMatrix a1 = sample_rho(rng, b1), a2 = sample_rho(rng, b2);
         return Json{{"dim", c.dim}, {"A1", matrix_to_json(a1.matrix())},
                     {"B1", matrix_to_json(b1.matrix())}, {"A2", matrix_to_json(a2.matrix())},
                     {"B2", matrix_to_json(b2.matrix())}, {"t", uniform(rng, 0.0, 1.0)}};
       },
       [](const Json& j) {
         const HermitianMatrix a1 = hermitian_from_json(j.at("A1")),
                               b1 = hermitian_from_json(j.at("B1")),
                               a2 = hermitian_from_json(j.at("A2")),
                               b2 = hermitian_from_json(j.at("B2"));
         const double t = j.at("t").get<double>();
         const double lhs =
             entropy_value(relative_entropy(a1 * t + a2 * (1.0 - t), b1 * t + b2 * (1.0 - t)));
         const double rhs = t * entropy_value(relative_entropy(a1, b1)) +
                            (1.0 - t) * entropy_value(relative_entropy(a2, b2));
         return gap(lhs, rhs);
       }});

  add({"scaling", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         Json j = generic_pair(rng, c);
         j["a"] = log_uniform(rng, 0.1, 10.0);
         return j;
       },
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("rho")),
                               b = hermitian_from_json(j.at("sigma"));
         const double s = j.at("a").get<double>();
         const double scaled = relative_entropy(a * s, b * s).value();
         return -std::abs(scaled - s * relative_entropy(a, b).value());
       }});

  add({"common_addend", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         const DensityMatrix b = floored_sigma(rng, c.dim);
         const DensityMatrix a = sample_rho(rng, b);
         const DensityMatrix cc = uniform(rng, 0.0, 1.0) < 0.3 ? random_pure(rng, c.dim)
                                                              : ginibre(rng, c.dim);
         return Json{{"dim", c.dim},
                     {"A", matrix_to_json(a.matrix() * uniform(rng, 0.1, 2.0))},
                     {"B", matrix_to_json(b.matrix() * uniform(rng, 0.1, 2.0))},
                     {"C", matrix_to_json(cc.matrix() * uniform(rng, 0.1, 2.0))}};
       },
       [](const Json& j) {
         const HermitianMatrix a = hermitian_from_json(j.at("A")),
                               b = hermitian_from_json(j.at("B")),
                               c = hermitian_from_json(j.at("C"));
         return gap(entropy_value(relative_entropy(a + c, b + c)),
                    entropy_value(relative_entropy(a, b)));
       }});

  add({"pinching", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, generic_pair, [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         const double pinched = entropy_value(
             relative_entropy(rho.matrix().diagonal_part(), sigma.matrix().diagonal_part()));
         return gap(pinched, entropy_value(relative_entropy(rho, sigma)));
       }});

  add({"gradient_fd", Scope::PerDim, Tolerance::Absolute, 0.0, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         const DensityMatrix rho = well_conditioned(rng, c.dim);
         const DensityMatrix sigma = well_conditioned(rng, c.dim);
         const HermitianMatrix delta =
             (ginibre(rng, c.dim).matrix() - ginibre(rng, c.dim).matrix()) * 0.1;
         Json j = pair_case(c.dim, rho, sigma);
         j["delta"] = matrix_to_json(delta);
         j["eps"] = 1e-5;
         return j;
       },
       [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         const HermitianMatrix delta = hermitian_from_json(j.at("delta"));
         const double eps = j.at("eps").get<double>();
         const double up = relative_entropy(rho.matrix() + delta * eps, sigma.matrix()).value();
         const double down = relative_entropy(rho.matrix() - delta * eps, sigma.matrix()).value();
         const double fd = (up - down) / (2.0 * eps);
         const double dir = trace_product(delta, relative_entropy_gradient(rho, sigma));
         return 1e-6 * (1.0 + std::abs(dir)) - std::abs(fd - dir);
       }});

  add({"fidelity_sandwich", Scope::PerDim, Tolerance::Slack, 1e-10, 2, 0, free_pair,
       [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         const double f = fidelity(rho, sigma);
         const double t = trace_distance_half(rho, sigma);
         // Upper half squared: √(1−F²) loses all precision once 1−F nears
         // rounding level, 1−F² − T² does not.
         return std::min(t - (1.0 - f), (1.0 - f * f) - t * t);
       }});

  // Bounds ------------------------------------------------------------
  add({"sharp_lower", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         Json j = generic_pair(rng, c);
         j["kinds"] = kinds_for(c.cfg, c.dim);
         return j;
       },
       [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         const double exact = entropy_value(relative_entropy(rho, sigma));
         double m = kInf;
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           m = std::min(m, gap(lower_bound_sharp(rho, sigma, k), exact));
         return m;
       }});

  auto pair_bound = [&add](std::string name, bool upper,
                           std::function<double(const DensityMatrix&, const DensityMatrix&)> f) {
    add({std::move(name), Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, generic_pair,
         [upper, f](const Json& j) {
           const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
           const double exact = entropy_value(relative_entropy(rho, sigma));
           const double b = f(rho, sigma);
           return upper ? gap(exact, b) : gap(b, exact);
         }});
  };
  pair_bound("pinsker_lower", false, lower_bound_pinsker);
  pair_bound("upper_quadratic", true, upper_bound_quadratic);
  pair_bound("upper_log", true, upper_bound_log);
  pair_bound("upper_brat", true, upper_bound_brat);
  pair_bound("upper_minus_log_beta", true,
             [](const DensityMatrix&, const DensityMatrix& s) { return upper_bound_minus_log_beta(s); });
  add({"upper_sharp", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, generic_pair,
       [](const Json& j) {
         const BoundReport r = bound_report(rho_of(j), sigma_of(j));
         if (r.sharp_status == SharpStatus::Refuted) return kInf;
         return gap(entropy_value(r.exact), r.upper_sharp);
       }});

  // The d = 2 closed form for T > β. Pure ρ against σ = Diag(β, 1−β) in a
  // rotated basis exceeds it.
  add({"upper_sharp_d2_high", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, generic_pair,
       [](const Json& j) {
         const BoundReport r = bound_report(rho_of(j), sigma_of(j));
         if (r.sharp_status != SharpStatus::Refuted) return kInf;
         return gap(entropy_value(r.exact), r.upper_sharp);
       }});
  ps.back().refuted = true;
  ps.back().max_dim = 2;

  add({"bound_report_sandwich", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         if (uniform(rng, 0.0, 1.0) < 0.1) {
           const DensityMatrix sigma = rank_deficient(rng, c.dim);
           return pair_case(c.dim, ginibre(rng, c.dim), sigma);
         }
         return generic_pair(rng, c);
       },
       [](const Json& j) {
         const BoundReport r = bound_report(rho_of(j), sigma_of(j));
         const double exact = entropy_value(r.exact);
         double m = kInf;
         for (const auto& [name, lo] : r.lowers()) m = std::min(m, gap(lo, exact));
         for (const auto& [name, up] : r.uppers()) m = std::min(m, gap(exact, up));
         return m;
       }});

  add({"fannes", Scope::PerDim, Tolerance::Slack, 1e-9, 2, 0, free_pair, [](const Json& j) {
         const DensityMatrix rho = rho_of(j), sigma = sigma_of(j);
         return fannes_bound(rho, sigma) -
                std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
       }});

  // s(x) ----------------------------------------------------------------
  add({"s_monotone", Scope::Grid, Tolerance::Slack, 1e-9, 0, 1000,
       [](Rng&, const CaseContext& c) {
         const double step = 0.999 / 1000.0;
         return Json{{"x1", c.index * step}, {"x2", (c.index + 1) * step}};
       },
       [](const Json& j) { return s_of_x(j.at("x2").get<double>()) - s_of_x(j.at("x1").get<double>()); }});

  add({"s_below_minus_log", Scope::Scalar, Tolerance::Slack, 1e-9, 0, 0,
       [](Rng& rng, const CaseContext&) { return Json{{"x", uniform(rng, 0.0, 0.999)}}; },
       [](const Json& j) {
         const double x = j.at("x").get<double>();
         return -std::log1p(-x) - s_of_x(x);
       }});

  add({"s_above_quadratic", Scope::Scalar, Tolerance::Slack, 1e-9, 0, 0,
       [](Rng& rng, const CaseContext&) { return Json{{"x", uniform(rng, 0.0, 0.99)}}; },
       [](const Json& j) {
         const double x = j.at("x").get<double>();
         return s_of_x(x) - 2.0 * x * x;
       }});

  add({"s_series", Scope::Scalar, Tolerance::Absolute, 0.0, 0, 0,
       [](Rng& rng, const CaseContext&) { return Json{{"x", uniform(rng, 0.01, 0.2)}}; },
       [](const Json& j) {
         const double x = j.at("x").get<double>();
         const double x2 = x * x;
         const double series = 2.0 * x2 + (4.0 / 9.0) * x2 * x2 + (32.0 / 135.0) * x2 * x2 * x2;
         return 10.0 * x2 * x2 * x2 * x2 - std::abs(s_of_x(x) - series);
       }});

  add({"s_quadratic_relative_error", Scope::Grid, Tolerance::Absolute, 0.0, 0, 500,
       [](Rng&, const CaseContext& c) { return Json{{"x", (c.index + 1) * 1e-3}}; },
       [](const Json& j) {
         const double x = j.at("x").get<double>();
         const double s = s_of_x(x);
         return 0.065 - std::abs(s - 2.0 * x * x) / s;
       }});

  add({"d2_branch_continuity", Scope::Scalar, Tolerance::Slack, 1e-12, 0, 0,
       [](Rng& rng, const CaseContext&) { return Json{{"beta", uniform(rng, 1e-6, 0.5)}}; },
       [](const Json& j) {
         const double b = j.at("beta").get<double>();
         const double high = std::max(branches::d2_high_e1(b, b), branches::d2_high_e2(b, b));
         return -std::abs(branches::d2_low(b, b) - high);
       }});

  add({"dgt2_branch_continuity", Scope::Scalar, Tolerance::Slack, 1e-12, 0, 0,
       [](Rng& rng, const CaseContext&) { return Json{{"beta", uniform(rng, 1e-6, 0.5)}}; },
       [](const Json& j) {
         const double b = j.at("beta").get<double>();
         return -std::abs(branches::dgt2_low(b, b) - branches::dgt2_high(b, b));
       }});

  add({"d2_below_dgt2", Scope::Scalar, Tolerance::Slack, 1e-12, 0, 0,
       [](Rng& rng, const CaseContext&) {
         const double beta = uniform(rng, 1e-6, 0.5);
         return Json{{"beta", beta}, {"T", uniform(rng, 0.0, 1.0 - beta)}};
       },
       [](const Json& j) {
         const double b = j.at("beta").get<double>(), t = j.at("T").get<double>();
         return upper_bound_sharp_dgt2(t, b) - upper_bound_sharp_d2(t, b);
       }});

  // Witnesses -----------------------------------------------------------
  add({"witness_lower_saturation", Scope::PerDim, Tolerance::Slack, 1e-12, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         return Json{{"dim", c.dim}, {"x", uniform(rng, 0.0, 0.99)}, {"kinds", kinds_for(c.cfg, c.dim)}};
       },
       [](const Json& j) {
         const double x = j.at("x").get<double>();
         const StatePair p = witness_lower(x, j.at("dim").get<int>());
         double worst = std::abs(relative_entropy(p.rho, p.sigma).value() - s_of_x(x));
         for (const NormKind& k : parse_kinds(j.at("kinds")))
           worst = std::max(worst, std::abs(rescaled_distance(p.rho, p.sigma, k) - x));
         return -worst;
       }});

  add({"witness_upper_le_saturation", Scope::PerDim, Tolerance::Slack, 1e-12, 3, 0,
       [](Rng& rng, const CaseContext& c) {
         const double beta = uniform(rng, 1e-4, 1.0 / c.dim);
         return Json{{"dim", c.dim}, {"beta", beta}, {"T", uniform(rng, 0.0, beta)}};
       },
       [](const Json& j) {
         const double b = j.at("beta").get<double>(), t = j.at("T").get<double>();
         const StatePair p = witness_upper_T_le_beta(t, b, j.at("dim").get<int>());
         const BoundReport r = bound_report(p.rho, p.sigma);
         return -std::max({std::abs(r.exact.value() - branches::dgt2_low(t, b)),
                           std::abs(r.upper_sharp - r.exact.value()),
                           std::abs(r.t_trace_full - 2.0 * t), std::abs(r.beta - b)});
       }});

  add({"witness_upper_gt_saturation", Scope::PerDim, Tolerance::Slack, 1e-12, 3, 0,
       [](Rng& rng, const CaseContext& c) {
         const int d = c.dim;
         const double beta = uniform(rng, 1e-4, 1.0 / d);
         const double t = uniform(rng, beta, 1.0 - 2.0 * beta);
         const int j_min = std::max(0, static_cast<int>(std::ceil(d - 1 - (1.0 - t) / beta - 1e-12)));
         return Json{{"dim", d}, {"beta", beta}, {"T", t}, {"J", j_min}};
       },
       [](const Json& j) {
         const double b = j.at("beta").get<double>(), t = j.at("T").get<double>();
         const StatePair p =
             witness_upper_T_gt_beta(t, b, j.at("dim").get<int>(), j.at("J").get<int>());
         const BoundReport r = bound_report(p.rho, p.sigma);
         double err = std::max(std::abs(r.exact.value() - (t + b) * std::log((t + b) / b)),
                               std::abs(r.t_trace_full - 2.0 * t));
         // λ_min(σ) = β, and so saturation, needs T − Jβ ≥ β.
         if ((j.at("J").get<int>() + 1) * b <= t)
           err = std::max({err, std::abs(r.upper_sharp - r.exact.value()), std::abs(r.beta - b)});
         return -err;
       }});

  add({"counterexample_positive", Scope::Grid, Tolerance::Strict, 0.0, 0, 100,
       [](Rng&, const CaseContext& c) {
         static constexpr double kListed[] = {1.0, 10.0, 100.0, 1000.0};
         const double r =
             c.index < 4 ? kListed[c.index] : std::pow(10.0, -1.0 + 5.0 * (c.index - 4) / 95.0);
         return Json{{"r", r}};
       },
       [](const Json& j) { return counterexample_bad_bound(j.at("r").get<double>()).margin; }});

  add({"extremal_psi_d2", Scope::Grid, Tolerance::Absolute, 0.0, 0, 400,
       [](Rng&, const CaseContext& c) {
         const double beta = 0.5 * (c.index / 20 + 1) / 20.0;
         const double t = (1.0 - beta) * (c.index % 20) / 19.0;
         return Json{{"beta", beta}, {"T", t}, {"grid", 1000}};
       },
       [](const Json& j) {
         const ExtremalPsiCheck c = extremal_psi_check_d2(
             j.at("T").get<double>(), j.at("beta").get<double>(), j.at("grid").get<int>());
         return std::min(1e-12 - c.interior_excess,
                         1e-9 - std::abs(std::max(c.endpoint_e1, c.endpoint_e2) - c.bound));
       }});

  add({"second_derivative", Scope::PerDim, Tolerance::Absolute, 0.0, 2, 0,
       [](Rng& rng, const CaseContext& c) {
         const DensityMatrix sigma = uniform(rng, 0.0, 1.0) < 0.25
                                         ? DensityMatrix::maximally_mixed(c.dim)
                                         : well_conditioned(rng, c.dim);
         const HermitianMatrix delta =
             (ginibre(rng, c.dim).matrix() - ginibre(rng, c.dim).matrix()) * 0.1;
         return Json{{"dim", c.dim}, {"sigma", matrix_to_json(sigma.matrix())},
                     {"delta", matrix_to_json(delta)}};
       },
       [](const Json& j) {
         const SecondDerivativeCheck c =
             second_derivative_check(sigma_of(j), StateDelta(hermitian_from_json(j.at("delta"))));
         double m = std::min(c.closed_form + 1e-6 - c.finite_difference,
                             c.quadratic_curvature + 1e-6 - c.closed_form);
         if (c.maximally_mixed) m = std::min(m, 1e-6 - std::abs(c.finite_difference - c.closed_form));
         return m;
       }});

  return ps;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> ps = build_properties();
  return ps;
}

const Property& find_property(const std::string& name) {
  for (const Property& p : properties())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown property '" + name + "'");
}

double tolerance_for(const Property& p, double slack) {
  return p.tolerance == Tolerance::Slack ? std::min(slack, p.nominal) : 0.0;
}

bool violated(const Property& p, double margin, double tol) {
  if (p.tolerance == Tolerance::Strict) return !(margin > 0.0);
  return !(margin >= -tol);
}

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::PerDim:
      return "per-dim";
    case Scope::Scalar:
      return "scalar";
    case Scope::Grid:
      return "grid";
  }
  return "?";
}

Json margin_json(double m) {
  if (std::isnan(m)) return "nan";
  if (std::isinf(m)) return m > 0 ? "+inf" : "-inf";
  return m;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json make_case(const Property& p, const SuiteConfig& cfg, int dim, long index) {
  Rng rng(sample_seed(cfg.seed, p.name, dim, index));
  return p.generate(rng, CaseContext{dim, index, cfg});
}

}  // namespace

std::vector<NormKind> default_norm_kinds() {
  return {NormKind::trace(),      NormKind::operator_norm(), NormKind::schatten(1.5),
          NormKind::schatten(2.0), NormKind::schatten(3.0),   NormKind::ky_fan(1),
          NormKind::ky_fan(2),    NormKind::ky_fan(3),       NormKind::ky_fan(4),
          NormKind::ky_fan(5)};
}

void SuiteConfig::validate() const {
  if (samples_per_case < 1) throw std::invalid_argument("samples_per_case must be >= 1");
  if (!(slack >= 0.0)) throw std::invalid_argument("slack must be >= 0");
  if (dims.empty()) throw std::invalid_argument("dims must not be empty");
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("dims must all be >= 2");
  for (const std::string& name : properties) find_property(name);
}

Json SuiteConfig::to_json() const {
  Json kinds = Json::array();
  for (const NormKind& k : norm_kinds) kinds.push_back(k.to_string());
  Json j{{"seed", seed}, {"samples_per_case", samples_per_case}, {"dims", dims},
         {"slack", slack}, {"norm_kinds", kinds}};
  if (!properties.empty()) j["properties"] = properties;
  return j;
}

std::uint64_t sample_seed(std::uint64_t seed, const std::string& property, int dim, long index) {
  std::uint64_t h = splitmix64(seed ^ fnv1a(property));
  h = splitmix64(h ^ static_cast<std::uint64_t>(dim));
  return splitmix64(h ^ static_cast<std::uint64_t>(index));
}

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const Property& p : properties()) out.push_back(p.name);
  return out;
}

Json generate_case(const std::string& property, const SuiteConfig& cfg, int dim, long index) {
  return make_case(find_property(property), cfg, dim, index);
}

ReplayRecord replay(const std::string& property, const Json& case_input, double slack) {
  const Property& p = find_property(property);
  ReplayRecord r;
  r.property = property;
  r.tolerance = tolerance_for(p, slack);
  try {
    r.margin = p.evaluate(case_input);
  } catch (const std::exception& e) {
    r.margin = std::numeric_limits<double>::quiet_NaN();
    r.error = e.what();
  }
  r.violated = violated(p, r.margin, r.tolerance);
  return r;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  SuiteReport report;
  report.config = cfg;

  for (const Property& p : properties()) {
    if (!cfg.properties.empty() &&
        std::find(cfg.properties.begin(), cfg.properties.end(), p.name) == cfg.properties.end())
      continue;

    PropertyRecord rec;
    rec.name = p.name;
    rec.scope = scope_name(p.scope);
    rec.tolerance = tolerance_for(p, cfg.slack);
    rec.refuted = p.refuted;
    rec.worst_margin = kInf;

    std::vector<std::pair<int, long>> plan;  // (dim, count)
    switch (p.scope) {
      case Scope::PerDim:
        for (int d : cfg.dims)
          if (d >= p.min_dim && (p.max_dim == 0 || d <= p.max_dim))
            plan.emplace_back(d, cfg.samples_per_case);
        break;
      case Scope::Scalar:
        plan.emplace_back(0, cfg.samples_per_case);
        break;
      case Scope::Grid:
        plan.emplace_back(0, p.grid_size);
        break;
    }

    for (const auto& [dim, count] : plan) {
      for (long i = 0; i < count; ++i) {
        const Json c = make_case(p, cfg, dim, i);
        const ReplayRecord r = replay(p.name, c, cfg.slack);
        ++rec.samples;
        const bool worse = std::isnan(r.margin) ? !std::isnan(rec.worst_margin)
                                                 : r.margin < rec.worst_margin;
        if (worse || rec.worst_input.is_null()) {
          rec.worst_margin = r.margin;
          rec.worst_input = Json{{"dim", dim}, {"index", i}, {"case", c}};
        }
        if (r.violated) {
          ++rec.violations;
          if (static_cast<int>(rec.witnesses.size()) < kMaxWitnesses) {
            Json w{{"dim", dim}, {"index", i}, {"margin", margin_json(r.margin)}, {"case", c}};
            if (!r.error.empty()) w["error"] = r.error;
            rec.witnesses.push_back(std::move(w));
          }
        }
      }
    }
    report.total_samples += rec.samples;
    if (rec.refuted) report.counterexamples += rec.violations;
    else report.total_violations += rec.violations;
    report.properties.push_back(std::move(rec));
  }
  return report;
}

const PropertyRecord* SuiteReport::find(const std::string& name) const {
  for (const PropertyRecord& r : properties)
    if (r.name == name) return &r;
  return nullptr;
}

Json SuiteReport::to_json() const {
  Json props = Json::array();
  for (const PropertyRecord& r : properties) {
    Json j{{"name", r.name},
           {"scope", r.scope},
           {"samples", r.samples},
           {"violations", r.violations},
           {"tolerance", r.tolerance},
           {"worst_margin", margin_json(r.worst_margin)}};
    if (r.refuted) j["expectation"] = "refuted";
    if (r.violations > 0) {
      j["worst_input"] = r.worst_input;
      j["witnesses"] = r.witnesses;
    }
    props.push_back(std::move(j));
  }
  return Json{{"config", config.to_json()},
              {"properties", props},
              {"total_samples", total_samples},
              {"total_violations", total_violations},
              {"counterexamples_to_refuted", counterexamples},
              {"verdict", passed() ? "pass" : "fail"}};
}

}  // namespace qrebound
