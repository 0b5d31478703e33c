#include "qrebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qrebound/minimize.hpp"

namespace qrebound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketClamp = 1e-15;
constexpr double kMinimizerTol = 1e-12;
// Rounding allowance when a measured T is checked against 1−β.
constexpr double kRangeTol = 1e-12;

// a·log1p(b) with the convention 0·log 0 = 0.
double xlog1p(double a, double b) {
  if (a == 0.0) return 0.0;
  return a * std::log1p(b);
}

double singular_beta(const DensityMatrix& sigma, const char* who) {
  const double beta = sigma.min_eigenvalue();
  if (!(beta > kDefaultSupportTol * sigma.spectrum().max_eigenvalue())) {
    std::ostringstream os;
    os.precision(17);
    os << who << ": sigma must be positive definite, smallest eigenvalue " << beta;
    throw std::domain_error(os.str());
  }
  return beta;
}

RealVector delta_singular_values(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("bounds: dimension mismatch");
  return singular_values(rho.matrix() - sigma.matrix());
}

void check_sharp_range(double t, double beta, double beta_max, const char* who) {
  if (!(beta >= 0.0) || beta > beta_max || !(t >= 0.0) || t > 1.0 - beta + kRangeTol) {
    std::ostringstream os;
    os << who << ": need 0 <= beta <= " << beta_max << " and 0 <= T <= 1 - beta, got T " << t
       << ", beta " << beta;
    throw std::invalid_argument(os.str());
  }
}

// Argument of s for a measured rescaled distance; 1 only occurs for
// orthogonal pure states.
double s_argument(double t) {
  return std::min(t, std::nextafter(1.0, 0.0));
}

}  // namespace

double binary_relative_entropy(double p, double q) {
  auto term = [](double a, double b) {
    if (a == 0.0) return 0.0;
    if (b == 0.0) return kInf;
    return a * std::log(a / b);
  };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

TwoLevelMinimum s_minimizer(double x) {
  if (!(x >= 0.0) || !(x < 1.0)) {
    std::ostringstream os;
    os << "s(x) is defined for 0 <= x < 1, got " << x;
    throw std::invalid_argument(os.str());
  }
  if (x == 0.0) return {0.5, 0.0};
  const double width = 1.0 - x;
  // r ↦ S((r+x, 1−r−x) ‖ (r, 1−r)) written with log1p for accuracy at small x.
  auto objective = [x](double r) {
    return xlog1p(r + x, x / r) + xlog1p(1.0 - r - x, -x / (1.0 - r));
  };
  const double clamp = std::min(kBracketClamp, 0.25 * width);
  const ScalarMinimum m =
      brent_minimize(objective, clamp, width - clamp, kMinimizerTol, 4.0 * std::numeric_limits<double>::epsilon());
  // As r → 1−x the objective tends to −log(1−x). For x near 1 the interior
  // minimum lies within exp(−x/(1−x)) of that end, closer than any double.
  const double edge = -std::log1p(-x);
  if (edge < m.fx) return {width, edge};
  return {m.x, std::max(0.0, m.fx)};
}

double s_of_x(double x) {
  return s_minimizer(x).value;
}

double lower_bound_sharp(const DensityMatrix& rho, const DensityMatrix& sigma, NormKind kind) {
  return s_of_x(s_argument(rescaled_distance(rho, sigma, kind)));
}

double lower_bound_pinsker(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double t = trace_distance_full(rho, sigma);
  return 0.5 * t * t;
}

double upper_bound_brat(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double beta = singular_beta(sigma, "upper_bound_brat");
  return norm_of_singular_values(delta_singular_values(rho, sigma), NormKind::operator_norm()) / beta;
}

double upper_bound_minus_log_beta(const DensityMatrix& sigma) {
  return -std::log(singular_beta(sigma, "upper_bound_minus_log_beta"));
}

double upper_bound_quadratic(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double beta = singular_beta(sigma, "upper_bound_quadratic");
  const RealVector s = delta_singular_values(rho, sigma);
  return s.squaredNorm() / beta;
}

double entropy_correction(double t_full) {
  if (t_full <= 0.0) return 0.0;
  const double h = -t_full * std::log(t_full);
  return std::max(std::min(h, 1.0 / std::numbers::e), 0.0);
}

double fannes_value(double t_full, int d) {
  return t_full * std::log(static_cast<double>(d)) + entropy_correction(t_full);
}

double log_bound_value(double t_full, int d, double beta) {
  if (t_full == 0.0) return 0.0;
  return fannes_value(t_full, d) - 0.5 * t_full * std::log(beta);
}

double fannes_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fannes_value(trace_distance_full(rho, sigma), rho.dim());
}

double upper_bound_log(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double beta = singular_beta(sigma, "upper_bound_log");
  return log_bound_value(trace_distance_full(rho, sigma), rho.dim(), beta);
}

namespace branches {

double d2_low(double t, double beta) {
  return xlog1p(t + 1.0 - beta, t / (1.0 - beta)) + xlog1p(beta - t, -t / beta);
}

double d2_high_e1(double t, double /*beta*/) {
  return -std::log1p(-t);
}

double d2_high_e2(double t, double beta) {
  return xlog1p(beta + t, t / beta) + xlog1p(1.0 - beta - t, -t / (1.0 - beta));
}

double dgt2_low(double t, double beta) {
  return xlog1p(beta + t, t / beta) + xlog1p(beta - t, -t / beta);
}

double dgt2_high(double t, double beta) {
  return xlog1p(beta + t, t / beta);
}

}  // namespace branches

SharpD2Detail upper_bound_sharp_d2_detail(double t, double beta) {
  check_sharp_range(t, beta, 0.5, "upper_bound_sharp_d2");
  t = std::min(t, 1.0 - beta);
  if (t == 0.0) return {0.0, ExtremalPsi::E1, 0.0, 0.0};
  if (t <= beta) {
    // ψ = (1,0) gives d2_low; ψ = (0,1) gives the same pair with 1−β ↔ β
    // swapped in the mixing, i.e. d2_high_e2 at the same T.
    const double e1 = branches::d2_low(t, beta);
    const double e2 = branches::d2_high_e2(t, beta);
    return e1 >= e2 ? SharpD2Detail{e1, ExtremalPsi::E1, e1, e2}
                    : SharpD2Detail{e2, ExtremalPsi::E2, e1, e2};
  }
  const double e1 = branches::d2_high_e1(t, beta);
  const double e2 = branches::d2_high_e2(t, beta);
  return e1 >= e2 ? SharpD2Detail{e1, ExtremalPsi::E1, e1, e2}
                  : SharpD2Detail{e2, ExtremalPsi::E2, e1, e2};
}

double upper_bound_sharp_d2(double t, double beta) {
  return upper_bound_sharp_d2_detail(t, beta).value;
}

double upper_bound_sharp_dgt2(double t, double beta) {
  check_sharp_range(t, beta, 1.0, "upper_bound_sharp_dgt2");
  t = std::min(t, 1.0 - beta);
  if (t == 0.0) return 0.0;
  if (beta == 0.0) return kInf;
  return t <= beta ? branches::dgt2_low(t, beta) : branches::dgt2_high(t, beta);
}

bool sharp_dgt2_proven(double t, double beta) {
  return t <= beta || t <= 1.0 - 2.0 * beta;
}

double approx_sharp_d2(double t, double beta) {
  return t * t / (2.0 * beta * (1.0 - beta));
}

double approx_sharp_dgt2(double t, double beta) {
  return t * t / beta;
}

std::vector<std::pair<std::string, double>> BoundReport::lowers() const {
  return {{"lower_s", lower_s}, {"lower_pinsker", lower_pinsker}};
}

std::string to_string(SharpStatus s) {
  switch (s) {
    case SharpStatus::Proven:
      return "proven";
    case SharpStatus::Unproven:
      return "unproven";
    case SharpStatus::Refuted:
      return "refuted";
  }
  return "?";
}

std::vector<std::pair<std::string, double>> BoundReport::uppers() const {
  std::vector<std::pair<std::string, double>> out{{"upper_brat", upper_brat},
                                                  {"upper_minus_log_beta", upper_minus_log_beta},
                                                  {"upper_quad", upper_quad},
                                                  {"upper_log", upper_log}};
  if (sharp_status != SharpStatus::Refuted) out.emplace_back("upper_sharp", upper_sharp);
  return out;
}

bool BoundReport::ordering_holds(double slack) const {
  for (const auto& [name, lo] : lowers())
    if (std::isfinite(lo) && !(lo <= exact.value() + slack)) return false;
  if (exact.is_infinite()) return true;
  for (const auto& [name, up] : uppers())
    if (std::isfinite(up) && !(exact.value() <= up + slack)) return false;
  return true;
}

BoundReport bound_report(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("bound_report: dimension mismatch");
  const int d = rho.dim();
  if (d < 2) throw std::invalid_argument("bound_report: needs dimension >= 2");

  BoundReport r;
  r.dim = d;
  r.beta = std::max(0.0, sigma.min_eigenvalue());
  const RealVector s = delta_singular_values(rho, sigma);
  r.t_trace_full = s.sum();
  r.t_trace_half = 0.5 * r.t_trace_full;
  r.t_schatten2 = s.norm();
  r.t_operator = s(0);
  r.exact = relative_entropy(rho, sigma);

  // Rescaled distances: |||F||| is 2 (trace), √2 (Schatten-2), 1 (operator).
  r.lower_s = std::max({s_of_x(s_argument(r.t_trace_half)), s_of_x(s_argument(r.t_operator)),
                        s_of_x(s_argument(r.t_schatten2 / std::numbers::sqrt2))});
  r.lower_pinsker = 0.5 * r.t_trace_full * r.t_trace_full;

  const bool singular = !(r.beta > kDefaultSupportTol * sigma.spectrum().max_eigenvalue());
  if (singular) {
    r.upper_brat = r.upper_minus_log_beta = r.upper_quad = r.upper_log = r.upper_sharp = kInf;
    r.approx_small_t = kInf;
    return r;
  }
  r.upper_brat = r.t_operator / r.beta;
  r.upper_minus_log_beta = -std::log(r.beta);
  r.upper_quad = r.t_schatten2 * r.t_schatten2 / r.beta;
  r.upper_log = log_bound_value(r.t_trace_full, d, r.beta);
  // λ_min(σ) ≤ 1/d always; T ≤ 1−β up to rounding.
  const double t = std::min(r.t_trace_half, 1.0 - r.beta);
  if (d == 2) {
    r.upper_sharp = upper_bound_sharp_d2(t, std::min(r.beta, 0.5));
    r.sharp_status = t <= r.beta ? SharpStatus::Proven : SharpStatus::Refuted;
    r.approx_small_t = approx_sharp_d2(t, r.beta);
  } else {
    r.upper_sharp = upper_bound_sharp_dgt2(t, r.beta);
    r.sharp_status = sharp_dgt2_proven(t, r.beta) ? SharpStatus::Proven : SharpStatus::Unproven;
    r.approx_small_t = approx_sharp_dgt2(t, r.beta);
  }
  return r;
}

SMinCurve s_curve(double x_max, double step) {
  if (!(step > 0.0) || !(x_max >= 0.0) || !(x_max < 1.0))
    throw std::invalid_argument("s_curve: need step > 0 and 0 <= x_max < 1");
  SMinCurve c;
  const long n = static_cast<long>(std::floor(x_max / step + 1e-9));
  c.grid.reserve(n + 1);
  for (long k = 0; k <= n; ++k) {
    const double x = std::min(k * step, x_max);
    c.grid.emplace_back(x, s_of_x(x));
  }
  return c;
}

std::string to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::Converges:
      return "converges";
    case ConvergenceVerdict::Diverges:
      return "diverges";
    case ConvergenceVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ConvergenceReport approx_convergence_rate(std::span<const double> t_n,
                                          std::span<const double> beta_n) {
  if (t_n.empty()) throw std::invalid_argument("approx_convergence_rate: empty sequence");
  if (t_n.size() != beta_n.size())
    throw std::invalid_argument("approx_convergence_rate: sequences differ in length");

  ConvergenceReport rep;
  const std::size_t n = t_n.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_n[i], b = beta_n[i];
    if (!(t >= 0.0 && t <= 1.0) || !(b > 0.0 && b <= 1.0)) {
      std::ostringstream os;
      os << "approx_convergence_rate: entry " << i << " out of range (T " << t << ", beta " << b
         << ")";
      throw std::invalid_argument(os.str());
    }
    if (t > 1.0 - b + kRangeTol) {
      std::ostringstream os;
      os << "approx_convergence_rate: entry " << i << " has T > 1 - beta; no pair of states has "
         << "this distance and minimal eigenvalue";
      throw std::invalid_argument(os.str());
    }
    rep.products.push_back(t * std::abs(std::log(b)));
    rep.upper_bounds.push_back(upper_bound_sharp_dgt2(t, b));
  }

  const std::size_t start = n / 2;
  const std::size_t tail = n - start;
  bool nonincreasing = true, nondecreasing = true, all_zero = true, any_zero = false;
  for (std::size_t i = start; i < n; ++i) {
    const double p = rep.products[i];
    if (p != 0.0) all_zero = false; else any_zero = true;
    if (i > start) {
      const double prev = rep.products[i - 1];
      if (p > prev * (1.0 + 1e-12)) nonincreasing = false;
      if (p < prev * (1.0 - 1e-12)) nondecreasing = false;
    }
  }
  if (all_zero) {
    rep.verdict = ConvergenceVerdict::Converges;
    return rep;
  }
  if (tail < 2 || any_zero) return rep;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = start; i < n; ++i) {
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(rep.products[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double m = static_cast<double>(tail);
  const double denom = m * sxx - sx * sx;
  rep.tail_slope = denom > 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  if (nonincreasing && rep.tail_slope < -0.1) {
    rep.verdict = ConvergenceVerdict::Converges;
  } else if (nondecreasing && rep.tail_slope >= -0.1) {
    rep.verdict = ConvergenceVerdict::Diverges;
  }
  return rep;
}

}  // namespace qrebound
