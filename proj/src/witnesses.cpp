#include "qrebound/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qrebound/bounds.hpp"
#include "qrebound/entropy.hpp"

namespace qrebound {

namespace {

constexpr double kFeasibilityTol = 1e-12;
constexpr double kEndpointTol = 1e-12;
constexpr double kBoundMatchTol = 1e-9;
constexpr double kCurvatureTol = 1e-6;

[[noreturn]] void infeasible(const char* who, const std::string& condition, double t, double beta,
                             int d) {
  std::ostringstream os;
  os << who << ": condition " << condition << " violated (T " << t << ", beta " << beta << ", d "
     << d << ")";
  throw std::invalid_argument(os.str());
}

double clamp_rounding(double v) {
  return (v < 0.0 && v > -kFeasibilityTol) ? 0.0 : v;
}

}  // namespace

StatePair witness_lower(double x, int d) {
  if (d < 2) throw std::invalid_argument("witness_lower: needs d >= 2");
  const TwoLevelMinimum m = s_minimizer(x);
  std::vector<double> rho(d, 0.0), sigma(d, 0.0);
  rho[0] = m.r + x;
  rho[1] = 1.0 - m.r - x;
  sigma[0] = m.r;
  sigma[1] = 1.0 - m.r;
  return {DensityMatrix::diagonal(rho), DensityMatrix::diagonal(sigma)};
}

StatePair witness_upper_T_le_beta(double t, double beta, int d) {
  const char* who = "witness_upper_T_le_beta";
  if (d < 3) infeasible(who, "d >= 3", t, beta, d);
  if (!(t >= 0.0)) infeasible(who, "T >= 0", t, beta, d);
  if (!(t <= beta)) infeasible(who, "T <= beta", t, beta, d);
  if (!(beta <= 1.0 / d + kFeasibilityTol)) infeasible(who, "beta <= 1/d", t, beta, d);
  const double eta = std::max(0.0, 1.0 - d * beta);
  std::vector<double> sigma(d, beta);
  sigma[2] += eta;
  std::vector<double> rho = sigma;
  rho[0] += t;
  rho[1] = clamp_rounding(rho[1] - t);
  return {DensityMatrix::diagonal(rho), DensityMatrix::diagonal(sigma)};
}

StatePair witness_upper_T_gt_beta(double t, double beta, int d, int j) {
  const char* who = "witness_upper_T_gt_beta";
  if (d < 3) infeasible(who, "d >= 3", t, beta, d);
  if (j < 0 || j > d - 3) infeasible(who, "0 <= J <= d-3", t, beta, d);
  if (!(beta >= 0.0)) infeasible(who, "beta >= 0", t, beta, d);
  if (!(t >= beta)) infeasible(who, "beta <= T", t, beta, d);
  if (!(t <= 1.0 - 2.0 * beta + kFeasibilityTol)) infeasible(who, "T <= 1-2*beta", t, beta, d);
  if (!(j * beta <= t + kFeasibilityTol)) infeasible(who, "J*beta <= T", t, beta, d);
  if (!(t <= 1.0 - (d - 1 - j) * beta + kFeasibilityTol))
    infeasible(who, "T <= 1-(d-1-J)*beta", t, beta, d);

  const int k = d - 3 - j;
  const double eta = clamp_rounding(1.0 - t - (d - 1 - j) * beta);
  std::vector<double> rho, sigma;
  rho.reserve(d);
  sigma.reserve(d);
  rho.push_back(t + beta);
  sigma.push_back(beta);
  rho.push_back(0.0);
  sigma.push_back(clamp_rounding(t - j * beta));
  for (int i = 0; i < j; ++i) {
    rho.push_back(0.0);
    sigma.push_back(beta);
  }
  for (int i = 0; i < k; ++i) {
    rho.push_back(beta);
    sigma.push_back(beta);
  }
  rho.push_back(beta + eta);
  sigma.push_back(beta + eta);
  return {DensityMatrix::diagonal(rho), DensityMatrix::diagonal(sigma)};
}

Counterexample counterexample_bad_bound(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    std::ostringstream os;
    os << "counterexample_bad_bound: need r > 0, got " << r;
    throw std::invalid_argument(os.str());
  }
  // −4r·q log q is increasing on (0, 1/e) ⊃ (0, 1/4].
  auto g = [r](double q) { return -4.0 * r * q * std::log(q); };
  double q = 0.25;
  if (g(q) > 0.5) {
    double lo = 0.0, hi = 0.25;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (g(mid) > 0.5) hi = mid; else lo = mid;
    }
    q = lo;
  }

  const double log_q = std::abs(std::log(q));
  for (int k = 0; k <= 40; ++k) {
    const double eps = 1e-2 * std::ldexp(1.0, -k);
    const double p = q + eps;
    // S((p,1−p)‖(q,1−q)) with log1p to keep the O(ε²) value accurate.
    const double s = p * std::log1p(eps / q) + (1.0 - p) * std::log1p(-eps / (1.0 - q));
    const double margin = s - r * 2.0 * eps * eps * log_q;
    if (margin > 0.0) return {r, p, q, margin, k + 1};
  }
  std::ostringstream os;
  os << "counterexample_bad_bound: no violating p found for r " << r << " (q " << q << ")";
  throw std::runtime_error(os.str());
}

double d2_maximand(double t, double beta, double alpha) {
  ComplexVector psi(2);
  psi << std::cos(alpha), std::sin(alpha);
  const ComplexMatrix proj = psi * psi.adjoint();
  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  double eta;
  if (t <= beta) {
    a(0, 0) = beta + t;
    a(1, 1) = beta - t;
    b(0, 0) = b(1, 1) = beta;
    eta = 1.0 - 2.0 * beta;
  } else {
    a(0, 0) = beta + t;
    b(0, 0) = beta;
    b(1, 1) = t;
    eta = 1.0 - beta - t;
  }
  a += eta * proj;
  b += eta * proj;
  return relative_entropy(HermitianMatrix::from_hermitian_part(a),
                          HermitianMatrix::from_hermitian_part(b))
      .value();
}

ExtremalPsiCheck extremal_psi_check_d2(double t, double beta, int grid) {
  if (!(beta > 0.0) || beta > 0.5 || !(t >= 0.0) || t > 1.0 - beta + kFeasibilityTol) {
    std::ostringstream os;
    os << "extremal_psi_check_d2: need 0 < beta <= 1/2 and 0 <= T <= 1-beta, got T " << t
       << ", beta " << beta;
    throw std::invalid_argument(os.str());
  }
  if (grid < 2) throw std::invalid_argument("extremal_psi_check_d2: grid must be >= 2");
  t = std::min(t, 1.0 - beta);

  ExtremalPsiCheck c;
  c.t = t;
  c.beta = beta;
  c.grid = grid;
  const double step = (std::numbers::pi / 2.0) / (grid - 1);
  double interior_max = -std::numeric_limits<double>::infinity();
  c.max_value = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double alpha = (k == grid - 1) ? std::numbers::pi / 2.0 : k * step;
    const double v = d2_maximand(t, beta, alpha);
    if (k == 0) c.endpoint_e1 = v;
    else if (k == grid - 1) c.endpoint_e2 = v;
    else interior_max = std::max(interior_max, v);
    if (v > c.max_value) {
      c.max_value = v;
      c.argmax = k;
      c.alpha_at_max = alpha;
    }
  }
  const double endpoint_max = std::max(c.endpoint_e1, c.endpoint_e2);
  c.interior_excess = grid > 2 ? interior_max - endpoint_max : 0.0;
  c.bound = upper_bound_sharp_d2(t, beta);
  c.endpoint_maximum = c.interior_excess <= kEndpointTol;
  c.matches_bound = std::abs(endpoint_max - c.bound) <= kBoundMatchTol;
  return c;
}

SecondDerivativeCheck second_derivative_check(const DensityMatrix& sigma, const StateDelta& delta,
                                              double eps) {
  if (sigma.dim() != delta.dim())
    throw std::invalid_argument("second_derivative_check: dimension mismatch");
  if (!(sigma.min_eigenvalue() > 0.0))
    throw std::domain_error("second_derivative_check: sigma must be positive definite");

  SecondDerivativeCheck c;
  c.closed_form = quadratic_log_form(sigma.matrix(), delta.matrix());
  c.quadratic_curvature =
      trace_product(delta.matrix(), delta.matrix()) / sigma.min_eigenvalue();
  c.below_quadratic = c.closed_form <= c.quadratic_curvature + kCurvatureTol;
  const int d = sigma.dim();
  c.maximally_mixed =
      (sigma.matrix().matrix() - ComplexMatrix::Identity(d, d) / static_cast<double>(d))
          .cwiseAbs()
          .maxCoeff() <= 1e-12;

  for (int attempt = 0; attempt <= 20; ++attempt, eps *= 0.5) {
    const HermitianMatrix plus = sigma.matrix() + delta.matrix() * eps;
    const HermitianMatrix minus = sigma.matrix() - delta.matrix() * eps;
    if (!(eig_hermitian(plus).min_eigenvalue() > 0.0) ||
        !(eig_hermitian(minus).min_eigenvalue() > 0.0))
      continue;
    const double s_plus = relative_entropy(plus, sigma.matrix()).value();
    const double s_minus = relative_entropy(minus, sigma.matrix()).value();
    c.eps = eps;
    c.finite_difference = (s_plus + s_minus) / (eps * eps);
    c.bounded = c.finite_difference <= c.closed_form + kCurvatureTol;
    c.equality = std::abs(c.finite_difference - c.closed_form) <= kCurvatureTol;
    return c;
  }
  throw std::domain_error("second_derivative_check: sigma +/- eps*Delta leaves the state space");
}

}  // namespace qrebound
