#pragma once

// Lower and upper bounds on the quantum relative entropy in terms of norm
// distances and the smallest eigenvalue of the second argument.
//
// Trace-distance conventions differ between bounds and each function binds
// its own:
//   T_full = Tr|ρ−σ|              upper_bound_log, fannes_bound
//   T_half = Tr|ρ−σ|/2            upper_bound_sharp_dgt2, lower_bound_pinsker
//   T_s2   = ‖ρ−σ‖₂               upper_bound_quadratic
//   T_ui   = |||ρ−σ|||/|||F|||    s_of_x (lower_bound_sharp), upper_bound_sharp_d2

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrebound/entropy.hpp"
#include "qrebound/norms.hpp"
#include "qrebound/states.hpp"

namespace qrebound {

/// S((p, 1−p) ‖ (q, 1−q)) with 0·log 0 = 0; +∞ if p > 0 = q or p < 1 = q.
double binary_relative_entropy(double p, double q);

struct TwoLevelMinimum {
  double r;      // minimizing σ weight
  double value;  // s(x)
};

/// Minimizer of r ↦ S((r+x, 1−r−x) ‖ (r, 1−r)) over 0 < r < 1−x. Returns
/// r = 1−x when the boundary limit −log(1−x) is not beaten in double precision.
TwoLevelMinimum s_minimizer(double x);

/// s(x) = min_{0<r<1−x} S((r+x, 1−r−x) ‖ (r, 1−r)), 0 ≤ x < 1.
double s_of_x(double x);

/// s(|||ρ−σ|||/|||F|||). At rescaled distance 1 (orthogonal pure states) the
/// argument is taken as the largest double below 1, giving a finite value.
double lower_bound_sharp(const DensityMatrix& rho, const DensityMatrix& sigma, NormKind kind);

/// ½ (Tr|ρ−σ|)².
double lower_bound_pinsker(const DensityMatrix& rho, const DensityMatrix& sigma);

/// ‖ρ−σ‖_∞ / λ_min(σ).
double upper_bound_brat(const DensityMatrix& rho, const DensityMatrix& sigma);
/// −log λ_min(σ).
double upper_bound_minus_log_beta(const DensityMatrix& sigma);
/// ‖ρ−σ‖₂² / λ_min(σ).
double upper_bound_quadratic(const DensityMatrix& rho, const DensityMatrix& sigma);

/// max(min(−T log T, 1/e), 0), the entropy correction term shared by the
/// Fannes and logarithmic bounds. Zero at T = 0.
double entropy_correction(double t_full);
/// T log d + entropy_correction(T) with T = Tr|Δ|.
double fannes_value(double t_full, int d);
/// T log d + entropy_correction(T) − T log β / 2 with T = Tr|Δ|.
double log_bound_value(double t_full, int d, double beta);

/// Bound on |S(ρ) − S(σ)|.
double fannes_bound(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Upper bound logarithmic in λ_min(σ).
double upper_bound_log(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Closed-form upper bound for d = 2 in terms of the rescaled distance T.
/// Requires 0 ≤ β ≤ 1/2 and 0 ≤ T ≤ 1−β. Valid for T ≤ β; for T > β it is
/// exceeded by some pure ρ (see SharpStatus::Refuted).
double upper_bound_sharp_d2(double t, double beta);

/// Which pure state ψ in the d = 2 maximisation attains the bound.
enum class ExtremalPsi { E1, E2 };

struct SharpD2Detail {
  double value;
  ExtremalPsi winner;
  double psi_e1;  // value with ψ = (1, 0)
  double psi_e2;  // value with ψ = (0, 1)
};
SharpD2Detail upper_bound_sharp_d2_detail(double t, double beta);

/// Trace-norm upper bound for d > 2 in terms of T = Tr|Δ|/2.
/// Requires β ≥ 0 and 0 ≤ T ≤ 1−β.
double upper_bound_sharp_dgt2(double t, double beta);

/// True when the d > 2 bound is known to be attained: T ≤ β or T ≤ 1−2β.
bool sharp_dgt2_proven(double t, double beta);

/// Individual closed-form branches, without range checks. Exposed for the
/// branch-continuity checks.
namespace branches {
double d2_low(double t, double beta);       // T ≤ β
double d2_high_e1(double t, double beta);   // T > β, ψ = (1,0): −log(1−T)
double d2_high_e2(double t, double beta);   // T > β, ψ = (0,1)
double dgt2_low(double t, double beta);     // T ≤ β
double dgt2_high(double t, double beta);    // β ≤ T ≤ 1−β
}  // namespace branches

/// Small-T approximations of the sharp upper bounds.
double approx_sharp_d2(double t, double beta);    // T²/(2β(1−β))
double approx_sharp_dgt2(double t, double beta);  // T²/β

/// Standing of the sharp upper bound at a given (d, T, β):
///   Proven   d = 2 with T ≤ β, or d > 2 with T ≤ β or T ≤ 1−2β.
///   Unproven d > 2 in the strip 1−2β < T ≤ 1−β: a valid bound, sharpness open.
///   Refuted  d = 2 with T > β: the closed form is exceeded by explicit pairs
///            (e.g. pure ρ against σ = Diag(β, 1−β)), so it is not a bound there.
enum class SharpStatus { Proven, Unproven, Refuted };
std::string to_string(SharpStatus s);

struct BoundReport {
  int dim = 0;
  double beta = 0.0;  // λ_min(σ), clamped at 0
  double t_trace_half = 0.0;
  double t_trace_full = 0.0;
  double t_schatten2 = 0.0;
  double t_operator = 0.0;
  ExtendedReal exact;
  double lower_s = 0.0;
  double lower_pinsker = 0.0;
  double upper_brat = 0.0;
  double upper_minus_log_beta = 0.0;
  double upper_quad = 0.0;
  double upper_log = 0.0;
  double upper_sharp = 0.0;  // d = 2 bound or d > 2 trace-norm bound
  SharpStatus sharp_status = SharpStatus::Proven;
  double approx_small_t = 0.0;

  std::vector<std::pair<std::string, double>> lowers() const;
  /// Upper bounds, leaving out upper_sharp when its status is Refuted.
  std::vector<std::pair<std::string, double>> uppers() const;
  /// Every finite lower ≤ exact + slack ≤ every finite upper + slack.
  bool ordering_holds(double slack) const;
};

/// All bounds for a pair of states. Upper bounds that need a positive
/// definite σ are +∞ when λ_min(σ) is at or below the support tolerance.
BoundReport bound_report(const DensityMatrix& rho, const DensityMatrix& sigma);

struct SMinCurve {
  std::vector<std::pair<double, double>> grid;  // (x, s(x))
};

/// s on x = 0, step, 2·step, … ≤ x_max (x_max < 1).
SMinCurve s_curve(double x_max, double step);

enum class ConvergenceVerdict { Converges, Diverges, Inconclusive };
std::string to_string(ConvergenceVerdict v);

struct ConvergenceReport {
  std::vector<double> products;      // T_n |log β_n|
  std::vector<double> upper_bounds;  // upper_bound_sharp_dgt2(T_n, β_n)
  double tail_slope = 0.0;           // least-squares slope of log product vs log n
  ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
};

/// Judges whether S(ρ^{⊗n} ‖ σ_n) is driven to zero given the half trace
/// distances T_n and minimal eigenvalues β_n. The verdict looks at the
/// second half of the sequence: Converges when the products are
/// non-increasing there and decay (log-log slope below −0.1) or are all zero,
/// Diverges when the slope is above −0.1 with non-decreasing products,
/// otherwise Inconclusive.
ConvergenceReport approx_convergence_rate(std::span<const double> t_n,
                                          std::span<const double> beta_n);

}  // namespace qrebound
