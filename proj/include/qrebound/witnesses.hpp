#pragma once

// Explicit states that attain the sharp bounds, the counterexample to a
// combined quadratic/logarithmic bound, and numerical checks of the d = 2
// extremal-ψ reduction and of the curvature of S(σ+εΔ‖σ).

#include "qrebound/states.hpp"

namespace qrebound {

struct StatePair {
  DensityMatrix rho;
  DensityMatrix sigma;
};

/// Diagonal pair (r*+x, 1−r*−x, 0, …) vs (r*, 1−r*, 0, …), r* the minimizer
/// of s(x): S(ρ‖σ) = s(x) and every rescaled UI distance equals x.
StatePair witness_lower(double x, int d);

/// σ = β𝟙 + (1−dβ)|e³⟩⟨e³|, ρ = σ + T·F. Attains the d > 2 bound for T ≤ β.
/// Requires d ≥ 3, 0 ≤ T ≤ β ≤ 1/d.
StatePair witness_upper_T_le_beta(double t, double beta, int d);

/// ρ = Diag(T+β, 0, 0^{×J}, β^{×K}, β+η), σ = Diag(β, T−Jβ, β^{×J}, β^{×K}, β+η)
/// with K = d−3−J and η = 1−T−(d−1−J)β. Attains (T+β) log((T+β)/β).
/// Requires d ≥ 3, 0 ≤ J ≤ d−3, Jβ ≤ T, T ≤ 1−(d−1−J)β, β ≤ T ≤ 1−2β.
/// λ_min(σ) = β only when (J+1)β ≤ T; otherwise λ_min(σ) = T−Jβ and the pair
/// does not attain the bound evaluated at its own λ_min.
StatePair witness_upper_T_gt_beta(double t, double beta, int d, int j);

struct Counterexample {
  double r;
  double p;
  double q;
  double margin;  // S((p,1−p)‖(q,1−q)) − r·2(p−q)²·|log q| > 0
  int scan_steps;
};

/// Two-level commuting states violating S ≤ r·Tr[(ρ−σ)²]·|log λ_min(σ)|.
/// q = min(1/4, root of −4r·q log q = 1/2); p = q + 1e-2·2^{−k}, first k in
/// 0..40 with a positive margin. Throws std::runtime_error if none is found.
Counterexample counterexample_bad_bound(double r);

struct ExtremalPsiCheck {
  double t = 0.0;
  double beta = 0.0;
  int grid = 0;
  int argmax = 0;            // grid index of the largest value
  double alpha_at_max = 0.0;
  double max_value = 0.0;
  double endpoint_e1 = 0.0;  // α = 0, ψ = (1, 0)
  double endpoint_e2 = 0.0;  // α = π/2, ψ = (0, 1)
  double interior_excess = 0.0;  // max interior value − max endpoint value
  double bound = 0.0;            // upper_bound_sharp_d2(T, β)
  bool endpoint_maximum = false; // interior_excess ≤ 1e-12
  bool matches_bound = false;    // |max endpoint − bound| ≤ 1e-9
  bool passed() const { return endpoint_maximum && matches_bound; }
};

/// Evaluates the d = 2 maximand over ψ = (cos α, sin α), α on a uniform grid
/// of [0, π/2], and compares its maximum with the closed-form bound.
/// Requires 0 < β ≤ 1/2, 0 ≤ T ≤ 1−β, grid ≥ 2.
ExtremalPsiCheck extremal_psi_check_d2(double t, double beta, int grid = 10000);

/// The maximand itself at one angle.
double d2_maximand(double t, double beta, double alpha);

struct SecondDerivativeCheck {
  double eps = 0.0;
  double finite_difference = 0.0;  // [S(σ+εΔ‖σ) + S(σ−εΔ‖σ)]/ε²
  double closed_form = 0.0;        // quadratic_log_form(σ, Δ)
  double quadratic_curvature = 0.0;  // Tr[Δ²]/λ_min(σ), dominates closed_form
  bool maximally_mixed = false;
  bool bounded = false;   // FD ≤ form + 1e-6
  bool equality = false;  // |FD − form| ≤ 1e-6 (required when σ = 𝟙/d)
  bool below_quadratic = false;  // form ≤ Tr[Δ²]/λ_min + 1e-6, equal at σ = 𝟙/d
  bool passed() const {
    return bounded && below_quadratic && (!maximally_mixed || equality);
  }
};

/// Second central difference of ε ↦ S(σ+εΔ‖σ) at 0. ε is halved (up to 20
/// times) while σ ± εΔ is not a state; std::domain_error if that fails.
SecondDerivativeCheck second_derivative_check(const DensityMatrix& sigma, const StateDelta& delta,
                                              double eps = 1e-4);

}  // namespace qrebound
