#pragma once

#include <string>

#include "qrebound/linalg.hpp"
#include "qrebound/states.hpp"

namespace qrebound {

/// A real number or +∞. Finite values are stored as given; relative_entropy
/// clamps rounding-level negatives to zero where Klein's inequality applies.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v), infinite_(false) {}
  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// The finite value, or +inf as a double.
  double value() const;

  friend bool operator<=(const ExtendedReal& a, double b) { return a.is_finite() && a.value_ <= b; }
  friend bool operator<=(double a, const ExtendedReal& b) { return b.is_infinite() || a <= b.value_; }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// −Σ λ log λ with 0·log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const EigenDecomposition& spectrum);

/// Tr[ρ(log ρ − log σ)] for positive semi-definite, not necessarily
/// normalized ρ and σ. +∞ when an eigenvector of ρ with eigenvalue above
/// support_tol·λ_max(ρ) puts squared weight above support_tol on the kernel
/// of σ (eigenvalues at or below support_tol·λ_max(σ)). Negative eigenvalues
/// beyond tolerance raise std::domain_error.
ExtendedReal relative_entropy(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                              double support_tol = kDefaultSupportTol);
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double support_tol = kDefaultSupportTol);
ExtendedReal relative_entropy(const EigenDecomposition& rho, const EigenDecomposition& sigma,
                              double support_tol = kDefaultSupportTol);

/// 𝟙 + log ρ − log σ for positive definite ρ, σ. For traceless Δ,
/// d/dε S(ρ + εΔ‖σ) at ε = 0 equals Tr[Δ·gradient].
HermitianMatrix relative_entropy_gradient(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr (ρ^{1/2} σ ρ^{1/2})^{1/2}, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// 2 (1 − F)^{1/2}.
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qrebound
