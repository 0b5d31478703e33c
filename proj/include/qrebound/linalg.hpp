#pragma once

// Dense complex Hermitian linear algebra: a validated Hermitian value type,
// a cyclic Jacobi eigensolver and spectral functions built on top of it.

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qrebound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultSupportTol = 1e-12;
inline constexpr double kDefaultDegeneracyTol = 1e-9;

/// Raised when the eigensolver exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Square complex matrix that is Hermitian to within kHermiticityTol on
/// construction. The stored entries are exactly Hermitian: the input is
/// replaced by (A + A†)/2.
class HermitianMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix zero(int dim);
  static HermitianMatrix identity(int dim);
  static HermitianMatrix diagonal(std::span<const double> entries);
  /// Symmetrizes without checking. For results of operations that are
  /// Hermitian in exact arithmetic.
  static HermitianMatrix from_hermitian_part(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  /// Copy with every off-diagonal entry set to zero.
  HermitianMatrix diagonal_part() const;

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double a) const;
  HermitianMatrix operator-() const { return *this * -1.0; }
  friend HermitianMatrix operator*(double a, const HermitianMatrix& h) { return h * a; }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Eigenvalues sorted non-increasing; eigenvectors as the columns of a
/// unitary matrix in the matching order.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  double max_eigenvalue() const { return eigenvalues(0); }
  double min_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
  /// V diag(λ) V†.
  ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi with complex rotations. Converged when the off-diagonal
/// Frobenius norm drops below 1e-13·‖A‖_F; throws ConvergenceError after
/// 100 sweeps.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);

/// V f(Λ) V† for a real scalar function f.
template <typename F>
HermitianMatrix spectral_apply(const EigenDecomposition& e, F&& f) {
  RealVector fl(e.dim());
  for (int i = 0; i < e.dim(); ++i) fl(i) = f(e.eigenvalues(i));
  ComplexMatrix out = e.eigenvectors * fl.asDiagonal() * e.eigenvectors.adjoint();
  return HermitianMatrix::from_hermitian_part(out);
}

/// Natural logarithm restricted to the support of a positive semi-definite
/// matrix. Eigenvalues at or below support_tol·λ_max are treated as the
/// kernel, on which the result is zero. Throws std::domain_error when an
/// eigenvalue is below -support_tol·max(1, λ_max).
HermitianMatrix matrix_log(const HermitianMatrix& a, double support_tol = kDefaultSupportTol);
HermitianMatrix matrix_log(const EigenDecomposition& e, double support_tol = kDefaultSupportTol);

HermitianMatrix matrix_exp(const HermitianMatrix& a);

/// Principal square root of a PSD matrix; slightly negative eigenvalues
/// from rounding are clamped to zero.
HermitianMatrix matrix_sqrt(const HermitianMatrix& a);

struct JordanParts {
  HermitianMatrix pos;
  HermitianMatrix neg;
};

/// A = pos − neg with pos, neg ≥ 0 supported on orthogonal subspaces.
JordanParts jordan_decompose(const HermitianMatrix& a);

/// Tr[A B] for Hermitian A, B (always real).
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

/// Σ_{i≠j} |Δ̃_ij|² (log s_i − log s_j)/(s_i − s_j) + Σ_i Δ̃_ii²/s_i with Δ̃ the
/// matrix Δ expressed in σ's eigenbasis. Near-coincident eigenvalue pairs
/// (|s_i − s_j| < degeneracy_tol·max) use the limit 1/s_i. This is the
/// integral ∫₀^∞ Tr[Δ(σ+x)⁻¹Δ(σ+x)⁻¹] dx, the Fréchet derivative term of
/// log at σ paired with Δ. Throws std::domain_error for singular σ.
double quadratic_log_form(const HermitianMatrix& sigma, const HermitianMatrix& delta,
                          double degeneracy_tol = kDefaultDegeneracyTol);

}  // namespace qrebound
