#include "qrebound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

namespace qrebound {

namespace {

constexpr double kKleinClampTol = 1e-10;

void require_psd(const EigenDecomposition& e, double tol, const char* which) {
  const double scale = std::max(1.0, std::abs(e.max_eigenvalue()));
  if (e.min_eigenvalue() < -tol * scale) {
    std::ostringstream os;
    os.precision(17);
    os << "relative entropy: " << which << " has negative eigenvalue " << e.min_eigenvalue();
    throw std::domain_error(os.str());
  }
}

void require_positive_definite(const DensityMatrix& m, const char* which) {
  const auto& e = m.spectrum();
  if (!(e.min_eigenvalue() > kDefaultSupportTol * e.max_eigenvalue())) {
    std::ostringstream os;
    os.precision(17);
    os << "relative_entropy_gradient: " << which
       << " must be positive definite, smallest eigenvalue " << e.min_eigenvalue();
    throw std::domain_error(os.str());
  }
}

}  // namespace

double ExtendedReal::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double von_neumann_entropy(const EigenDecomposition& spectrum) {
  double h = 0.0;
  for (int i = 0; i < spectrum.dim(); ++i) {
    const double l = spectrum.eigenvalues(i);
    if (l > 0.0) h -= l * std::log(l);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.spectrum());
}

ExtendedReal relative_entropy(const EigenDecomposition& rho, const EigenDecomposition& sigma,
                              double support_tol) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  require_psd(rho, support_tol, "first argument");
  require_psd(sigma, support_tol, "second argument");

  const int n = rho.dim();
  const double rho_cut = support_tol * rho.max_eigenvalue();
  const double sigma_cut = support_tol * sigma.max_eigenvalue();
  if (rho.max_eigenvalue() <= 0.0) return ExtendedReal(0.0);
  if (sigma.max_eigenvalue() <= 0.0) return ExtendedReal::infinity();

  // overlap(j, i) = ⟨v_j | u_i⟩ with v_j eigenvectors of σ, u_i of ρ.
  const ComplexMatrix overlap = sigma.eigenvectors.adjoint() * rho.eigenvectors;

  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l = rho.eigenvalues(i);
    if (l <= rho_cut) continue;
    double leak = 0.0;
    for (int j = 0; j < n; ++j)
      if (sigma.eigenvalues(j) <= sigma_cut) leak += std::norm(overlap(j, i));
    if (leak > support_tol) return ExtendedReal::infinity();
    value += l * std::log(l);
  }
  for (int j = 0; j < n; ++j) {
    const double s = sigma.eigenvalues(j);
    if (s <= sigma_cut) continue;
    double weight = 0.0;  // ⟨v_j|ρ|v_j⟩ restricted to the support of ρ
    for (int i = 0; i < n; ++i) {
      const double l = rho.eigenvalues(i);
      if (l > rho_cut) weight += l * std::norm(overlap(j, i));
    }
    value -= weight * std::log(s);
  }

  const double tr_rho = rho.eigenvalues.sum();
  const double tr_sigma = sigma.eigenvalues.sum();
  const bool klein_applies =
      std::abs(tr_rho - tr_sigma) <= support_tol * std::max(1.0, std::abs(tr_sigma));
  if (klein_applies && value < 0.0 && value >= -kKleinClampTol) value = 0.0;
  return ExtendedReal(value);
}

ExtendedReal relative_entropy(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                              double support_tol) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  if (rho.matrix() == sigma.matrix()) {
    const EigenDecomposition e = eig_hermitian(rho);
    relative_entropy(e, e, support_tol);  // validates positivity
    return ExtendedReal(0.0);
  }
  return relative_entropy(eig_hermitian(rho), eig_hermitian(sigma), support_tol);
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                              double support_tol) {
  if (rho.dim() == sigma.dim() && rho.matrix().matrix() == sigma.matrix().matrix())
    return ExtendedReal(0.0);
  return relative_entropy(rho.spectrum(), sigma.spectrum(), support_tol);
}

HermitianMatrix relative_entropy_gradient(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy_gradient: dimension mismatch");
  require_positive_definite(rho, "rho");
  require_positive_definite(sigma, "sigma");
  return HermitianMatrix::identity(rho.dim()) + matrix_log(rho.spectrum()) -
         matrix_log(sigma.spectrum());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  // F = ‖√ρ √σ‖₁. Singular values of the product avoid taking square roots
  // of rounding-level eigenvalues of √ρ σ √ρ.
  auto root = [](const DensityMatrix& m) {
    const double cut = kDefaultSupportTol * m.spectrum().max_eigenvalue();
    return spectral_apply(m.spectrum(), [cut](double l) { return l > cut ? std::sqrt(l) : 0.0; });
  };
  const ComplexMatrix product = root(rho).matrix() * root(sigma).matrix();
  const Eigen::JacobiSVD<ComplexMatrix> svd(product);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - fidelity(rho, sigma)));
}

}  // namespace qrebound
