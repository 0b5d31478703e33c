#pragma once

#include <cstdint>
#include <random>

#include "qrebound/linalg.hpp"

namespace qrebound {

/// Positive semi-definite Hermitian matrix of unit trace, with its spectrum
/// cached at construction.
class DensityMatrix {
 public:
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-12;

  /// Throws std::invalid_argument naming the violated invariant.
  explicit DensityMatrix(HermitianMatrix m);

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix diagonal(std::span<const double> probabilities);

  int dim() const { return mat_.dim(); }
  const HermitianMatrix& matrix() const { return mat_; }
  const EigenDecomposition& spectrum() const { return spectrum_; }
  double min_eigenvalue() const { return spectrum_.min_eigenvalue(); }

 private:
  HermitianMatrix mat_;
  EigenDecomposition spectrum_;
};

/// Traceless Hermitian matrix, typically ρ − σ.
class StateDelta {
 public:
  static constexpr double kTraceTol = 1e-12;

  explicit StateDelta(HermitianMatrix m);
  static StateDelta between(const DensityMatrix& rho, const DensityMatrix& sigma);

  int dim() const { return mat_.dim(); }
  const HermitianMatrix& matrix() const { return mat_; }

 private:
  HermitianMatrix mat_;
};

/// E = Diag(1, 0, …, 0), d ≥ 1.
HermitianMatrix special_E(int d);
/// F = Diag(1, −1, 0, …, 0), d ≥ 2.
HermitianMatrix special_F(int d);

/// Ginibre-induced state GG†/Tr[GG†], G with iid standard complex Gaussian
/// entries drawn from mt19937_64(seed).
DensityMatrix random_density(int d, std::uint64_t seed);

/// β·1 + (1 − dβ)·ρ' with ρ' = random_density(d, seed); λ_min ≥ β.
/// Requires 0 ≤ β ≤ 1/d.
DensityMatrix random_density_min_eig(int d, double beta, std::uint64_t seed);

/// v v† / ‖v‖².
DensityMatrix pure_state(const ComplexVector& v);

/// Unitary drawn as the eigenvector matrix of a random Hermitian matrix.
ComplexMatrix random_unitary(int d, std::mt19937_64& rng);

/// Hermitian matrix with iid standard Gaussian entries (complex off the
/// diagonal, real on it).
HermitianMatrix random_hermitian(int d, std::mt19937_64& rng);

/// Convex combination t·a + (1 − t)·b of two states of equal dimension.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double t);

}  // namespace qrebound
