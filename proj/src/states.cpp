#include "qrebound/states.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace qrebound {

namespace {

ComplexMatrix ginibre(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianMatrix m) : mat_(std::move(m)) {
  const double tr = mat_.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTol)) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix must have unit trace, got trace " << tr;
    throw std::invalid_argument(os.str());
  }
  spectrum_ = eig_hermitian(mat_);
  if (!(spectrum_.min_eigenvalue() >= -kPsdTol)) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix must be positive semi-definite, got smallest eigenvalue "
       << spectrum_.min_eigenvalue();
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dimension must be >= 1");
  return DensityMatrix(HermitianMatrix::identity(dim) * (1.0 / dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  return DensityMatrix(HermitianMatrix::diagonal(probabilities));
}

StateDelta::StateDelta(HermitianMatrix m) : mat_(std::move(m)) {
  if (!(std::abs(mat_.trace()) <= kTraceTol)) {
    std::ostringstream os;
    os.precision(17);
    os << "state difference must be traceless, got trace " << mat_.trace();
    throw std::invalid_argument(os.str());
  }
}

StateDelta StateDelta::between(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("StateDelta: dimension mismatch");
  return StateDelta(rho.matrix() - sigma.matrix());
}

HermitianMatrix special_E(int d) {
  if (d < 1) throw std::invalid_argument("special_E: dimension must be >= 1");
  std::vector<double> diag(d, 0.0);
  diag[0] = 1.0;
  return HermitianMatrix::diagonal(diag);
}

HermitianMatrix special_F(int d) {
  if (d < 2) throw std::invalid_argument("special_F: dimension must be >= 2");
  std::vector<double> diag(d, 0.0);
  diag[0] = 1.0;
  diag[1] = -1.0;
  return HermitianMatrix::diagonal(diag);
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_density: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(d, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(HermitianMatrix::from_hermitian_part(w));
}

DensityMatrix random_density_min_eig(int d, double beta, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_density_min_eig: dimension must be >= 1");
  if (!(beta >= 0.0) || beta > 1.0 / d) {
    std::ostringstream os;
    os << "random_density_min_eig: need 0 <= beta <= 1/d, got beta " << beta << " for d " << d;
    throw std::invalid_argument(os.str());
  }
  const double weight = 1.0 - d * beta;
  if (weight <= 4.0 * std::numeric_limits<double>::epsilon())
    return DensityMatrix::maximally_mixed(d);
  const DensityMatrix base = random_density(d, seed);
  return DensityMatrix(HermitianMatrix::identity(d) * beta + base.matrix() * weight);
}

DensityMatrix pure_state(const ComplexVector& v) {
  const double n2 = v.squaredNorm();
  if (v.size() == 0 || !(n2 > 0.0)) throw std::invalid_argument("pure_state: zero vector");
  return DensityMatrix(HermitianMatrix::from_hermitian_part(v * v.adjoint() / n2));
}

HermitianMatrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = normal(rng);
    for (int j = i + 1; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(m);
}

ComplexMatrix random_unitary(int d, std::mt19937_64& rng) {
  return eig_hermitian(random_hermitian(d, rng)).eigenvectors;
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double t) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mix: dimension mismatch");
  return DensityMatrix(a.matrix() * t + b.matrix() * (1.0 - t));
}

}  // namespace qrebound
