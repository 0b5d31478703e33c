#include "qrebound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qrebound {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A ← U†AU and V ← VU where U is the identity except for the 2×2
// block (p,q) = [[c, s], [−s·conj(u), c·conj(u)]], |u| = 1.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q, double c, double s, Complex u) {
  const int n = static_cast<int>(a.rows());
  const Complex upp = c, upq = s, uqp = -s * std::conj(u), uqq = c * std::conj(u);
  for (int k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (int k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
  a(p, q) = a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "Hermitian matrix must be square and non-empty, got " << m.rows() << "x" << m.cols();
    throw std::invalid_argument(os.str());
  }
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) {
      const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (!(dev <= kHermiticityTol)) {
        std::ostringstream os;
        os << "matrix is not Hermitian: |A(" << i << "," << j << ") - conj(A(" << j << "," << i
           << "))| = " << dev;
        throw std::invalid_argument(os.str());
      }
    }
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::from_hermitian_part(const ComplexMatrix& m) {
  return HermitianMatrix(ComplexMatrix(0.5 * (m + m.adjoint())), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  const int n = static_cast<int>(entries.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal_part() const {
  ComplexMatrix d = ComplexMatrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) d(i, i) = m_(i, i);
  return HermitianMatrix(std::move(d), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return HermitianMatrix(ComplexMatrix(m_ + o.m_), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return HermitianMatrix(ComplexMatrix(m_ - o.m_), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator*(double a) const {
  return HermitianMatrix(ComplexMatrix(a * m_), Unchecked{});
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = a.norm();
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > kOffDiagonalTol * scale) {
    if (sweep == kMaxSweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge after " << kMaxSweeps
         << " sweeps; residual off-diagonal norm " << off;
      throw ConvergenceError(os.str(), off);
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex u = a(p, q) / r;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        // Real symmetric Jacobi on [[app, r], [r, aqq]].
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        rotate(a, v, p, q, c, s, u);
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

HermitianMatrix matrix_log(const EigenDecomposition& e, double support_tol) {
  const double lmax = e.max_eigenvalue();
  const double lmin = e.min_eigenvalue();
  if (lmin < -support_tol * std::max(1.0, std::abs(lmax))) {
    std::ostringstream os;
    os << "matrix logarithm needs a positive semi-definite argument; smallest eigenvalue " << lmin;
    throw std::domain_error(os.str());
  }
  const double cut = support_tol * lmax;
  return spectral_apply(e, [cut](double l) { return l > cut ? std::log(l) : 0.0; });
}

HermitianMatrix matrix_log(const HermitianMatrix& a, double support_tol) {
  return matrix_log(eig_hermitian(a), support_tol);
}

HermitianMatrix matrix_exp(const HermitianMatrix& a) {
  return spectral_apply(eig_hermitian(a), [](double l) { return std::exp(l); });
}

HermitianMatrix matrix_sqrt(const HermitianMatrix& a) {
  return spectral_apply(eig_hermitian(a), [](double l) { return l > 0.0 ? std::sqrt(l) : 0.0; });
}

JordanParts jordan_decompose(const HermitianMatrix& a) {
  const EigenDecomposition e = eig_hermitian(a);
  return {spectral_apply(e, [](double l) { return l > 0.0 ? l : 0.0; }),
          spectral_apply(e, [](double l) { return l < 0.0 ? -l : 0.0; })};
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  // Tr[AB] = Σ_ij A_ij B_ji = Σ_ij A_ij conj(B_ij).
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double quadratic_log_form(const HermitianMatrix& sigma, const HermitianMatrix& delta,
                          double degeneracy_tol) {
  if (sigma.dim() != delta.dim())
    throw std::invalid_argument("quadratic_log_form: dimension mismatch");
  const EigenDecomposition e = eig_hermitian(sigma);
  if (!(e.min_eigenvalue() > 0.0)) {
    std::ostringstream os;
    os << "quadratic_log_form needs a positive definite sigma; smallest eigenvalue "
       << e.min_eigenvalue();
    throw std::domain_error(os.str());
  }
  const ComplexMatrix dt = e.eigenvectors.adjoint() * delta.matrix() * e.eigenvectors;
  const int n = sigma.dim();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double si = e.eigenvalues(i);
    for (int j = 0; j < n; ++j) {
      const double sj = e.eigenvalues(j);
      double coeff;
      if (i == j || std::abs(si - sj) < degeneracy_tol * std::max(si, sj)) {
        coeff = 1.0 / si;
      } else {
        coeff = (std::log(si) - std::log(sj)) / (si - sj);
      }
      total += std::norm(dt(i, j)) * coeff;
    }
  }
  return total;
}

}  // namespace qrebound
