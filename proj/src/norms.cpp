#include "qrebound/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qrebound {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  std::string s(text);
  if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    std::ostringstream os;
    os << "cannot parse " << what << " from '" << s << "'";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

NormKind NormKind::ky_fan(int k) {
  if (k < 1) throw std::invalid_argument("Ky Fan norm needs k >= 1");
  return NormKind(Family::KyFan, k);
}

NormKind NormKind::schatten(double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("Schatten norm needs q >= 1");
  if (std::isinf(q)) return operator_norm();
  return NormKind(Family::Schatten, q);
}

NormKind NormKind::parse(std::string_view text) {
  if (text == "trace") return trace();
  if (text == "operator") return operator_norm();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg = text.substr(colon + 1);
    if (head == "kyfan") {
      const double k = parse_number(arg, "Ky Fan index");
      if (k != std::floor(k) || k < 1 || k > 1e6)
        throw std::invalid_argument("Ky Fan index must be a positive integer");
      return ky_fan(static_cast<int>(k));
    }
    if (head == "schatten") return schatten(parse_number(arg, "Schatten exponent"));
  }
  std::ostringstream os;
  os << "unknown norm '" << text << "' (expected trace, operator, kyfan:k or schatten:q)";
  throw std::invalid_argument(os.str());
}

std::string NormKind::to_string() const {
  switch (family_) {
    case Family::Trace:
      return "trace";
    case Family::Operator:
      return "operator";
    case Family::KyFan:
      return "kyfan:" + std::to_string(k());
    case Family::Schatten: {
      std::ostringstream os;
      os << "schatten:" << q();
      return os.str();
    }
  }
  return "?";
}

RealVector singular_values(const HermitianMatrix& a) {
  RealVector s = eig_hermitian(a).eigenvalues.cwiseAbs();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

double norm_of_singular_values(const RealVector& s, NormKind kind) {
  const int d = static_cast<int>(s.size());
  switch (kind.family()) {
    case NormKind::Family::Trace:
      return s.sum();
    case NormKind::Family::Operator:
      return d > 0 ? s(0) : 0.0;
    case NormKind::Family::KyFan: {
      if (kind.k() > d) {
        std::ostringstream os;
        os << "Ky Fan index " << kind.k() << " exceeds dimension " << d;
        throw std::invalid_argument(os.str());
      }
      return s.head(kind.k()).sum();
    }
    case NormKind::Family::Schatten: {
      const double q = kind.q();
      const double smax = d > 0 ? s(0) : 0.0;
      if (smax == 0.0) return 0.0;
      // Scale by the largest singular value to keep s^q in range.
      double acc = 0.0;
      for (int i = 0; i < d; ++i) acc += std::pow(s(i) / smax, q);
      return smax * std::pow(acc, 1.0 / q);
    }
  }
  return 0.0;
}

double norm(const HermitianMatrix& a, NormKind kind) {
  return norm_of_singular_values(singular_values(a), kind);
}

double norm_of_F(int d, NormKind kind) {
  return norm(special_F(d), kind);
}

double rescaled_distance(const DensityMatrix& rho, const DensityMatrix& sigma, NormKind kind) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("rescaled_distance: dimension mismatch");
  if (rho.dim() < 2) throw std::invalid_argument("rescaled_distance: needs dimension >= 2");
  return norm(rho.matrix() - sigma.matrix(), kind) / norm_of_F(rho.dim(), kind);
}

double trace_distance_full(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  return norm(rho.matrix() - sigma.matrix(), NormKind::trace());
}

double trace_distance_half(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 0.5 * trace_distance_full(rho, sigma);
}

}  // namespace qrebound
