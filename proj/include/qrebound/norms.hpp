#pragma once

#include <string>
#include <string_view>

#include "qrebound/linalg.hpp"
#include "qrebound/states.hpp"

namespace qrebound {

/// A unitarily invariant norm: trace, operator, Ky Fan k or Schatten q.
/// Schatten q = ∞ is stored as Operator.
class NormKind {
 public:
  enum class Family { Trace, Operator, KyFan, Schatten };

  static NormKind trace() { return NormKind(Family::Trace, 0.0); }
  static NormKind operator_norm() { return NormKind(Family::Operator, 0.0); }
  static NormKind ky_fan(int k);
  static NormKind schatten(double q);

  /// Accepts "trace", "operator", "kyfan:k", "schatten:q" (q may be "inf").
  static NormKind parse(std::string_view text);
  std::string to_string() const;

  Family family() const { return family_; }
  int k() const { return static_cast<int>(param_); }
  double q() const { return param_; }

  bool operator==(const NormKind&) const = default;

 private:
  NormKind(Family f, double p) : family_(f), param_(p) {}
  Family family_;
  double param_;
};

/// Singular values of a Hermitian matrix (absolute eigenvalues), sorted
/// non-increasing.
RealVector singular_values(const HermitianMatrix& a);

double norm(const HermitianMatrix& a, NormKind kind);
/// Same norm evaluated on a precomputed, non-increasing singular-value list.
double norm_of_singular_values(const RealVector& s, NormKind kind);

/// |||F||| for F = Diag(1, −1, 0, …) in dimension d.
double norm_of_F(int d, NormKind kind);

/// |||ρ − σ||| / |||F|||, a number in [0, 1].
double rescaled_distance(const DensityMatrix& rho, const DensityMatrix& sigma, NormKind kind);

/// Tr|ρ − σ|.
double trace_distance_full(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Tr|ρ − σ| / 2.
double trace_distance_half(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qrebound
