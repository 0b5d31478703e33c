#include <cmath>
#include <random>

#include "doctest.h"
#include "qrebound/norms.hpp"

using namespace qrebound;

namespace {

DensityMatrix diag_state(std::initializer_list<double> v) {
  std::vector<double> d(v);
  return DensityMatrix::diagonal(d);
}

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("parsing and printing") {
    CHECK(NormKind::parse("trace") == NormKind::trace());
    CHECK(NormKind::parse("operator") == NormKind::operator_norm());
    CHECK(NormKind::parse("kyfan:3") == NormKind::ky_fan(3));
    CHECK(NormKind::parse("schatten:1.5") == NormKind::schatten(1.5));
    CHECK(NormKind::parse("schatten:inf") == NormKind::operator_norm());
    for (const char* s : {"trace", "operator", "kyfan:2", "schatten:3"})
      CHECK(NormKind::parse(s).to_string() == s);
    CHECK_THROWS_AS(NormKind::parse("kyfan:0"), std::invalid_argument);
    CHECK_THROWS_AS(NormKind::parse("kyfan:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(NormKind::parse("schatten:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(NormKind::parse("frobenius"), std::invalid_argument);
  }

  TEST_CASE("norms of F") {
    for (int d = 2; d <= 5; ++d) {
      CHECK(norm_of_F(d, NormKind::trace()) == 2.0);
      CHECK(norm_of_F(d, NormKind::operator_norm()) == 1.0);
      CHECK(norm_of_F(d, NormKind::ky_fan(1)) == 1.0);
      for (int k = 2; k <= d; ++k) CHECK(norm_of_F(d, NormKind::ky_fan(k)) == 2.0);
      for (double q : {1.5, 2.0, 3.0})
        CHECK(norm_of_F(d, NormKind::schatten(q)) == doctest::Approx(std::pow(2.0, 1.0 / q)));
    }
    CHECK_THROWS_AS(norm_of_F(2, NormKind::ky_fan(3)), std::invalid_argument);
  }

  TEST_CASE("singular values of a Hermitian matrix") {
    std::vector<double> d{-3.0, 1.0, 2.0};
    const RealVector s = singular_values(HermitianMatrix::diagonal(d));
    CHECK(s(0) == 3.0);
    CHECK(s(1) == 2.0);
    CHECK(s(2) == 1.0);
    const HermitianMatrix a = HermitianMatrix::diagonal(d);
    CHECK(norm(a, NormKind::ky_fan(2)) == 5.0);
    CHECK(norm(a, NormKind::schatten(2.0)) == doctest::Approx(std::sqrt(14.0)));
  }

  TEST_CASE("rescaled distance") {
    const DensityMatrix e1 = diag_state({1.0, 0.0});
    const DensityMatrix e2 = diag_state({0.0, 1.0});
    const DensityMatrix mm = DensityMatrix::maximally_mixed(2);
    for (const char* k : {"trace", "operator", "kyfan:1", "kyfan:2", "schatten:1.5", "schatten:3"}) {
      CHECK(rescaled_distance(e1, e1, NormKind::parse(k)) == 0.0);
      CHECK(rescaled_distance(e1, e2, NormKind::parse(k)) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(rescaled_distance(e1, mm, NormKind::trace()) == doctest::Approx(0.5));
    CHECK_THROWS_AS(rescaled_distance(e1, DensityMatrix::maximally_mixed(3), NormKind::trace()),
                    std::invalid_argument);
  }

  TEST_CASE("trace distances") {
    const DensityMatrix a = diag_state({0.6, 0.4});
    const DensityMatrix b = diag_state({0.5, 0.5});
    CHECK(trace_distance_full(a, b) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(trace_distance_half(a, b) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(trace_distance_full(a, a) == 0.0);
    const DensityMatrix e1 = diag_state({1.0, 0.0});
    const DensityMatrix e2 = diag_state({0.0, 1.0});
    CHECK(trace_distance_full(e1, e2) == 2.0);
    CHECK(trace_distance_half(e1, e2) == 1.0);
  }

  TEST_CASE("rescaled distance stays in the unit interval") {
    std::mt19937_64 rng(17);
    for (int d = 2; d <= 5; ++d) {
      for (int rep = 0; rep < 100; ++rep) {
        const DensityMatrix r = random_density(d, rng());
        const DensityMatrix s = random_density(d, rng());
        for (const char* k : {"trace", "operator", "kyfan:2", "schatten:2"}) {
          const double t = rescaled_distance(r, s, NormKind::parse(k));
          CHECK(t >= 0.0);
          CHECK(t <= 1.0 + 1e-12);
        }
      }
    }
  }
}
