#include <cmath>
#include <random>

#include "doctest.h"
#include "qrebound/entropy.hpp"

using namespace qrebound;

namespace {

DensityMatrix diag_state(std::initializer_list<double> v) {
  std::vector<double> d(v);
  return DensityMatrix::diagonal(d);
}

}  // namespace

TEST_SUITE("entropy") {
  TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(diag_state({1.0, 0.0, 0.0})) == 0.0);
    for (int d = 2; d <= 5; ++d)
      CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(d)) ==
            doctest::Approx(std::log(d)).epsilon(1e-14));
    CHECK(von_neumann_entropy(diag_state({0.6, 0.4})) ==
          doctest::Approx(0.67301166700925644).epsilon(1e-14));
  }

  TEST_CASE("relative entropy values") {
    const DensityMatrix a = diag_state({0.6, 0.4});
    CHECK(relative_entropy(a, a).value() == 0.0);
    CHECK(relative_entropy(a, DensityMatrix::maximally_mixed(2)).value() ==
          doctest::Approx(0.020135513550688873).epsilon(1e-13));

    const ExtendedReal inf = relative_entropy(diag_state({1.0, 0.0}), diag_state({0.0, 1.0}));
    CHECK(inf.is_infinite());
    CHECK(std::isinf(inf.value()));
    CHECK(relative_entropy(diag_state({1.0, 0.0}), diag_state({0.5, 0.5})).value() ==
          doctest::Approx(std::log(2.0)));
  }

  TEST_CASE("support leakage in a rotated basis is infinite") {
    ComplexVector psi(2), phi(2);
    psi << 1.0, 0.0;
    phi << std::cos(0.3), std::sin(0.3);
    CHECK(relative_entropy(pure_state(psi), pure_state(phi)).is_infinite());
    CHECK(relative_entropy(pure_state(phi), pure_state(phi)).value() == doctest::Approx(0.0));
  }

  TEST_CASE("negative input is a domain error") {
    std::vector<double> neg{1.2, -0.2}, pos{0.5, 0.5};
    CHECK_THROWS_AS(relative_entropy(HermitianMatrix::diagonal(neg), HermitianMatrix::diagonal(pos)),
                    std::domain_error);
  }

  TEST_CASE("gradient matches a finite difference") {
    std::mt19937_64 rng(21);
    for (int d = 2; d <= 5; ++d) {
      for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = random_density_min_eig(d, 0.05 / d, rng());
        const DensityMatrix sigma = random_density_min_eig(d, 0.05 / d, rng());
        const HermitianMatrix delta =
            (random_density(d, rng()).matrix() - random_density(d, rng()).matrix()) * 0.1;
        const double eps = 1e-5;
        const double up = relative_entropy(rho.matrix() + delta * eps, sigma.matrix()).value();
        const double dn = relative_entropy(rho.matrix() - delta * eps, sigma.matrix()).value();
        const double dir = trace_product(delta, relative_entropy_gradient(rho, sigma));
        CHECK(std::abs((up - dn) / (2 * eps) - dir) <= 1e-6 * (1.0 + std::abs(dir)));
      }
    }
    const DensityMatrix r = diag_state({0.3, 0.7});
    const HermitianMatrix g = relative_entropy_gradient(r, r);
    CHECK((g.matrix() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("fidelity and Bures distance") {
    const DensityMatrix a = diag_state({0.6, 0.4});
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bures_distance(a, a) < 1e-6);
    const DensityMatrix e1 = diag_state({1.0, 0.0});
    const DensityMatrix e2 = diag_state({0.0, 1.0});
    CHECK(fidelity(e1, e2) == 0.0);
    CHECK(bures_distance(e1, e2) == doctest::Approx(2.0));

    std::mt19937_64 rng(4);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
      ComplexVector psi(3), phi(3);
      for (int i = 0; i < 3; ++i) {
        psi(i) = Complex(n(rng), n(rng));
        phi(i) = Complex(n(rng), n(rng));
      }
      const double overlap = std::abs(psi.normalized().dot(phi.normalized()));
      CHECK(fidelity(pure_state(psi), pure_state(phi)) == doctest::Approx(overlap).epsilon(1e-10));
    }
  }

  TEST_CASE("Klein inequality on random pairs") {
    for (int d = 2; d <= 5; ++d)
      for (std::uint64_t s = 0; s < 100; ++s)
        CHECK(relative_entropy(random_density(d, 2 * s), random_density(d, 2 * s + 1)).value() >=
              0.0);
  }
}
