#include <cmath>
#include <random>

#include "doctest.h"
#include "qrebound/bounds.hpp"
#include "qrebound/witnesses.hpp"

using namespace qrebound;

TEST_SUITE("witnesses") {
  TEST_CASE("lower witness attains s(x)") {
    const StatePair z = witness_lower(0.0, 3);
    CHECK(relative_entropy(z.rho, z.sigma).value() == 0.0);
    const StatePair p = witness_lower(0.1, 2);
    CHECK(relative_entropy(p.rho, p.sigma).value() == doctest::Approx(s_of_x(0.1)).epsilon(1e-9));
    const StatePair q2 = witness_lower(0.5, 2);
    const StatePair q4 = witness_lower(0.5, 4);
    CHECK(relative_entropy(q4.rho, q4.sigma).value() ==
          doctest::Approx(relative_entropy(q2.rho, q2.sigma).value()).epsilon(1e-14));
    for (const char* k : {"trace", "operator", "kyfan:2", "schatten:3"})
      CHECK(rescaled_distance(q4.rho, q4.sigma, NormKind::parse(k)) ==
            doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("upper witness for T <= beta") {
    for (double t : {0.05, 0.15, 0.2, 0.3}) {
      const StatePair p = witness_upper_T_le_beta(t, 0.3, 3);
      const double exact = relative_entropy(p.rho, p.sigma).value();
      CHECK(std::abs(exact - upper_bound_sharp_dgt2(t, 0.3)) <= 1e-12);
      CHECK(std::abs(trace_distance_full(p.rho, p.sigma) - 2 * t) <= 1e-12);
      CHECK(p.sigma.min_eigenvalue() == doctest::Approx(0.3).epsilon(1e-14));
    }
    const StatePair z = witness_upper_T_le_beta(0.0, 0.2, 4);
    CHECK(relative_entropy(z.rho, z.sigma).value() == 0.0);
    const StatePair edge = witness_upper_T_le_beta(1.0 / 3, 1.0 / 3, 3);
    CHECK(relative_entropy(edge.rho, edge.sigma).value() ==
          doctest::Approx(branches::dgt2_high(1.0 / 3, 1.0 / 3)).epsilon(1e-12));
    CHECK_THROWS_AS(witness_upper_T_le_beta(0.4, 0.3, 3), std::invalid_argument);
    CHECK_THROWS_AS(witness_upper_T_le_beta(0.1, 0.3, 2), std::invalid_argument);
  }

  TEST_CASE("upper witness for T > beta") {
    const StatePair p = witness_upper_T_gt_beta(0.5, 0.1, 3, 0);
    CHECK(relative_entropy(p.rho, p.sigma).value() ==
          doctest::Approx(0.6 * std::log(6.0)).epsilon(1e-13));
    const StatePair q = witness_upper_T_gt_beta(0.5, 0.1, 4, 1);
    CHECK(relative_entropy(q.rho, q.sigma).value() ==
          doctest::Approx(0.6 * std::log(6.0)).epsilon(1e-13));
    for (int d : {3, 4}) {
      for (double t : {0.2, 0.5, 0.7}) {
        const StatePair w = witness_upper_T_gt_beta(t, 0.1, d, 0);
        const BoundReport r = bound_report(w.rho, w.sigma);
        CHECK(std::abs(r.exact.value() - r.upper_sharp) <= 1e-12);
        CHECK(std::abs(r.t_trace_full - 2 * t) <= 1e-12);
      }
    }
    const StatePair b = witness_upper_T_gt_beta(0.1, 0.1, 3, 0);
    CHECK(relative_entropy(b.rho, b.sigma).value() ==
          doctest::Approx(branches::dgt2_low(0.1, 0.1)).epsilon(1e-12));
  }

  TEST_CASE("infeasible T > beta witnesses name the condition") {
    auto message = [](auto&& f) {
      try {
        f();
      } catch (const std::invalid_argument& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message([] { witness_upper_T_gt_beta(0.5, 0.1, 3, 1); }).find("J <= d-3") !=
          std::string::npos);
    CHECK(message([] { witness_upper_T_gt_beta(0.05, 0.1, 3, 0); }).find("beta <= T") !=
          std::string::npos);
    CHECK(message([] { witness_upper_T_gt_beta(0.9, 0.1, 3, 0); }).find("T <= 1-2*beta") !=
          std::string::npos);
    CHECK(message([] { witness_upper_T_gt_beta(0.75, 0.1, 5, 0); }).find("T <= 1-(d-1-J)*beta") !=
          std::string::npos);
    CHECK(message([] { witness_upper_T_gt_beta(0.15, 0.1, 5, 2); }).find("J*beta <= T") !=
          std::string::npos);
  }

  TEST_CASE("counterexample to the combined bound") {
    for (double r : {1.0, 10.0, 100.0, 1000.0, 0.01}) {
      const Counterexample c = counterexample_bad_bound(r);
      CHECK(c.margin > 0.0);
      CHECK(c.p > c.q);
      const double lhs = binary_relative_entropy(c.p, c.q);
      const double rhs = r * 2 * (c.p - c.q) * (c.p - c.q) * std::abs(std::log(c.q));
      CHECK(lhs > rhs);
    }
    CHECK_THROWS_AS(counterexample_bad_bound(0.0), std::invalid_argument);
  }

  TEST_CASE("extremal psi for d = 2") {
    const ExtremalPsiCheck a = extremal_psi_check_d2(0.2, 0.3, 10000);
    CHECK(a.passed());
    CHECK(std::max(a.endpoint_e1, a.endpoint_e2) == doctest::Approx(0.1163217565860045));
    const ExtremalPsiCheck b = extremal_psi_check_d2(0.5, 0.1, 10000);
    CHECK(b.passed());
    CHECK(b.bound == doctest::Approx(std::max(branches::d2_high_e1(0.5, 0.1),
                                              branches::d2_high_e2(0.5, 0.1))));
    CHECK(d2_maximand(0.5, 0.1, 0.0) == doctest::Approx(b.endpoint_e1));
    CHECK_THROWS_AS(extremal_psi_check_d2(0.2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(extremal_psi_check_d2(0.8, 0.3), std::invalid_argument);
  }

  TEST_CASE("second derivative at the maximally mixed state") {
    for (int d : {2, 3, 4}) {
      std::mt19937_64 rng(d);
      const DensityMatrix mm = DensityMatrix::maximally_mixed(d);
      const StateDelta delta(
          (random_density(d, rng()).matrix() - random_density(d, rng()).matrix()) * 0.1);
      const SecondDerivativeCheck c = second_derivative_check(mm, delta);
      CHECK(c.maximally_mixed);
      CHECK(c.passed());
      CHECK(std::abs(c.finite_difference - c.closed_form) <= 1e-6);
      CHECK(c.closed_form == doctest::Approx(c.quadratic_curvature).epsilon(1e-12));
    }
    const SecondDerivativeCheck f =
        second_derivative_check(DensityMatrix::maximally_mixed(2), StateDelta(special_F(2) * 0.1));
    CHECK(f.equality);
    const SecondDerivativeCheck z =
        second_derivative_check(DensityMatrix::maximally_mixed(3), StateDelta(HermitianMatrix::zero(3)));
    CHECK(z.finite_difference == 0.0);
    CHECK(z.closed_form == 0.0);
  }

  TEST_CASE("second derivative at generic states") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 100; ++rep) {
      const int d = 2 + rep % 4;
      const DensityMatrix sigma = random_density_min_eig(d, 0.05 / d, rng());
      const StateDelta delta(
          (random_density(d, rng()).matrix() - random_density(d, rng()).matrix()) * 0.1);
      const SecondDerivativeCheck c = second_derivative_check(sigma, delta);
      CHECK(c.passed());
      CHECK(c.closed_form <= c.quadratic_curvature + 1e-12);
    }
  }
}
