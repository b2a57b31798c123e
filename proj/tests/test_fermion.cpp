#include "gep/fermion.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace gep;

TEST_CASE("momentum grid shape and symmetry") {
  const std::vector<double> grid = momentum_grid(8);
  REQUIRE(grid.size() == 8);
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(grid[i]) > 1e-12);                      // no k = 0
    CHECK(std::abs(std::abs(grid[i]) - std::numbers::pi) > 1e-12);  // no pi
    CHECK(grid[i] == doctest::Approx(-grid[grid.size() - 1 - i]));
    if (i > 0) CHECK(grid[i] > grid[i - 1]);
  }
  CHECK(grid[4] == doctest::Approx(std::numbers::pi / 8));
  CHECK_THROWS_AS((void)momentum_grid(7), std::invalid_argument);
}

TEST_CASE("dispersion values") {
  CHECK(dispersion(0.0, 0.7, 1.234) == doctest::Approx(2.0));
  CHECK(dispersion(0.5, 1.0, std::numbers::pi / 3) == doctest::Approx(2.0));
  // Gap closes linearly at criticality: eps ~ 2k for small k.
  const double k = std::numbers::pi / 100;
  CHECK(dispersion(0.5, 1.0, k) == doctest::Approx(2 * k).epsilon(0.01));
}

TEST_CASE("Bogoliubov coefficients") {
  const BdgCoefficients free = bdg_coefficients(0.0, 1.0, 0.4);
  CHECK(free.xi == doctest::Approx(2.0));
  CHECK(free.delta == doctest::Approx(0.0));
  CHECK(free.u == doctest::Approx(1.0));
  CHECK(free.v == doctest::Approx(0.0));

  const BdgCoefficients c = bdg_coefficients(0.5, 1.0, std::numbers::pi / 2);
  CHECK(c.v * c.v ==
        doctest::Approx((1.0 - 1.0 / std::sqrt(2.0)) / 2).epsilon(1e-12));

  std::mt19937 rng(21);
  std::uniform_real_distribution<double> gd(0.0, 2.0), kd(-3.1, 3.1),
      gammad(0.1, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double g = gd(rng), gamma = gammad(rng), k = kd(rng);
    const BdgCoefficients b = bdg_coefficients(g, gamma, k);
    CHECK(b.u * b.u + b.v * b.v == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::sqrt(b.xi * b.xi + 4 * b.delta * b.delta) ==
          doctest::Approx(dispersion(g, gamma, k)).epsilon(1e-12));
    // u even, v odd under k -> -k.
    const BdgCoefficients m = bdg_coefficients(g, gamma, -k);
    CHECK(m.u == doctest::Approx(b.u).epsilon(1e-14));
    CHECK(m.v == doctest::Approx(-b.v).epsilon(1e-14));
  }
}

TEST_CASE("analytic ground energy") {
  CHECK(ground_energy_analytic({4, 0.0, 1.0}) == doctest::Approx(-4.0));
  // Energy per site at g = 0 is exactly -1.
  CHECK(ground_energy_analytic({4096, 0.0, 1.0}) / 4096 ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("finite-size purity values") {
  CHECK(purity_uN_finite({8, 0.0, 0.6}) == doctest::Approx(1.0));
  CHECK(purity_uN_finite({4, 0.5, 1.0}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(purity_uN_finite({1000, 0.3, 1.0}) ==
        doctest::Approx(0.82).epsilon(1e-2));
}

TEST_CASE("thermodynamic purity closed form") {
  for (double gamma : {0.1, 0.4, 0.8, 1.0})
    CHECK(purity_uN_thermo(0.0, gamma) == 1.0);
  CHECK(purity_uN_thermo(0.7, 0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(purity_uN_thermo(0.25, 0.5) ==
        doctest::Approx(0.9635332025165139).epsilon(1e-12));
  // Continuity at the critical point, both branches.
  for (double gamma : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const double left = purity_uN_thermo(kCriticalCoupling, gamma);
    const double right = purity_uN_thermo(kCriticalCoupling + 1e-15, gamma);
    CHECK(std::abs(left - right) <= 1e-12);
    CHECK(left == doctest::Approx(1.0 / (1.0 + gamma)).epsilon(1e-12));
  }
  CHECK(purity_uN_thermo(0.5, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)purity_uN_thermo(0.2, 0.0), std::invalid_argument);
}

TEST_CASE("shifted purity acts as a disorder parameter") {
  CHECK(shifted_purity(0.7, 1.0) == 0.0);
  CHECK(shifted_purity(0.0, 1.0) == doctest::Approx(0.5));
  CHECK(shifted_purity(0.4, 1.0) == doctest::Approx(0.18).epsilon(1e-12));
  for (double gamma : {0.25, 0.5, 1.0}) {
    CHECK(shifted_purity(0.499999, gamma) > 0.0);
    CHECK(shifted_purity(0.500001, gamma) == 0.0);
  }
}

TEST_CASE("purity is monotonically decreasing below g_c at gamma = 1") {
  double prev = purity_uN_thermo(0.0, 1.0);
  for (int i = 1; i <= 100; ++i) {
    const double value = purity_uN_thermo(0.005 * i, 1.0);
    CHECK(value < prev);
    prev = value;
  }
}

TEST_CASE("number-variance identity") {
  CHECK(number_variance({8, 0.0, 1.0}) == doctest::Approx(0.0));
  CHECK(number_variance({4, 0.5, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937 rng(22);
  std::uniform_real_distribution<double> gd(0.0, 2.0), gammad(0.05, 1.0);
  std::uniform_int_distribution<int> nd(2, 16);
  for (int rep = 0; rep < 100; ++rep) {
    const ChainParams p{2 * nd(rng), gd(rng), gammad(rng)};
    const double identity =
        1.0 - 2.0 / p.n_sites * number_variance(p) - purity_uN_finite(p);
    CHECK(std::abs(identity) <= 1e-12);
  }
}

TEST_CASE("quadratic-algebra purity is maximal everywhere") {
  for (double g : {0.0, 0.2, 0.5, 1.0, 3.0})
    for (double gamma : {0.1, 0.4, 1.0})
      CHECK(purity_so2N({10, g, gamma}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("purity is invariant under mode relabeling k -> -k") {
  // v^2 is even in k, so summing over the positive half-grid twice must
  // reproduce the full-grid sum.
  const ChainParams p{12, 0.35, 0.8};
  double half = 0.0;
  for (double k : momentum_grid(p.n_sites)) {
    if (k < 0) continue;
    const BdgCoefficients c = bdg_coefficients(p.g, p.gamma, k);
    const double d = c.v * c.v - 0.5;
    half += 2.0 * d * d;
  }
  CHECK(4.0 / p.n_sites * half ==
        doctest::Approx(purity_uN_finite(p)).epsilon(1e-14));
}

TEST_CASE("critical exponent fit near g_c") {
  const ExponentFit fit = critical_exponent_fit(1.0, 0.40, 0.49, 50);
  CHECK(fit.nu == doctest::Approx(1.0).epsilon(0.05));
  CHECK(fit.r_squared > 0.999);

  // Away from the critical window the fit is still well-defined but the
  // slope need not be 1.
  const ExponentFit far = critical_exponent_fit(1.0, 0.10, 0.20, 50);
  CHECK(std::isfinite(far.nu));

  CHECK_THROWS_AS((void)critical_exponent_fit(1.0, 0.45, 0.5, 50),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)critical_exponent_fit(1.0, 0.45, 0.44, 50),
                  std::invalid_argument);
}

TEST_CASE("parameter validation") {
  const ChainParams odd{7, 0.1, 0.5};
  const ChainParams neg_g{8, -0.1, 0.5};
  const ChainParams big_gamma{8, 0.1, 1.5};
  const ChainParams ok{8, 0.1, 0.5};
  CHECK_THROWS_AS(validate(odd), std::invalid_argument);
  CHECK_THROWS_AS(validate(neg_g), std::invalid_argument);
  CHECK_THROWS_AS(validate(big_gamma), std::invalid_argument);
  CHECK_NOTHROW(validate(ok));
}
