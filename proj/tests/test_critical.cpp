#include <catch_amalgamated.hpp>

#include <cmath>

#include "tadpole/critical.hpp"

using namespace tadpole;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// References frozen from 50-digit arithmetic:
//   U1     = 0.3826773982661446368137   (root of F = G)
//   omega1 = -0.2574818566275460682738  (mass maximum)
//   mu_max = 1.632831350779624748559
//   omega0 = -0.1334094210686738976991  (mu = pi/2 crossing)
//   U0(omega0) = 0.5754907197257413575025

TEST_CASE("critical frequencies") {
    const CriticalFrequencies crit = find_critical();

    REQUIRE_THAT(crit.U1, WithinAbs(0.3826773982661446368137, 1e-9));
    REQUIRE_THAT(crit.omega1, WithinAbs(-0.2574818566275460682738, 1e-9));
    REQUIRE_THAT(crit.mu_max, WithinAbs(1.632831350779624748559, 1e-10));
    REQUIRE_THAT(crit.omega0, WithinAbs(-0.1334094210686738976991, 1e-9));
    REQUIRE_THAT(crit.U0_at_omega0,
                 WithinAbs(0.5754907197257413575025, 1e-9));

    // Ordering claim: -inf < omega1 < omega0 < 0, and the maximum exceeds
    // the half-line level pi/2.
    REQUIRE(crit.omega1 < crit.omega0);
    REQUIRE(crit.omega0 < 0.0);
    REQUIRE(crit.mu_max > kPi / 2.0);

    // U1 solves F = G.
    REQUIRE_THAT(monotonicity_F(crit.U1),
                 WithinAbs(monotonicity_G(crit.U1), 1e-9));

    // mu'(U0) changes sign across U1.
    REQUIRE(mass_derivative_sign(crit.U1 - 0.01) > 0.0);
    REQUIRE(mass_derivative_sign(crit.U1 + 0.01) < 0.0);

    // mu at the crossing actually equals pi/2.
    REQUIRE_THAT(solve_from_U0(crit.U0_at_omega0).mu,
                 WithinAbs(kPi / 2.0, 1e-8));

    // The two independent locators of omega1 agree.
    REQUIRE(crit.dual_method_rel_gap <= 1e-6);
    REQUIRE_THAT(crit.omega1_by_maximization, WithinRel(crit.omega1, 1e-6));
}

TEST_CASE("classification against the critical frequencies") {
    const CriticalFrequencies crit = find_critical();

    REQUIRE(classify(-0.05, crit) == WaveClass::GroundState);
    REQUIRE(classify(crit.omega0, crit) == WaveClass::GroundState);
    REQUIRE(classify(-0.2, crit) == WaveClass::LocalMinimizer);
    REQUIRE(classify(crit.omega1 + 1e-9, crit) ==
            WaveClass::LocalMinimizer);
    REQUIRE(classify(crit.omega1, crit) == WaveClass::SaddlePoint);
    REQUIRE(classify(-1.0, crit) == WaveClass::SaddlePoint);
    REQUIRE(classify(-100.0, crit) == WaveClass::SaddlePoint);

    REQUIRE_THROWS_AS(classify(0.0, crit), domain_error);
    REQUIRE_THROWS_AS(classify(0.3, crit), domain_error);
}

TEST_CASE("mass level set matches the classification boundary") {
    const CriticalFrequencies crit = find_critical();
    // mu < pi/2 exactly on (omega0, 0); mu > pi/2 on (omega1, omega0).
    for (double t : {0.1, 0.4, 0.7, 0.95}) {
        const double above = crit.omega0 * t;  // in (omega0, 0)
        REQUIRE(solve_from_omega(above).mu < kPi / 2.0);
        const double below =
            crit.omega0 + (crit.omega1 - crit.omega0) * t;
        REQUIRE(solve_from_omega(below).mu > kPi / 2.0);
    }
    // Far side of the maximum the mass falls back below pi/2 only in the
    // limit; at omega1 it is the maximum.
    REQUIRE_THAT(solve_from_omega(crit.omega1).mu,
                 WithinAbs(crit.mu_max, 1e-9));
}
