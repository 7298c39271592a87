#pragma once

// Critical frequencies of the mass curve: omega1 (mass maximum, located via
// the F = G equation in U0-space) and omega0 (mu = pi/2 crossing), plus the
// variational classification of waves by frequency interval.

#include <cmath>
#include <utility>

#include "tadpole/errors.hpp"
#include "tadpole/quadrature.hpp"
#include "tadpole/roots.hpp"
#include "tadpole/scalar_model.hpp"
#include "tadpole/wave_family.hpp"

namespace tadpole {

enum class WaveClass { GroundState, LocalMinimizer, SaddlePoint };

struct CriticalFrequencies {
    double U1;             // F = G root in (0, U*)
    double omega1;         // mass maximum, = -(T(U1)/pi)^2
    double mu_max;         // mu at omega1
    double omega0;         // mu = pi/2 crossing in (omega1, 0)
    double U0_at_omega0;
    double omega1_by_maximization;  // independent direct-max diagnostic
    double dual_method_rel_gap;     // |omega1 - omega1_max| / |omega1|
};

namespace detail {

inline double family_mass(double U0, const QuadratureSpec& spec) {
    return 2.0 * mass_integral_B(U0, spec) + std::atan(exp_minus_2a(U0));
}

}  // namespace detail

// Root of F(U0) = G(U0): F falls from +inf, G climbs from 0 with a pole at
// U*, so the bracket (0.01, U* - 0.01) always straddles the unique crossing.
inline double find_U1(const QuadratureSpec& spec = {},
                      double root_tol = 1e-10) {
    return bisect(
        [&](double u) { return monotonicity_F(u, spec) - monotonicity_G(u); },
        0.01, model::kUstar - 0.01, root_tol);
}

// Independent check: maximize mu(U0) directly.  Golden section localizes the
// flat maximum coarsely; the argmax is then sharpened by bisecting the sign
// of a five-point finite-difference derivative, which tolerates quadrature
// noise far better than comparing nearly equal mu values.
inline double find_U1_by_maximization(const QuadratureSpec& spec_in = {}) {
    QuadratureSpec spec = spec_in;
    spec.tolerance = std::fmin(spec.tolerance, 1e-12);
    const auto mu = [&](double U0) { return detail::family_mass(U0, spec); };
    const std::pair<double, double> coarse =
        golden_section_max(mu, 0.05, model::kUstar - 0.01, 1e-4);
    const double h = 1e-3;
    const auto dmu = [&](double x) {
        return (-mu(x + 2.0 * h) + 8.0 * mu(x + h) - 8.0 * mu(x - h) +
                mu(x - 2.0 * h)) /
               (12.0 * h);
    };
    double lo = coarse.first - 0.02;
    double hi = coarse.first + 0.02;
    for (int i = 0; i < 8 && dmu(lo) <= 0.0; ++i) lo -= 0.02;
    for (int i = 0; i < 8 && dmu(hi) >= 0.0; ++i) hi += 0.02;
    return bisect(dmu, lo, hi, 1e-9);
}

inline CriticalFrequencies find_critical(const QuadratureSpec& spec = {},
                                         double root_tol = 1e-10) {
    CriticalFrequencies crit;
    crit.U1 = find_U1(spec, root_tol);
    const double T1 = period_T(crit.U1, spec);
    crit.omega1 = -(T1 / kPi) * (T1 / kPi);
    crit.mu_max = detail::family_mass(crit.U1, spec);
    const double half = 1.57079632679489661923;  // pi/2
    crit.U0_at_omega0 = bisect(
        [&](double u) { return detail::family_mass(u, spec) - half; },
        crit.U1, 1.0 - 1e-9, root_tol);
    const double T0 = period_T(crit.U0_at_omega0, spec);
    crit.omega0 = -(T0 / kPi) * (T0 / kPi);
    const double U1m = find_U1_by_maximization(spec);
    const double T1m = period_T(U1m, spec);
    crit.omega1_by_maximization = -(T1m / kPi) * (T1m / kPi);
    crit.dual_method_rel_gap =
        std::fabs(crit.omega1 - crit.omega1_by_maximization) /
        std::fabs(crit.omega1);
    if (!(crit.omega1 < crit.omega0 && crit.omega0 < 0.0))
        throw numerical_error("find_critical: ordering omega1 < omega0 < 0",
                              crit.omega1, crit.omega0);
    if (!(crit.mu_max > half))
        throw numerical_error("find_critical: mu_max must exceed pi/2",
                              crit.mu_max, half);
    return crit;
}

// Trichotomy by frequency: ground state on [omega0, 0), local constrained
// minimizer on (omega1, omega0), saddle point on (-inf, omega1].
inline WaveClass classify(double omega, const CriticalFrequencies& crit) {
    if (!(omega < 0.0)) throw domain_error("classify: omega must be negative");
    if (omega >= crit.omega0) return WaveClass::GroundState;
    if (omega > crit.omega1) return WaveClass::LocalMinimizer;
    return WaveClass::SaddlePoint;
}

}  // namespace tadpole
