#pragma once

// Linearization around the ring profile: W = dU/dE solves
// -W'' + W - 15 U^4 W = 0 with W(0) = -1/A'(U+), W'(0) = 0, and obeys the
// Wronskian-type identity 1 = 2U'W' - 2UW(1 - 3U^4).  The boundary mismatch
// 2W'/W - phi''(a)/phi'(a) being nonzero is the nondegeneracy certificate.

#include <array>
#include <cmath>

#include "tadpole/errors.hpp"
#include "tadpole/ode.hpp"
#include "tadpole/scalar_model.hpp"
#include "tadpole/wave_family.hpp"

namespace tadpole {

struct LinearizedTrace {
    double eps;
    double W_end;             // W(pi eps^2)
    double dW_end;            // W'(pi eps^2)
    double mismatch;          // 2 W'/W - phi''(a)/phi'(a) at z = pi eps^2
    double wronskian_defect;  // max |1 - (2U'W' - 2UW(1-3U^4))| on the path
};

// Joint integration of (U, U', W, W') over [0, pi eps^2], tracking the
// Wronskian identity at every accepted step.
inline LinearizedTrace integrate_W(const WaveSolution& sol,
                                   const OdeOptions& opt = {}) {
    const double T = ring_half_period(sol);
    const double W0 = -1.0 / potential_A_prime(sol.params.Uplus);
    const auto rhs = [](double, const std::array<double, 4>& y,
                        std::array<double, 4>& dy) {
        const double u2 = y[0] * y[0];
        const double u4 = u2 * u2;
        dy[0] = y[1];
        dy[1] = y[0] * (1.0 - 3.0 * u4);
        dy[2] = y[3];
        dy[3] = y[2] * (1.0 - 15.0 * u4);
    };
    double defect = 0.0;
    const auto visit = [&](double, const std::array<double, 4>& y) {
        const double u2 = y[0] * y[0];
        const double w =
            2.0 * y[1] * y[3] - 2.0 * y[0] * y[2] * (1.0 - 3.0 * u2 * u2);
        defect = std::fmax(defect, std::fabs(1.0 - w));
    };
    const std::array<double, 4> yT = ode_integrate_observed<4>(
        rhs, {sol.params.Uplus, 0.0, W0, 0.0}, 0.0, T, visit, opt);
    LinearizedTrace tr{sol.eps, yT[2], yT[3], 0.0, defect};
    const SolitonValue s = soliton_phi(sol.params.a);
    tr.mismatch = 2.0 * tr.dW_end / tr.W_end - s.d2phi / s.dphi;
    return tr;
}

// The nondegeneracy mismatch; signals the exceptional shift a = a0 (where
// phi''(a) = 0) so callers can switch to the W'(pi eps^2) != 0 criterion.
inline double nondegeneracy_mismatch(const WaveSolution& sol,
                                     const OdeOptions& opt = {}) {
    const SolitonValue s = soliton_phi(sol.params.a);
    if (std::fabs(s.d2phi) < 1e-10)
        throw exceptional_point(
            "nondegeneracy_mismatch: phi''(a) = 0 (a = a0); "
            "check W'(pi eps^2) != 0 instead");
    return integrate_W(sol, opt).mismatch;
}

// Defect of the identity 2W'/W = phi''(a) (a'(eps) - 4 pi eps)
//                                / (phi'(a) (a'(eps) - pi eps)),
// obtained by differentiating both matching conditions along the family;
// a'(eps) is a central finite difference through the omega-solver.
inline double check_BC_W_relation(const WaveSolution& sol,
                                  const QuadratureSpec& spec = {},
                                  double fd_step = 1e-5,
                                  const OdeOptions& opt = {}) {
    const SolitonValue s = soliton_phi(sol.params.a);
    if (std::fabs(s.d2phi) < 1e-8)
        throw exceptional_point(
            "check_BC_W_relation: relation degenerates at phi''(a) = 0");
    const LinearizedTrace tr = integrate_W(sol, opt);
    const double eps = sol.eps;
    // The divided difference amplifies the a-root placement by 1/(2 fd_step),
    // and (a' - pi eps) can be small along the family, so the internal
    // inversions run at a much tighter root tolerance than the default.
    const auto a_of_eps = [&](double e) {
        const double e2 = e * e;
        return solve_from_omega(-e2 * e2, spec, 1e-13).params.a;
    };
    const double ap =
        (a_of_eps(eps + fd_step) - a_of_eps(eps - fd_step)) / (2.0 * fd_step);
    const double rhs = s.d2phi * (ap - 4.0 * kPi * eps) /
                       (s.dphi * (ap - kPi * eps));
    return 2.0 * tr.dW_end / tr.W_end - rhs;
}

}  // namespace tadpole
