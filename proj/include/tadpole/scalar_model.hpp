#pragma once

// Scalar building blocks of the reduced ring problem
//     -U'' + U - 3U^5 = 0,  E = (U')^2 - U^2 + U^6,
// glued to the half-line soliton phi(z) = sech(2z)^{1/2} shifted by a.

#include <cmath>

#include "tadpole/errors.hpp"
#include "tadpole/roots.hpp"

namespace tadpole {

namespace model {

// U* = 3^{-1/4}: maximum of A(u) = u^2 - u^6 on (0,1).
inline const double kUstar = 0.75983568565159245;
// A(U*) = 2/(3*sqrt(3)).
inline const double kAUstar = 0.38490017945975052;
// E0 = -A(U*): lower edge of the admissible energy interval.
inline const double kE0 = -0.38490017945975052;

}  // namespace model

// A(u) = u^2 - u^6, factored so that no cancellation occurs near u = 1.
inline double potential_A(double u) {
    return u * u * (1.0 - u) * (1.0 + u) * (1.0 + u * u);
}

inline double potential_A_prime(double u) {
    return 2.0 * u * (1.0 - 3.0 * u * u * u * u);
}

inline double potential_A_second(double u) {
    return 2.0 * (1.0 - 15.0 * u * u * u * u);
}

// E = -(3/4) A(U0): energy of the ring orbit whose vertex amplitude is U0.
inline double energy_from_U0(double U0) {
    if (!(U0 > 0.0 && U0 < 1.0))
        throw domain_error("energy_from_U0: U0 must lie in (0,1)");
    return -0.75 * potential_A(U0);
}

// Largest root of E + A(u) = 0 with u >= U*.
inline double turning_point_Uplus(double E) {
    if (!(E > model::kE0 && E < 0.0))
        throw domain_error("turning_point_Uplus: no root, E outside (E0, 0)");
    return bisect_newton([E](double u) { return E + potential_A(u); },
                         potential_A_prime, model::kUstar, 1.0, 1e-13);
}

// Soliton shift: e^{2a} = (1 + sqrt(1-U0^4)) / U0^2, written through log1p
// so that both endpoints U0 -> 0, 1 stay accurate.
inline double a_from_U0(double U0) {
    if (!(U0 > 0.0 && U0 < 1.0))
        throw domain_error("a_from_U0: U0 must lie in (0,1)");
    const double s =
        std::sqrt((1.0 - U0) * (1.0 + U0) * (1.0 + U0 * U0));  // sqrt(1-U0^4)
    return 0.5 * (std::log1p(s) - 2.0 * std::log(U0));
}

// exp(-2 a(U0)) without cancellation; used by the mass tail arctan(e^{-2a}).
inline double exp_minus_2a(double U0) {
    const double s = std::sqrt((1.0 - U0) * (1.0 + U0) * (1.0 + U0 * U0));
    return U0 * U0 / (1.0 + s);
}

struct SolitonValue {
    double phi;
    double dphi;
    double d2phi;
};

// phi(z) = sech(2z)^{1/2} with first and second derivatives.  sech is formed
// from exp(-2|z|) so large arguments neither overflow nor lose accuracy.
inline SolitonValue soliton_phi(double z) {
    const double t = 2.0 * std::fabs(z);
    const double e = std::exp(-t);
    const double sech = 2.0 * e / (1.0 + e * e);
    const double tanh_t = (1.0 - e * e) / (1.0 + e * e);
    const double phi = std::sqrt(sech);
    const double sign = z < 0.0 ? -1.0 : 1.0;
    const double dphi = -phi * tanh_t * sign;
    const double d2phi = phi * (1.0 - 3.0 * sech * sech);  // = phi - 3 phi^5
    return {phi, dphi, d2phi};
}

struct RhoRoots {
    double rho1;
    double rho2;
    double rho3;
};

// Roots of E rho + rho^2 - rho^4 = rho (rho1-rho)(rho2-rho)(rho3-rho),
// parametrized by r = |rho3| which solves r(r^2-1) = |E| on (1, 2/sqrt(3)).
inline RhoRoots rho_roots(double E) {
    if (!(E > model::kE0 && E < 0.0))
        throw domain_error("rho_roots: E outside (E0, 0)");
    const double absE = -E;
    const double r_hi = 2.0 / std::sqrt(3.0);
    const double r = bisect_newton(
        [absE](double r) { return r * (r * r - 1.0) - absE; },
        [](double r) { return 3.0 * r * r - 1.0; }, 1.0, r_hi, 1e-13);
    const double s = std::sqrt(std::fmax(4.0 - 3.0 * r * r, 0.0));
    return {0.5 * (r + s), 0.5 * (r - s), -r};
}

struct ModelParams {
    double U0;
    double E;
    double Uplus;
    double a;
};

inline ModelParams make_model_params(double U0) {
    const double E = energy_from_U0(U0);
    return {U0, E, turning_point_Uplus(E), a_from_U0(U0)};
}

}  // namespace tadpole
