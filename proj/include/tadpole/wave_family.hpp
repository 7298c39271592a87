#pragma once

// Assembles standing waves of the quintic NLS on the tadpole graph: ring
// profile u(x) = eps U(eps^2 x) on [-pi, pi] glued to the half-line soliton
// v(x) = eps phi(eps^2 x + a), with omega = -eps^4 and pi eps^2 = T(U0).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tadpole/elliptic.hpp"
#include "tadpole/errors.hpp"
#include "tadpole/ode.hpp"
#include "tadpole/quadrature.hpp"
#include "tadpole/roots.hpp"
#include "tadpole/scalar_model.hpp"

namespace tadpole {

inline constexpr double kPi = 3.14159265358979323846;

struct WaveSolution {
    ModelParams params;
    double eps;    // omega = -eps^4
    double omega;  // < 0
    double mu;     // L^2 mass of the full graph profile
    RhoRoots rho;
    double nu;  // sqrt(rho1 (rho2 - rho3))
    double k;   // sqrt(|rho3| (rho1 - rho2)) / nu
};

struct GraphNode {
    double x;
    double value;
    double deriv;
};

struct GraphFunction {
    std::vector<GraphNode> ring_nodes;  // x in [-pi, pi], symmetric profile
    std::vector<GraphNode> tail_nodes;  // x in [0, L_trunc]
    double L_trunc;
    double omega;
};

// Half period of the ring orbit in the scaled variable z; equals pi eps^2.
inline double ring_half_period(const WaveSolution& sol) {
    return kPi * sol.eps * sol.eps;
}

inline WaveSolution solve_from_U0(double U0, const QuadratureSpec& spec = {}) {
    WaveSolution sol;
    sol.params = make_model_params(U0);
    const double T = period_T(sol.params, spec);
    const double eps2 = T / kPi;
    sol.eps = std::sqrt(eps2);
    sol.omega = -eps2 * eps2;
    sol.mu = 2.0 * mass_integral_B(sol.params, spec) +
             std::atan(exp_minus_2a(U0));
    sol.rho = rho_roots(sol.params.E);
    sol.nu = std::sqrt(sol.rho.rho1 * (sol.rho.rho2 - sol.rho.rho3));
    sol.k = std::sqrt(-sol.rho.rho3 * (sol.rho.rho1 - sol.rho.rho2)) / sol.nu;
    return sol;
}

// Inverts T(U0) = pi sqrt|omega| by bisection in the soliton shift a, using
// that a -> U0 = phi(a) is a strictly decreasing bijection and T is strictly
// increasing in a; uniform in a avoids the doubly-exponential U0 range.
inline WaveSolution solve_from_omega(double omega,
                                     const QuadratureSpec& spec = {},
                                     double root_tol = 1e-10) {
    if (!(omega < 0.0))
        throw domain_error("solve_from_omega: omega must be negative");
    const double T_target = kPi * std::sqrt(-omega);
    const auto defect = [&](double a) {
        return period_T(make_model_params(soliton_phi(a).phi), spec) -
               T_target;
    };
    double a_lo = std::fmax(0.25 * T_target, 1e-9);
    double a_hi = T_target + 2.0;
    for (int i = 0; i < 200 && defect(a_lo) > 0.0; ++i) a_lo *= 0.25;
    for (int i = 0; i < 200 && defect(a_hi) < 0.0; ++i) a_hi *= 2.0;
    const double a =
        bisect(defect, a_lo, a_hi, root_tol * (1.0 + std::fabs(a_hi)));
    return solve_from_U0(soliton_phi(a).phi, spec);
}

namespace detail {

struct RingPoint {
    double rho;
    double drho;  // d rho / dz
};

inline RingPoint ring_rho(const WaveSolution& sol, double z) {
    const double rho1 = sol.rho.rho1;
    const double abs3 = -sol.rho.rho3;
    const EllipticEval e = jacobi(sol.nu * z, sol.k);
    const double dn2 = e.dn * e.dn;
    const double denom = rho1 * (1.0 - dn2) + abs3;  // rho1+|rho3|-rho1 dn^2
    const double rho = rho1 * abs3 * dn2 / denom;
    const double drho = -2.0 * sol.k * sol.k * sol.nu * e.sn * e.cn * e.dn *
                        rho1 * abs3 * (rho1 + abs3) / (denom * denom);
    return {rho, drho};
}

}  // namespace detail

// Exact ring profile U(z) = sqrt(rho(z)) on [0, pi eps^2].
inline double profile_exact(const WaveSolution& sol, double z) {
    return std::sqrt(detail::ring_rho(sol, z).rho);
}

// (U, U') from the elliptic closed form; U' = rho' / (2 U).
inline std::array<double, 2> profile_exact_d(const WaveSolution& sol,
                                             double z) {
    const detail::RingPoint p = detail::ring_rho(sol, z);
    const double U = std::sqrt(p.rho);
    return {U, p.drho / (2.0 * U)};
}

struct RingSample {
    double z;
    double U;
    double dU;
};

// Independent reconstruction of U by adaptive integration of U'' = U - 3U^5
// from (U+, 0); n uniform samples on [0, pi eps^2].
inline std::vector<RingSample> profile_ode(const WaveSolution& sol, int n,
                                           const OdeOptions& opt = {}) {
    if (n < 2) throw domain_error("profile_ode: need n >= 2");
    const double T = ring_half_period(sol);
    std::vector<double> zs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) zs[i] = T * i / (n - 1);
    std::vector<RingSample> out(zs.size());
    const auto rhs = [](double, const std::array<double, 2>& y,
                        std::array<double, 2>& dy) {
        const double u2 = y[0] * y[0];
        dy[0] = y[1];
        dy[1] = y[0] - 3.0 * u2 * u2 * y[0];
    };
    ode_integrate_sampled<2>(
        rhs, {sol.params.Uplus, 0.0}, 0.0, zs,
        [&](std::size_t i, double z, const std::array<double, 2>& y) {
            out[i] = {z, y[0], y[1]};
        },
        opt);
    return out;
}

// Samples the full graph profile; ring on n_ring+1 symmetric nodes, tail on
// n_tail+1 nodes over [0, L_trunc].
inline GraphFunction sample_graph_profile(const WaveSolution& sol, int n_ring,
                                          double L_trunc, int n_tail = -1) {
    if (n_ring < 8) throw domain_error("sample_graph_profile: n_ring >= 8");
    if (!(L_trunc > 0.0))
        throw domain_error("sample_graph_profile: L_trunc > 0");
    if (n_tail < 0) n_tail = n_ring;
    const double eps = sol.eps;
    const double e2 = eps * eps;
    const double e3 = eps * e2;
    GraphFunction gf;
    gf.L_trunc = L_trunc;
    gf.omega = sol.omega;
    gf.ring_nodes.reserve(static_cast<std::size_t>(n_ring) + 1);
    for (int j = 0; j <= n_ring; ++j) {
        const double x = -kPi + 2.0 * kPi * j / n_ring;
        const std::array<double, 2> Ud = profile_exact_d(sol, e2 * std::fabs(x));
        const double sgn = x < 0.0 ? -1.0 : 1.0;
        gf.ring_nodes.push_back({x, eps * Ud[0], sgn * e3 * Ud[1]});
    }
    gf.tail_nodes.reserve(static_cast<std::size_t>(n_tail) + 1);
    for (int j = 0; j <= n_tail; ++j) {
        const double x = L_trunc * j / n_tail;
        const SolitonValue s = soliton_phi(e2 * x + sol.params.a);
        gf.tail_nodes.push_back({x, eps * s.phi, e3 * s.dphi});
    }
    return gf;
}

struct ResidualReport {
    double max_ring_residual;   // -u'' - 3u^5 - omega u by second differences
    double max_tail_residual;
    double vertex_continuity_defect;  // |u(pi) - v(0)| (and u(-pi) symmetric)
    double vertex_flux_defect;        // |u'(pi) - u'(-pi) - v'(0)|
};

inline ResidualReport verify_residuals(const GraphFunction& gf) {
    const auto stationary_defect = [&](const std::vector<GraphNode>& nodes) {
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
            const double h1 = nodes[i].x - nodes[i - 1].x;
            const double h2 = nodes[i + 1].x - nodes[i].x;
            const double second = 2.0 *
                                  (h1 * nodes[i + 1].value -
                                   (h1 + h2) * nodes[i].value +
                                   h2 * nodes[i - 1].value) /
                                  (h1 * h2 * (h1 + h2));
            const double u = nodes[i].value;
            const double u2 = u * u;
            const double r = -second - 3.0 * u2 * u2 * u - gf.omega * u;
            worst = std::fmax(worst, std::fabs(r));
        }
        return worst;
    };
    ResidualReport rep;
    rep.max_ring_residual = stationary_defect(gf.ring_nodes);
    rep.max_tail_residual = stationary_defect(gf.tail_nodes);
    const GraphNode& left = gf.ring_nodes.front();
    const GraphNode& right = gf.ring_nodes.back();
    const GraphNode& head = gf.tail_nodes.front();
    rep.vertex_continuity_defect =
        std::fmax(std::fabs(right.value - head.value),
                  std::fabs(left.value - head.value));
    rep.vertex_flux_defect =
        std::fabs(right.deriv - left.deriv - head.deriv);
    return rep;
}

namespace detail {

// Tail integrals of the half-line soliton from Y to infinity:
//   int phi^2      = arctan(e^{-2Y})
//   int phi^6      = (1/2) arctan(e^{-2Y}) - (1/4) sech(2Y) tanh(2Y)
//   int (phi')^2   = (1/2) arctan(e^{-2Y}) + (1/4) sech(2Y) tanh(2Y)
struct SolitonTail {
    double mass;
    double sixth;
    double grad;
};

inline SolitonTail soliton_tail(double Y) {
    const double e = std::exp(-2.0 * Y);
    const double at = std::atan(e);
    const double sech = 2.0 * e / (1.0 + e * e);
    const double tanh = (1.0 - e * e) / (1.0 + e * e);
    const double st = 0.25 * sech * tanh;
    return {at, 0.5 * at - st, 0.5 * at + st};
}

}  // namespace detail

struct VariationalReport {
    double B_omega;      // int |Phi'|^2 + |omega| int Phi^2
    double L6_norm6;     // int Phi^6 over the graph
    double quotient;     // B_omega / (L6_norm6)^{1/3}
    double nehari_defect;  // B_omega / (3 L6_norm6) - 1
    double bound_lo;     // (3/4)(pi |omega|)^{2/3}
    double bound_hi;     // (3/4)(2 pi |omega|)^{2/3}
};

// Quadrature-exact variational data: ring integrals reduce to the family
// kernel (dz = dU/|U'| with |U'| = sqrt(E + A(U))), tail is analytic.
inline VariationalReport variational_report(const WaveSolution& sol,
                                            const QuadratureSpec& spec = {}) {
    const ModelParams& p = sol.params;
    const double e4 = -sol.omega;  // eps^4
    const double ring_grad = 2.0 * integrate_sqrt_endpoint(
        [&](double u) { return p.E + potential_A(u); }, p.U0, p.Uplus, p.E,
        spec);  // 2 int U'^2 dz = 2 int sqrt(E+A) du
    const double ring_sixth = 2.0 * integrate_sqrt_endpoint(
        [](double u) {
            const double u2 = u * u;
            return u2 * u2 * u2;
        },
        p.U0, p.Uplus, p.E, spec);
    const double ring_mass = 2.0 * mass_integral_B(p, spec);
    const detail::SolitonTail tail = detail::soliton_tail(p.a);
    VariationalReport rep;
    rep.B_omega = e4 * (ring_grad + tail.grad + ring_mass + tail.mass);
    rep.L6_norm6 = e4 * (ring_sixth + tail.sixth);
    rep.quotient = rep.B_omega / std::cbrt(rep.L6_norm6);
    rep.nehari_defect = rep.B_omega / (3.0 * rep.L6_norm6) - 1.0;
    const double pw = kPi * e4;
    rep.bound_lo = 0.75 * std::cbrt(pw * pw);
    rep.bound_hi = 0.75 * std::cbrt(4.0 * pw * pw);
    return rep;
}

// Same quotient evaluated from a sampled profile (composite Simpson on the
// stored nodes, analytic soliton remainder past L_trunc).
inline double variational_quotient(const WaveSolution& sol, int n_ring = 4096,
                                   double L_trunc = -1.0) {
    if (L_trunc <= 0.0) L_trunc = 20.0 / std::sqrt(-sol.omega);
    const GraphFunction gf = sample_graph_profile(sol, n_ring, L_trunc);
    const auto simpson = [](const std::vector<GraphNode>& nodes, auto&& f) {
        // nodes are uniform; even interval count enforced by construction
        const std::size_t n = nodes.size() - 1;
        const double h = nodes[1].x - nodes[0].x;
        double s = f(nodes[0]) + f(nodes[n]);
        for (std::size_t i = 1; i < n; ++i)
            s += f(nodes[i]) * (i % 2 == 1 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    const auto sq = [](const GraphNode& nd) { return nd.value * nd.value; };
    const auto six = [](const GraphNode& nd) {
        const double v2 = nd.value * nd.value;
        return v2 * v2 * v2;
    };
    const auto dsq = [](const GraphNode& nd) { return nd.deriv * nd.deriv; };
    const double Y = sol.eps * sol.eps * L_trunc + sol.params.a;
    const detail::SolitonTail rem = detail::soliton_tail(Y);
    const double e4 = -sol.omega;
    const double mass2 = simpson(gf.ring_nodes, sq) +
                         simpson(gf.tail_nodes, sq) + rem.mass;
    const double grad2 = simpson(gf.ring_nodes, dsq) +
                         simpson(gf.tail_nodes, dsq) + e4 * rem.grad;
    const double sixth = simpson(gf.ring_nodes, six) +
                         simpson(gf.tail_nodes, six) + e4 * rem.sixth;
    return (grad2 + e4 * mass2) / std::cbrt(sixth);
}

struct MassCurvePoint {
    double omega;
    double mu;
    int dmu_sign;  // sign of d mu / d omega (= sign of d mu / d U0)
};

using MassCurve = std::vector<MassCurvePoint>;

// Mass curve over a U0 grid, sorted by omega (omega is strictly increasing
// in U0, so ascending U0 order is ascending omega order).
inline MassCurve mass_curve(std::vector<double> U0_grid,
                            const QuadratureSpec& spec = {}) {
    std::sort(U0_grid.begin(), U0_grid.end());
    MassCurve curve;
    curve.reserve(U0_grid.size());
    for (double U0 : U0_grid) {
        const WaveSolution sol = solve_from_U0(U0, spec);
        const double s = mass_derivative_sign(sol.params, spec);
        curve.push_back({sol.omega, sol.mu, s > 0.0 ? 1 : (s < 0.0 ? -1 : 0)});
    }
    return curve;
}

}  // namespace tadpole
