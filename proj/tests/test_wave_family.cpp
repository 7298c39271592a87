#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "tadpole/wave_family.hpp"
#include "oracles.hpp"

using namespace tadpole;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Full reference record for U0 = 0.8, frozen from 50-digit arithmetic.
namespace ref08 {
constexpr double E = -0.283392;
constexpr double Uplus = 0.8971871484954788757605;
constexpr double a = 0.5081740483392019027068;
constexpr double T = 0.5252375755397894500377;
constexpr double eps = 0.4088866748740053219085;
constexpr double omega = -0.02795193196684421827353;
constexpr double mu = 1.129397227709112540301;
constexpr double rho1 = 0.8049447794254484631212;
constexpr double rho2 = 0.314498967146660417058;
constexpr double rho3 = -1.119443746572108880179;
constexpr double nu = 1.074357808834228069005;
constexpr double k = 0.6896801202896444589185;
constexpr double U_halfT = 0.8693818490478219089189;
}  // namespace ref08

TEST_CASE("wave construction from U0: frozen record") {
    const WaveSolution sol = solve_from_U0(0.8);
    REQUIRE_THAT(sol.params.E, WithinAbs(ref08::E, 1e-15));
    REQUIRE_THAT(sol.params.Uplus, WithinAbs(ref08::Uplus, 1e-13));
    REQUIRE_THAT(sol.params.a, WithinAbs(ref08::a, 1e-14));
    REQUIRE_THAT(ring_half_period(sol), WithinAbs(ref08::T, 1e-12));
    REQUIRE_THAT(sol.eps, WithinAbs(ref08::eps, 1e-12));
    REQUIRE_THAT(sol.omega, WithinAbs(ref08::omega, 1e-13));
    REQUIRE_THAT(sol.mu, WithinAbs(ref08::mu, 1e-12));
    REQUIRE_THAT(sol.rho.rho1, WithinAbs(ref08::rho1, 1e-13));
    REQUIRE_THAT(sol.rho.rho2, WithinAbs(ref08::rho2, 1e-13));
    REQUIRE_THAT(sol.rho.rho3, WithinAbs(ref08::rho3, 1e-13));
    REQUIRE_THAT(sol.nu, WithinAbs(ref08::nu, 1e-12));
    REQUIRE_THAT(sol.k, WithinAbs(ref08::k, 1e-12));
    REQUIRE_THAT(profile_exact(sol, 0.5 * ring_half_period(sol)),
                 WithinAbs(ref08::U_halfT, 1e-12));

    REQUIRE_THROWS_AS(solve_from_U0(0.0), domain_error);
    REQUIRE_THROWS_AS(solve_from_U0(1.0), domain_error);
}

TEST_CASE("frequency solver inverts the family map") {
    const double omega = solve_from_U0(0.6).omega;
    const WaveSolution sol = solve_from_omega(omega);
    REQUIRE_THAT(sol.params.U0, WithinAbs(0.6, 1e-9));
    // pi eps^2 = T(U0) closes by construction; check against the kernel.
    REQUIRE_THAT(kPi * sol.eps * sol.eps,
                 WithinAbs(period_T(sol.params.U0), 1e-10));

    REQUIRE_THROWS_AS(solve_from_omega(0.0), domain_error);
    REQUIRE_THROWS_AS(solve_from_omega(0.1), domain_error);

    // |omega| is strictly decreasing in U0.
    double prev = solve_from_U0(0.1).omega;
    for (double u0 = 0.2; u0 <= 0.91; u0 += 0.1) {
        const double w = solve_from_U0(u0).omega;
        REQUIRE(std::fabs(w) < std::fabs(prev));
        prev = w;
    }
}

TEST_CASE("elliptic ring profile satisfies the orbit ODE") {
    const WaveSolution sol = solve_from_U0(0.45);
    const double T = ring_half_period(sol);

    // U(0) is the orbit maximum sqrt(rho1) = U+; the two sides come from
    // independent root solves (cubic resolvent vs bisected A(u) = -E), each
    // located to ~1e-13 in its own variable.
    REQUIRE_THAT(profile_exact(sol, 0.0), WithinAbs(sol.params.Uplus,
                                                    1e-12));
    // First integral (U')^2 = E + A(U) all along the arc.
    for (int i = 0; i <= 40; ++i) {
        const double z = T * i / 40.0;
        const auto ud = profile_exact_d(sol, z);
        REQUIRE_THAT(ud[1] * ud[1],
                     WithinAbs(sol.params.E + potential_A(ud[0]), 1e-10));
    }
    // Matching at the vertex: value continuous, ring slope halves into the
    // tail derivative.
    const auto end = profile_exact_d(sol, T);
    const SolitonValue s = soliton_phi(sol.params.a);
    REQUIRE_THAT(end[0], WithinAbs(s.phi, 1e-12));
    REQUIRE_THAT(2.0 * end[1], WithinAbs(s.dphi, 1e-12));
}

TEST_CASE("shooting profile agrees with the elliptic formula") {
    for (double u0 : {0.25, 0.8}) {
        const WaveSolution sol = solve_from_U0(u0);
        const std::vector<RingSample> path = profile_ode(sol, 101);
        REQUIRE(path.size() == 101);
        double sup = 0.0, drift = 0.0;
        for (const RingSample& p : path) {
            sup = std::fmax(sup,
                            std::fabs(p.U - profile_exact(sol, p.z)));
            drift = std::fmax(
                drift, std::fabs(p.dU * p.dU -
                                 (sol.params.E + potential_A(p.U))));
        }
        REQUIRE(sup <= 1e-8);
        REQUIRE(drift <= 1e-10);
    }
}

TEST_CASE("sampled graph profile and residuals") {
    const WaveSolution sol = solve_from_U0(0.5);
    const double L = 20.0 / std::sqrt(-sol.omega);
    const GraphFunction gf = sample_graph_profile(sol, 2048, L);

    REQUIRE(gf.ring_nodes.size() == 2049);
    REQUIRE(gf.ring_nodes.front().x == -kPi);
    REQUIRE(gf.ring_nodes.back().x == kPi);

    // Even profile on the ring, odd derivative.
    const std::size_t n = gf.ring_nodes.size();
    for (std::size_t i = 0; i < n / 4; i += 37) {
        const GraphNode& lo = gf.ring_nodes[i];
        const GraphNode& hi = gf.ring_nodes[n - 1 - i];
        REQUIRE_THAT(lo.value, WithinAbs(hi.value, 1e-14));
        REQUIRE_THAT(lo.deriv, WithinAbs(-hi.deriv, 1e-14));
    }

    const ResidualReport rep = verify_residuals(gf);
    REQUIRE(rep.vertex_continuity_defect <= 1e-12);
    REQUIRE(rep.vertex_flux_defect <= 1e-12);
    REQUIRE(rep.max_ring_residual <= 1e-5);
    REQUIRE(rep.max_tail_residual <= 1e-5);

    // Second-difference residual decays at order h^2.
    const double coarse =
        verify_residuals(sample_graph_profile(sol, 1024, L))
            .max_ring_residual;
    const double ratio = coarse / rep.max_ring_residual;
    REQUIRE(ratio > 3.2);
    REQUIRE(ratio < 4.8);

    // Trapezoid mass over the sampled graph reproduces mu.
    double mass = 0.0;
    const auto accumulate = [&mass](const std::vector<GraphNode>& nodes) {
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            const GraphNode& p = nodes[i - 1];
            const GraphNode& q = nodes[i];
            mass += 0.5 * (q.x - p.x) *
                    (p.value * p.value + q.value * q.value);
        }
    };
    accumulate(gf.ring_nodes);
    accumulate(gf.tail_nodes);
    // Trapezoid error is O(h^2) with h = 2 pi / 2048 on the ring (~4e-6
    // here); the truncated tail past L contributes ~e^{-40}.
    REQUIRE_THAT(mass, WithinAbs(sol.mu, 1e-5));

    REQUIRE_THROWS_AS(sample_graph_profile(sol, 4, L), domain_error);
    REQUIRE_THROWS_AS(sample_graph_profile(sol, 64, -1.0), domain_error);
}

TEST_CASE("mass three ways") {
    const WaveSolution sol = solve_from_U0(0.65);
    const double T = ring_half_period(sol);
    // Ring mass from the elliptic profile by direct quadrature, tail in
    // closed form; must match the kernel-based mu.
    const double ring = integrate_adaptive(
        [&](double z) {
            const double u = profile_exact(sol, z);
            return u * u;
        },
        0.0, T, 1e-12);
    const double mu_direct =
        2.0 * ring + std::atan(exp_minus_2a(sol.params.U0));
    REQUIRE_THAT(mu_direct, WithinAbs(sol.mu, 1e-9));
}

TEST_CASE("variational identities and bounds") {
    // omega = -1 reference data (frozen, 22 digits).
    const WaveSolution sol = solve_from_omega(-1.0);
    REQUIRE_THAT(sol.params.U0,
                 WithinAbs(0.0814878453599058760261, 1e-10));
    REQUIRE_THAT(sol.mu, WithinAbs(1.581461496922509366725, 1e-10));

    const VariationalReport vr = variational_report(sol);
    REQUIRE_THAT(vr.B_omega, WithinAbs(2.348724632551189160175, 1e-9));
    REQUIRE_THAT(vr.L6_norm6, WithinAbs(0.782908210850396386725, 1e-9));
    REQUIRE_THAT(vr.quotient, WithinAbs(2.548366104342695525901, 1e-9));
    // Bounds are closed forms in sol.omega, which carries the ~1e-10
    // root-solve offset of the omega inversion.
    REQUIRE_THAT(vr.bound_lo, WithinAbs(1.608772047833269200058, 1e-9));
    REQUIRE_THAT(vr.bound_hi, WithinAbs(2.553766441107566052646, 1e-9));
    REQUIRE(vr.quotient > vr.bound_lo);
    REQUIRE(vr.quotient < vr.bound_hi);

    // Nehari identity across the family.
    for (double u0 : {0.2, 0.4, 0.6, 0.8}) {
        const VariationalReport r =
            variational_report(solve_from_U0(u0));
        REQUIRE(std::fabs(r.nehari_defect) <= 1e-6);
        REQUIRE(r.quotient > r.bound_lo);
        REQUIRE(r.quotient < r.bound_hi);
    }

    // Sampled-profile quotient agrees with the kernel-exact one.
    REQUIRE_THAT(variational_quotient(sol), WithinRel(vr.quotient, 1e-5));
}

TEST_CASE("mass curve over a U0 grid") {
    const MassCurve curve = mass_curve({0.7, 0.3, 0.5});
    REQUIRE(curve.size() == 3);
    // Sorted by U0 ascending; omega then ascends too.
    REQUIRE(curve[0].omega < curve[1].omega);
    REQUIRE(curve[1].omega < curve[2].omega);
    for (const MassCurvePoint& pt : curve) {
        REQUIRE(pt.omega < 0.0);
        REQUIRE(pt.mu > kPi / 4.0);
        REQUIRE(pt.mu < 1.64);
    }
    // dmu carries the sign of d mu / d U0: positive low, negative high.
    REQUIRE(curve.front().dmu_sign > 0.0);
    REQUIRE(curve.back().dmu_sign < 0.0);
}
