#pragma once

// Adaptive Gauss-Kronrod quadrature plus the shared kernel for the family
// integrals  int_{U0}^{U+} g(u) / sqrt(E + A(u)) du.  The inverse-square-root
// endpoint singularity is removed exactly: with E = -A(U+),
//     E + A(u) = (U+ - u) * Q(u),   Q(u) = sum_{j=0}^{5} u^j U+^{5-j} - u - U+,
// and the substitution u = U+ - t^2 makes the upper piece smooth.

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "tadpole/errors.hpp"
#include "tadpole/scalar_model.hpp"

namespace tadpole {

enum class IntegrandKind { period, mass, monotonicity_f, generic };

struct QuadratureSpec {
    IntegrandKind integrand = IntegrandKind::generic;
    double lower = 0.0;
    double upper = 1.0;
    double tolerance = 1e-10;  // absolute
    int max_subdivisions = 5000;
};

namespace detail {

// 15-point Kronrod nodes (xgk), Kronrod weights (wgk) and embedded 7-point
// Gauss weights (wg) on [-1,1].
inline constexpr double kXgk[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318920,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171};
inline constexpr double kWg[4] = {
    0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

struct GkEstimate {
    double value;
    double error;
};

// One Gauss-Kronrod 7-15 panel with the standard error heuristic
// err = resasc * min(1, (200 |K - G| / resasc)^{3/2}).
template <class F>
GkEstimate gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] *
                  (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::fmin(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::fmax(err, 50.0 * eps * resabs);
    return {resk * half, err};
}

struct Segment {
    double value;
    double error;
    double a;
    double b;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// Compensated (Neumaier) sum of segment values.
inline double compensated_sum(const std::vector<Segment>& segs) {
    double s = 0.0, c = 0.0;
    for (const Segment& seg : segs) {
        const double t = s + seg.value;
        if (std::fabs(s) >= std::fabs(seg.value))
            c += (s - t) + seg.value;
        else
            c += (seg.value - t) + s;
        s = t;
    }
    return s + c;
}

}  // namespace detail

// Globally adaptive bisection quadrature.  `tol` is absolute for integrals
// of magnitude <= 1 and relative above that (QUADPACK-style mixed bound),
// so integrals spanning hundreds of units keep full relative accuracy.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol,
                          int max_subdivisions = 5000) {
    if (!(a < b)) throw domain_error("integrate_adaptive: need lower < upper");
    if (!(tol > 0.0))
        throw domain_error("integrate_adaptive: tolerance must be positive");
    std::priority_queue<detail::Segment> queue;
    const detail::GkEstimate first = detail::gk15(f, a, b);
    queue.push({first.value, first.error, a, b});
    double total_err = first.error;
    double total_val = first.value;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<detail::Segment> done;  // segments too narrow to split
    const auto bound = [&] { return tol * std::fmax(1.0, std::fabs(total_val)); };
    for (int n = 0; n < max_subdivisions && total_err > bound(); ++n) {
        const detail::Segment worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid - worst.a < eps * std::fabs(mid) || !(worst.a < mid) ||
            !(mid < worst.b)) {
            // Machine-width segment: its error is a floor, not refinable.
            done.push_back(worst);
            queue.pop();
            if (queue.empty()) break;
            continue;
        }
        queue.pop();
        const detail::GkEstimate left = detail::gk15(f, worst.a, mid);
        const detail::GkEstimate right = detail::gk15(f, mid, worst.b);
        queue.push({left.value, left.error, worst.a, mid});
        queue.push({right.value, right.error, mid, worst.b});
        total_err += left.error + right.error - worst.error;
        total_val += left.value + right.value - worst.value;
    }
    std::vector<detail::Segment> segs = std::move(done);
    while (!queue.empty()) {
        segs.push_back(queue.top());
        queue.pop();
    }
    double err = 0.0;
    for (const detail::Segment& s : segs) err += s.error;
    const double value = detail::compensated_sum(segs);
    if (err > tol * std::fmax(1.0, std::fabs(value)))
        throw numerical_error("integrate_adaptive: tolerance not met", value,
                              err);
    return value;
}

namespace detail {

// Q(u) = (E + A(u)) / (U+ - u) for E = -A(U+), evaluated as the exact
// polynomial co-factor; positive and O(1) on [U0, U+] for the whole family.
inline double cofactor_Q(double u, double Uplus) {
    double s = 1.0;  // sum u^j Uplus^(5-j), built by Horner in u/Uplus mix
    double p = 1.0;
    for (int j = 0; j < 5; ++j) {
        p *= u;
        s = s * Uplus + p;
    }
    return s - u - Uplus;
}

}  // namespace detail

// int_{U0}^{U+} g(u)/sqrt(E + A(u)) du with the endpoint singularity removed
// by u = U+ - t^2 on the upper half; adaptive Gauss-Kronrod on both pieces.
template <class G>
double integrate_sqrt_endpoint(G&& g, double U0, double Uplus, double E,
                               const QuadratureSpec& spec = {}) {
    if (!(U0 < Uplus))
        throw domain_error("integrate_sqrt_endpoint: need U0 < Uplus");
    if (!(E + potential_A(U0) > 0.0))
        throw domain_error("integrate_sqrt_endpoint: E + A(U0) <= 0");
    if (!(spec.tolerance > 0.0))
        throw domain_error("integrate_sqrt_endpoint: tolerance must be > 0");
    const double uc = 0.5 * (U0 + Uplus);
    const double direct = integrate_adaptive(
        [&](double u) { return g(u) / std::sqrt(E + potential_A(u)); }, U0, uc,
        0.5 * spec.tolerance, spec.max_subdivisions);
    const double t_max = std::sqrt(Uplus - uc);
    const double transformed = integrate_adaptive(
        [&](double t) {
            const double u = Uplus - t * t;
            return 2.0 * g(u) / std::sqrt(detail::cofactor_Q(u, Uplus));
        },
        0.0, t_max, 0.5 * spec.tolerance, spec.max_subdivisions);
    return direct + transformed;
}

namespace detail {

inline QuadratureSpec family_spec(const ModelParams& p, IntegrandKind kind,
                                  const QuadratureSpec& spec) {
    QuadratureSpec out = spec;
    out.integrand = kind;
    out.lower = p.U0;
    out.upper = p.Uplus;
    return out;
}

}  // namespace detail

// Period of the ring orbit: T(U0) = int du / sqrt(E + A(u)).
inline double period_T(const ModelParams& p, const QuadratureSpec& spec = {}) {
    return integrate_sqrt_endpoint(
        [](double) { return 1.0; }, p.U0, p.Uplus, p.E,
        detail::family_spec(p, IntegrandKind::period, spec));
}

inline double period_T(double U0, const QuadratureSpec& spec = {}) {
    return period_T(make_model_params(U0), spec);
}

// Mass integral B(U0) = int u^2 du / sqrt(E + A(u)).
inline double mass_integral_B(const ModelParams& p,
                              const QuadratureSpec& spec = {}) {
    return integrate_sqrt_endpoint(
        [](double u) { return u * u; }, p.U0, p.Uplus, p.E,
        detail::family_spec(p, IntegrandKind::mass, spec));
}

inline double mass_integral_B(double U0, const QuadratureSpec& spec = {}) {
    return mass_integral_B(make_model_params(U0), spec);
}

// F(U0) = int (1 - sqrt(3) u^2) / (1 + sqrt(3) u^2)^2 du / sqrt(E + A(u)).
inline double monotonicity_F(const ModelParams& p,
                             const QuadratureSpec& spec = {}) {
    const double r3 = std::sqrt(3.0);
    return integrate_sqrt_endpoint(
        [r3](double u) {
            const double w = 1.0 + r3 * u * u;
            return (1.0 - r3 * u * u) / (w * w);
        },
        p.U0, p.Uplus, p.E,
        detail::family_spec(p, IntegrandKind::monotonicity_f, spec));
}

inline double monotonicity_F(double U0, const QuadratureSpec& spec = {}) {
    return monotonicity_F(make_model_params(U0), spec);
}

// G(U0) = 3 sqrt(3) U0^2 sqrt(1 - U0^4) / (4 (1 - 3 U0^4)); pole at U* from
// the factor 1 - 3 U0^4.
inline double monotonicity_G(double U0) {
    if (!(U0 > 0.0 && U0 < model::kUstar))
        throw domain_error("monotonicity_G: U0 must lie in (0, U*)");
    const double q = U0 * U0 * U0 * U0;
    return 3.0 * std::sqrt(3.0) * U0 * U0 * std::sqrt(1.0 - q) /
           (4.0 * (1.0 - 3.0 * q));
}

// Closed-form G'(U0) = 3 sqrt(3) U0 (1 + U0^4) / (2 (1-3U0^4)^2 sqrt(1-U0^4)).
inline double monotonicity_G_prime(double U0) {
    if (!(U0 > 0.0 && U0 < model::kUstar))
        throw domain_error("monotonicity_G_prime: U0 must lie in (0, U*)");
    const double q = U0 * U0 * U0 * U0;
    const double w = 1.0 - 3.0 * q;
    return 3.0 * std::sqrt(3.0) * U0 * (1.0 + q) /
           (2.0 * w * w * std::sqrt(1.0 - q));
}

// [E + A(U*)] T'(U0) = -(3/8) A'(U0) int R(u)/sqrt(E+A(u)) du
//                      - A(U*) / (2 sqrt(A(U0)))
// with the regular bracket R(u) = 2 (1 - sqrt3 u^2)(1 + 3 sqrt3 u^2 + 3 u^4)
//                                 / (3 sqrt3 u^2 (1 + sqrt3 u^2)^2),
// the factored form of 1 - 2 A''(u)(A(u) - A(U*)) / A'(u)^2.
inline double period_T_derivative(const ModelParams& p,
                                  const QuadratureSpec& spec = {}) {
    const double r3 = std::sqrt(3.0);
    const double kernel = integrate_sqrt_endpoint(
        [r3](double u) {
            const double u2 = u * u;
            const double w = 1.0 + r3 * u2;
            return 2.0 * (1.0 - r3 * u2) * (1.0 + 3.0 * r3 * u2 + 3.0 * u2 * u2) /
                   (3.0 * r3 * u2 * w * w);
        },
        p.U0, p.Uplus, p.E, detail::family_spec(p, IntegrandKind::generic, spec));
    const double boundary =
        model::kAUstar / (2.0 * std::sqrt(potential_A(p.U0)));
    return (-0.375 * potential_A_prime(p.U0) * kernel - boundary) /
           (p.E + model::kAUstar);
}

inline double period_T_derivative(double U0, const QuadratureSpec& spec = {}) {
    return period_T_derivative(make_model_params(U0), spec);
}

// Right-hand side of  [E + A(U*)] mu'(U0) = (1/(2 sqrt3)) A'(U0) F(U0)
//                                           - (3/4) U0^2 sqrt(A(U0));
// same sign as mu'(U0) because E + A(U*) >= A(U*)/4 > 0 along the family.
inline double mass_derivative_sign(const ModelParams& p,
                                   const QuadratureSpec& spec = {}) {
    const double F = monotonicity_F(p, spec);
    return potential_A_prime(p.U0) * F / (2.0 * std::sqrt(3.0)) -
           0.75 * p.U0 * p.U0 * std::sqrt(potential_A(p.U0));
}

inline double mass_derivative_sign(double U0, const QuadratureSpec& spec = {}) {
    return mass_derivative_sign(make_model_params(U0), spec);
}

// mu'(U0) itself (used by finite-difference cross-checks).
inline double mass_derivative(const ModelParams& p,
                              const QuadratureSpec& spec = {}) {
    return mass_derivative_sign(p, spec) / (p.E + model::kAUstar);
}

inline double mass_derivative(double U0, const QuadratureSpec& spec = {}) {
    return mass_derivative(make_model_params(U0), spec);
}

}  // namespace tadpole
