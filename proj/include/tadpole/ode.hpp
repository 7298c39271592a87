#pragma once

// Adaptive Dormand-Prince 5(4) integrator for the small stiff-free systems
// used here (profile equation and its linearization).  Right-hand sides are
// callables f(z, y, dy) on std::array states.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tadpole/errors.hpp"

namespace tadpole {

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-12;
    double h_init = 1e-3;
    long max_steps = 2000000;
};

namespace detail {

template <std::size_t N, class F>
struct Dopri5 {
    F& f;
    const OdeOptions& opt;

    using Y = std::array<double, N>;

    // One trial step from (z, y) with slope k1; returns error norm and fills
    // y_new / k_last (FSAL).
    double step(double z, const Y& y, const Y& k1, double h, Y& y_new,
                Y& k_last) const {
        constexpr double a21 = 1.0 / 5;
        constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                         a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                         a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                         a65 = -5103.0 / 18656;
        constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                         b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                         e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                         e6 = 22.0 / 525, e7 = -1.0 / 40;
        Y k2, k3, k4, k5, k6, t;
        for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * a21 * k1[i];
        f(z + h / 5, t, k2);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(z + 3 * h / 10, t, k3);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(z + 4 * h / 5, t, k4);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] +
                   h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(z + 8 * h / 9, t, k5);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                               a64 * k4[i] + a65 * k5[i]);
        f(z + h, t, k6);
        for (std::size_t i = 0; i < N; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                   b5 * k5[i] + b6 * k6[i]);
        f(z + h, y_new, k_last);
        double err2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                  e5 * k5[i] + e6 * k6[i] + e7 * k_last[i]);
            const double sc =
                opt.atol +
                opt.rtol * std::fmax(std::fabs(y[i]), std::fabs(y_new[i]));
            err2 += (e / sc) * (e / sc);
        }
        return std::sqrt(err2 / N);
    }
};

}  // namespace detail

// Integrate y' = f(z, y) from z0 to z1 (z1 > z0), invoking visit(z, y) after
// every accepted step (and at z0).  Integration lands on z1 exactly.
template <std::size_t N, class F, class V>
std::array<double, N> ode_integrate_observed(F&& f, std::array<double, N> y,
                                             double z0, double z1, V&& visit,
                                             const OdeOptions& opt = {}) {
    if (!(z1 >= z0)) throw domain_error("ode_integrate: need z1 >= z0");
    detail::Dopri5<N, F> stepper{f, opt};
    std::array<double, N> k1, y_new, k_last;
    double z = z0;
    visit(z, y);
    if (z1 == z0) return y;
    f(z, y, k1);
    double h = std::fmin(opt.h_init, z1 - z0);
    for (long n = 0; n < opt.max_steps; ++n) {
        bool last = false;
        if (z + h >= z1) {
            h = z1 - z;
            last = true;
        }
        const double err = stepper.step(z, y, k1, h, y_new, k_last);
        if (err <= 1.0) {
            z = last ? z1 : z + h;
            y = y_new;
            k1 = k_last;
            visit(z, y);
            if (last) return y;
        }
        const double fac =
            std::fmin(5.0, std::fmax(0.2, 0.9 * std::pow(err, -0.2)));
        h *= fac;
        if (!(h > 0.0) || z + h == z)
            throw numerical_error("ode_integrate: step size underflow", z, h);
    }
    throw numerical_error("ode_integrate: max step count exceeded", z,
                          static_cast<double>(opt.max_steps));
}

template <std::size_t N, class F>
std::array<double, N> ode_integrate(F&& f, std::array<double, N> y, double z0,
                                    double z1, const OdeOptions& opt = {}) {
    return ode_integrate_observed(
        f, y, z0, z1, [](double, const std::array<double, N>&) {}, opt);
}

// Integrate while landing exactly on each requested z (ascending, all within
// [z0, z1]); calls sample(index, z, y) at every requested point.
template <std::size_t N, class F, class S>
std::array<double, N> ode_integrate_sampled(F&& f, std::array<double, N> y,
                                            double z0,
                                            const std::vector<double>& zs,
                                            S&& sample,
                                            const OdeOptions& opt = {}) {
    double z = z0;
    std::size_t i = 0;
    for (; i < zs.size() && zs[i] <= z0; ++i) sample(i, z0, y);
    for (; i < zs.size(); ++i) {
        y = ode_integrate<N>(f, y, z, zs[i], opt);
        z = zs[i];
        sample(i, z, y);
    }
    return y;
}

}  // namespace tadpole
