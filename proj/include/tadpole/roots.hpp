#pragma once

#include <cmath>
#include <utility>

#include "tadpole/errors.hpp"

namespace tadpole {

// Bisection on a bracketed sign change, run down to absolute width `tol_x`
// (or machine limit).  `f_lo` is the sign of f at `lo`.  Robust for any
// monotone or merely sign-changing continuous f.
template <class F>
double bisect(F&& f, double lo, double hi, double tol_x, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect: no sign change over bracket");
    for (int i = 0; i < max_iter && hi - lo > tol_x; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at machine resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Bracketed bisection refined by Newton steps; Newton iterates are accepted
// only while they stay inside the current bracket, otherwise the step falls
// back to bisection.  Converges to |f| ~ round-off for smooth f.
template <class F, class DF>
double bisect_newton(F&& f, DF&& df, double lo, double hi, double tol_x,
                     int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect_newton: no sign change over bracket");
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int i = 0; i < max_iter; ++i) {
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if (hi - lo <= tol_x) break;
        const double d = df(x);
        double next = x - fx / d;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
        fx = f(x);
    }
    return x;
}

// Golden-section maximization of a unimodal f on [lo, hi] down to interval
// width `tol_x`; returns (argmax estimate, f at that point).
template <class F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi,
                                             double tol_x) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol_x) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
}

}  // namespace tadpole
