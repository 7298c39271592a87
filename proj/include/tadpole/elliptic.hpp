#pragma once

// Jacobi elliptic functions and the complete elliptic integral K in the
// modulus-k convention (not the parameter m = k^2).  K uses the
// arithmetic-geometric mean; sn/cn/dn use Bulirsch's sncndn descending
// Landen recursion, which stays accurate up to k = 1.

#include <cmath>
#include <limits>

#include "tadpole/errors.hpp"

namespace tadpole {

struct EllipticEval {
    double sn;
    double cn;
    double dn;
    double x;
    double k;
};

// K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t) via AGM(1, k').
inline double complete_K(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw domain_error("complete_K: modulus must lie in [0,1)");
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    double a = 1.0, b = kp;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 64 && std::fabs(a - b) > 2.0 * eps * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    const double pi = 3.14159265358979323846;
    return pi / (2.0 * a);
}

// sn, cn, dn at argument x with modulus k in [0, 1]; k = 1 is the exact
// hyperbolic branch sn = tanh, cn = dn = sech.
inline EllipticEval jacobi(double x, double k) {
    if (!(k >= 0.0 && k <= 1.0))
        throw domain_error("jacobi: modulus must lie in [0,1]");
    double kc2 = (1.0 - k) * (1.0 + k);  // complementary parameter k'^2
    if (kc2 == 0.0) {
        const double t = std::fabs(x);
        const double e = std::exp(-t);
        const double sech = 2.0 * e / (1.0 + e * e);
        const double tanh_x = x < 0.0 ? -(1.0 - e * e) / (1.0 + e * e)
                                      : (1.0 - e * e) / (1.0 + e * e);
        return {tanh_x, sech, sech, x, k};
    }
    constexpr double kCA = 1e-16;
    double kc = kc2;  // the recursion square-roots this into k' on entry
    double a = 1.0, dn = 1.0, c = 0.0;
    double em[16], en[16];
    int l = 0;
    for (int i = 0; i < 16; ++i) {
        l = i;
        em[i] = a;
        kc = std::sqrt(kc);
        en[i] = kc;
        c = 0.5 * (a + kc);
        if (std::fabs(a - kc) <= kCA * a) break;
        kc = a * kc;
        a = c;
    }
    double u = c * x;
    double sn = std::sin(u);
    double cn = std::cos(u);
    if (sn != 0.0) {
        a = cn / sn;
        c = a * c;
        for (int i = l; i >= 0; --i) {
            const double b = em[i];
            a = c * a;
            c = dn * c;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = sn < 0.0 ? -a : a;
        cn = c * sn;
    }
    return {sn, cn, dn, x, k};
}

}  // namespace tadpole
