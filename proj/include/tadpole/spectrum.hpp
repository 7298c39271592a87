#pragma once

// Spectrum of the free Laplacian on the tadpole graph: embedded eigenvalues
// n^2 with ring eigenfunctions sin(nx), scattering (Jost) coefficients, and
// the positivity certificate ruling out negative eigenvalues.

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "tadpole/errors.hpp"
#include "tadpole/wave_family.hpp"  // kPi

namespace tadpole {

struct ScatteringData {
    double k;  // wavenumber, lambda = k^2
    std::complex<double> a_coeff;
    std::complex<double> b_coeff;
};

struct EmbeddedEigenvalue {
    double lambda;  // n^2
    int n;          // eigenfunction u = sin(n x), v = 0
};

inline std::vector<EmbeddedEigenvalue> embedded_eigenvalues(int n_max) {
    if (n_max < 1) throw domain_error("embedded_eigenvalues: need n_max >= 1");
    std::vector<EmbeddedEigenvalue> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back({static_cast<double>(n) * n, n});
    return out;
}

// a(k) = 1 / (cos pi k + 2 i sin pi k),
// b(k) = (cos pi k - 2 i sin pi k) / (cos pi k + 2 i sin pi k).
inline ScatteringData scattering(double k) {
    if (!(k >= 0.0)) throw domain_error("scattering: k must be >= 0");
    const double c = std::cos(kPi * k);
    const double s = std::sin(kPi * k);
    const std::complex<double> denom(c, 2.0 * s);
    return {k, 1.0 / denom, std::complex<double>(c, -2.0 * s) / denom};
}

// Residuals of the Neumann-Kirchhoff vertex conditions for the Jost state
// u = a (e^{ikx} + e^{-ikx}), v = e^{ikx} + b e^{-ikx}:
//   continuity  u(+-pi) = v(0)   and   flux  u'(pi) - u'(-pi) = v'(0).
struct JostResiduals {
    double continuity;
    double flux;
};

inline JostResiduals jost_vertex_residuals(const ScatteringData& sd) {
    const std::complex<double> i(0.0, 1.0);
    const double c = std::cos(kPi * sd.k);
    const double s = std::sin(kPi * sd.k);
    const std::complex<double> cont = 2.0 * sd.a_coeff * c - (1.0 + sd.b_coeff);
    const std::complex<double> flux =
        -4.0 * sd.a_coeff * sd.k * s - i * sd.k * (1.0 - sd.b_coeff);
    return {std::abs(cont), std::abs(flux)};
}

struct NegativeSpectrumReport {
    double min_value;  // min over the grid of 1 + 2 tanh(pi sqrt|lambda|)
    bool empty;        // true iff min_value >= 1 (no roots possible)
};

// Eigenvalue condition at lambda < 0 reduces to 1 + 2 tanh(pi sqrt|lambda|),
// which never vanishes; report its minimum over the supplied grid.
inline NegativeSpectrumReport no_negative_eigenvalues(
    const std::vector<double>& lambda_grid) {
    if (lambda_grid.empty())
        throw domain_error("no_negative_eigenvalues: empty grid");
    double min_value = std::numeric_limits<double>::infinity();
    for (double lam : lambda_grid) {
        if (!(lam < 0.0))
            throw domain_error("no_negative_eigenvalues: grid must be < 0");
        min_value = std::fmin(
            min_value, 1.0 + 2.0 * std::tanh(kPi * std::sqrt(-lam)));
    }
    return {min_value, min_value >= 1.0};
}

}  // namespace tadpole
