#include "ptscatter/specfun.hpp"

#include <cmath>
#include <limits>

namespace ptscatter {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's tabulation).
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double LOG_DBL_MAX = 709.78;

bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    if (r > 0.5) return false;
    return std::abs(z - cplx(r, 0.0)) < 1e-12;
}

// Lanczos series for Re z >= 0.5; returns log Gamma(z).
cplx lanczos_lgamma(cplx z) {
    cplx zm1 = z - 1.0;
    cplx acc = lanczos_c[0];
    for (int i = 1; i < 9; ++i) acc += lanczos_c[i] / (zm1 + static_cast<double>(i));
    cplx t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * PI) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

/* log sin(pi z) without overflow.  For |Im z| beyond ~15 the dominant
 * exponential is factored out analytically:
 *   Im z > 0:  sin(pi z) = (i/2) e^{-i pi z} (1 - e^{ 2 i pi z})
 *   Im z < 0:  sin(pi z) = (-i/2) e^{ i pi z} (1 - e^{-2 i pi z})
 */
cplx log_sin_pi(cplx z) {
    if (std::abs(z.imag()) < 15.0) return std::log(std::sin(PI * z));
    cplx ipz = cplx(0.0, PI) * z;
    if (z.imag() > 0.0)
        return -ipz + std::log(1.0 - std::exp(2.0 * ipz)) + cplx(-std::log(2.0), PI / 2);
    return ipz + std::log(1.0 - std::exp(-2.0 * ipz)) + cplx(-std::log(2.0), -PI / 2);
}

} // namespace

cplx clgamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("clgamma: argument within 1e-12 of a non-positive integer");
    if (z.real() >= 0.5) return lanczos_lgamma(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(PI) - log_sin_pi(z) - lanczos_lgamma(1.0 - z);
}

cplx cgamma(cplx z) {
    cplx lg = clgamma(z);
    if (lg.real() > LOG_DBL_MAX)
        throw OverflowError("cgamma: |Gamma(z)| exceeds double range, use clgamma");
    return std::exp(lg);
}

cplx jacobi(int n, cplx a, cplx b, cplx z) {
    if (n < 0) return 0.0;
    cplx p0 = 1.0;
    if (n == 0) return p0;
    cplx p1 = (a + 1.0) + (a + b + 2.0) * (z - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        cplx s = a + b + static_cast<double>(k);       // k + a + b
        cplx w = a + b + static_cast<double>(2 * k);   // 2k + a + b
        if (std::abs(s) < 1e-13 * (1.0 + std::abs(a + b)) ||
            std::abs(w - 2.0) < 1e-13 * (1.0 + std::abs(a + b)))
            throw DegenerateParamError("jacobi: recurrence denominator vanishes at degree " +
                                       std::to_string(k));
        cplx den = 2.0 * static_cast<double>(k) * s * (w - 2.0);
        cplx c1 = (w - 1.0) * (w * (w - 2.0) * z + a * a - b * b);
        cplx c0 = -2.0 * (a + static_cast<double>(k) - 1.0) * (b + static_cast<double>(k) - 1.0) * w;
        cplx p2 = (c1 * p1 + c0 * p0) / den;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

cplx jacobi(const JacobiIndex& idx, cplx z) { return jacobi(idx.n, idx.alpha, idx.beta, z); }

cplx jacobi_deriv(int n, cplx a, cplx b, cplx z) {
    if (n <= 0) return 0.0;
    return (a + b + static_cast<double>(n) + 1.0) / 2.0 * jacobi(n - 1, a + 1.0, b + 1.0, z);
}

cplx jacobi_deriv(const JacobiIndex& idx, cplx z) {
    return jacobi_deriv(idx.n, idx.alpha, idx.beta, z);
}

cplx jacobi_deriv2(int n, cplx a, cplx b, cplx z) {
    if (n <= 1) return 0.0;
    cplx s = a + b + static_cast<double>(n);
    return (s + 1.0) * (s + 2.0) / 4.0 * jacobi(n - 2, a + 2.0, b + 2.0, z);
}

cplx jacobi_leading_coeff(int n, cplx a, cplx b) {
    cplx acc = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= n; ++j) {
        acc *= a + b + static_cast<double>(n + j);
        fact *= 2.0 * j;
    }
    return acc / fact;
}

cplx jacobi_leading_coeff(const JacobiIndex& idx) {
    return jacobi_leading_coeff(idx.n, idx.alpha, idx.beta);
}

} // namespace ptscatter
