#include "doctest.h"

#include "ptscatter/specfun.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace ptscatter;

namespace {

const cplx I(0.0, 1.0);

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// leading coefficient of a degree-n polynomial from n+1 samples by Newton
// divided differences; one extra level on n+2 samples estimates the spurious
// degree-(n+1) coefficient (should be ~0 for an exact polynomial).
cplx divided_difference(const std::vector<cplx>& z, std::vector<cplx> f) {
    for (std::size_t lev = 1; lev < z.size(); ++lev)
        for (std::size_t i = 0; i + lev < z.size(); ++i)
            f[i] = (f[i + 1] - f[i]) / (z[i + lev] - z[i]);
    return f[0];
}

} // namespace

TEST_CASE("cgamma: fixed reference values") {
    // external multiprecision evaluations, 17 digits; the |Im z| = 40 point
    // sits deep in the reflection regime where the last two digits go to
    // cancellation, hence its wider band
    struct Ref { cplx z, g; double tol; };
    const Ref refs[] = {
        {{0.5, 1.3}, {0.19561338484274454, -0.25982035414251187}, 1e-13},
        {{-1.2, -0.7}, {0.17409591618176726, -0.70690945027145358}, 1e-13},
        {{-2.5, 0.1}, {-0.89650770119975876, -0.099318350500568559}, 1e-13},
        {{3.7, 0.0}, {4.170651783796604, 0.0}, 1e-13},
        {{1.0, 8.0}, {-2.4722096373108249e-05, 3.527978892836104e-07}, 1e-13},
        {{0.5, -40.0}, {9.5295510494311581e-28, -8.7375682018384417e-28}, 1e-12},
    };
    for (const auto& r : refs)
        CHECK(std::abs(cgamma(r.z) - r.g) < r.tol * std::abs(r.g));
}

TEST_CASE("cgamma: classical points") {
    CHECK(rel(cgamma(cplx(1.0, 0.0)), 1.0) < 1e-14);
    CHECK(rel(cgamma(cplx(0.5, 0.0)), std::sqrt(PI)) < 1e-13);
    // |Gamma(i)|^2 = pi / sinh(pi)
    CHECK(std::abs(std::abs(cgamma(I)) - std::sqrt(PI / std::sinh(PI))) < 1e-12);
}

TEST_CASE("clgamma: classical points and stepwise recursion") {
    CHECK(std::abs(clgamma(cplx(1.0, 0.0))) < 1e-13);
    CHECK(rel(clgamma(cplx(10.0, 0.0)), std::log(362880.0)) < 1e-13);
    CHECK(rel(clgamma(cplx(200.0, 0.0)).real(), std::lgamma(200.0)) < 1e-13);

    // Gamma(z+3) = (z+2)(z+1)z Gamma(z), evaluated through exp of clgamma
    // differences so any 2*pi*i branch offsets cancel
    for (cplx z : {cplx(0.0, 4.0), cplx(0.5, 4.0), cplx(-2.3, 1.7)}) {
        cplx lhs = std::exp(clgamma(z + 3.0) - clgamma(z));
        cplx rhs = (z + 2.0) * (z + 1.0) * z;
        CHECK(rel(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("cgamma: pole and overflow reporting") {
    CHECK_THROWS_AS(cgamma(cplx(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(cgamma(cplx(-3.0, 0.0)), PoleError);
    CHECK_THROWS_AS(cgamma(cplx(-7.0 + 4e-13, 0.0)), PoleError);
    CHECK_THROWS_AS(clgamma(cplx(-1.0, 0.0)), PoleError);
    // outside the 1e-12 pole window evaluation proceeds
    CHECK(std::isfinite(std::abs(cgamma(cplx(-7.0 + 1e-9, 0.0)))));
    CHECK_THROWS_AS(cgamma(cplx(200.0, 0.0)), OverflowError);
}

TEST_CASE("cgamma: reflection and recurrence on random samples") {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> ure(-8.0, 8.0), uim(-6.0, 6.0);
    int done = 0;
    while (done < 100) {
        cplx z(ure(gen), uim(gen));
        // reflection and recurrence both degenerate near integers on the real
        // axis (poles of Gamma(z) or Gamma(1-z), zeros of sin(pi z))
        if (std::abs(z.imag()) < 0.2 && std::abs(z.real() - std::round(z.real())) < 0.2) continue;
        cplx refl = cgamma(z) * cgamma(1.0 - z) * std::sin(PI * z) / PI;
        CHECK(rel(refl, 1.0) < 1e-10);
        CHECK(rel(cgamma(z + 1.0), z * cgamma(z)) < 1e-12);
        ++done;
    }
}

TEST_CASE("jacobi: fixed reference values") {
    // Scarf II exponents at A=2.5, B=1.3 and argument i sinh 0.7
    cplx a(-1.7, 0.0), b(-4.3, 0.0), z(0.0, std::sinh(0.7));
    CHECK(rel(jacobi(2, a, b, z), cplx(0.66341307547757222, -1.4792382185870903)) < 1e-13);
    CHECK(rel(jacobi_deriv(2, a, b, z), cplx(-1.9500000000000002, 1.1378755527593003)) < 1e-13);
    CHECK(std::abs(jacobi_deriv2(3, a, b, z) - cplx(0.65, 0.0)) < 1e-12);

    // RM-II parameters at A=2, B=1, m=1 and argument tanh 0.7
    cplx am(2.0, 0.5), bm(2.0, -0.5), zt(std::tanh(0.7), 0.0);
    CHECK(rel(jacobi(3, am, bm, zt), cplx(-0.012748443076322332, 1.0395051784122689)) < 1e-13);
    CHECK(rel(jacobi_leading_coeff(3, am, bm), cplx(15.0, 0.0)) < 1e-13);
}

TEST_CASE("jacobi: degree-0/1/2 and endpoint identity") {
    CHECK(jacobi(0, cplx(0.3, 1.2), cplx(-0.7, 0.4), cplx(2.0, -1.0)) == cplx(1.0, 0.0));
    CHECK(rel(jacobi(1, 0.0, 0.0, 0.5), 0.5) < 1e-15);            // P_1 = z
    CHECK(rel(jacobi(2, 0.0, 0.0, 0.5), -0.125) < 1e-15);         // Legendre (3z^2-1)/2
    CHECK(jacobi(-1, 0.0, 0.0, 0.5) == cplx(0.0, 0.0));           // empty degree

    // P_n^{(a,b)}(1) = (a+1)(a+2)...(a+n) / n!
    cplx a(0.7, 0.2), b(-0.4, 1.1);
    cplx binom = (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0;
    CHECK(rel(jacobi(3, a, b, cplx(1.0, 0.0)), binom) < 1e-13);
}

TEST_CASE("jacobi: vanishing recurrence denominator is reported") {
    // alpha + beta = -2 makes (k+a+b) vanish at k = 2
    CHECK_THROWS_AS(jacobi(2, cplx(-1.0, 0.0), cplx(-1.0, 0.0), cplx(0.3, 0.0)),
                    DegenerateParamError);
    CHECK_THROWS_AS(jacobi(2, cplx(0.5, 0.0), cplx(-2.5, 0.0), cplx(0.3, 0.0)),
                    DegenerateParamError);
}

TEST_CASE("jacobi_deriv: shift identity vs finite differences") {
    CHECK(jacobi_deriv(0, cplx(0.3, 0.0), cplx(0.9, 0.0), cplx(0.2, 0.0)) == cplx(0.0, 0.0));
    CHECK(rel(jacobi_deriv(1, 0.0, 0.0, 0.37), 1.0) < 1e-15);
    CHECK(rel(jacobi_deriv(1, 0.0, 0.0, cplx(-2.0, 0.3)), 1.0) < 1e-15);

    cplx a(1.0, 0.0), b(-0.5, 0.0);
    double h = 1e-6;
    cplx fd = (jacobi(2, a, b, 0.3 + h) - jacobi(2, a, b, 0.3 - h)) / (2.0 * h);
    CHECK(std::abs(jacobi_deriv(2, a, b, 0.3) - fd) < 1e-8);

    // second derivative of a quadratic is twice its leading coefficient
    cplx a2(0.4, 0.8), b2(-0.6, 0.5);
    for (cplx z : {cplx(0.0, 0.0), cplx(1.3, -0.4)})
        CHECK(rel(jacobi_deriv2(2, a2, b2, z), 2.0 * jacobi_leading_coeff(2, a2, b2)) < 1e-12);
}

TEST_CASE("jacobi: derivative-elimination identity") {
    // 2 P_{n-1} = [ (2n+a+b)(1-z^2) P_n' - n((a-b)-(2n+a+b)z) P_n ] / ((n+a)(n+b))
    std::mt19937 gen(777);
    std::uniform_real_distribution<double> up(-2.5, 2.5), uz(-2.0, 2.0);
    for (int n = 2; n <= 8; ++n) {
        int done = 0;
        while (done < 6) {
            cplx a(up(gen), up(gen)), b(up(gen), up(gen)), z(uz(gen), uz(gen));
            bool bad = std::abs(cplx(n) + a) < 0.3 || std::abs(cplx(n) + b) < 0.3;
            for (int k = 1; k <= n && !bad; ++k)
                bad = std::abs(cplx(k) + a + b) < 0.3 || std::abs(cplx(2 * k - 2) + a + b) < 0.3;
            if (bad) continue;
            cplx nn(n);
            cplx lhs = 2.0 * jacobi(n - 1, a, b, z);
            cplx rhs = ((2.0 * nn + a + b) * (1.0 - z * z) * jacobi_deriv(n, a, b, z) -
                        nn * ((a - b) - (2.0 * nn + a + b) * z) * jacobi(n, a, b, z)) /
                       ((nn + a) * (nn + b));
            CHECK(rel(lhs, rhs) < 1e-10);
            ++done;
        }
    }
}

TEST_CASE("jacobi: terminating hypergeometric representation") {
    // P_n^{(a,b)}(z) = (-1)^n [(1+b)_n / n!] F(n+a+b+1, -n; 1+b; (1+z)/2),
    // the 2F1 series terminating after n+1 terms
    auto hyp_form = [](int n, cplx a, cplx b, cplx z) {
        cplx w = (1.0 + z) / 2.0;
        cplx sum = 0.0, term = 1.0;
        for (int j = 0; j <= n; ++j) {
            sum += term;
            cplx jj(j);
            term *= (cplx(n) + a + b + 1.0 + jj) * (cplx(-n) + jj) / ((1.0 + b + jj) * (jj + 1.0)) * w;
        }
        cplx pref = 1.0;
        for (int j = 1; j <= n; ++j) pref *= (b + cplx(j)) / cplx(j);
        return (n % 2 ? -1.0 : 1.0) * pref * sum;
    };
    // a + b = -6 kills the degree-4 recurrence step (2n + a + b - 2 = 0),
    // so this parameter pair stops at n = 3
    cplx a_s(-1.7, 0.0), b_s(-4.3, 0.0);
    for (int n = 1; n <= 3; ++n)
        for (double x : {0.3, 0.7, 1.2}) {
            cplx z(0.0, std::sinh(x));
            CHECK(rel(jacobi(n, a_s, b_s, z), hyp_form(n, a_s, b_s, z)) < 1e-10);
        }
    CHECK_THROWS_AS(jacobi(4, a_s, b_s, cplx(0.0, 0.3)), DegenerateParamError);
    cplx a(0.4, 0.8), b(-0.6, 0.5), z(0.0, std::sinh(0.5));
    CHECK(rel(jacobi(3, a, b, z), hyp_form(3, a, b, z)) < 1e-10);
}

TEST_CASE("jacobi_leading_coeff: closed values, quotient form, interpolation fit") {
    CHECK(jacobi_leading_coeff(0, cplx(0.3, 1.0), cplx(2.0, -0.5)) == cplx(1.0, 0.0));
    CHECK(rel(jacobi_leading_coeff(1, 0.0, 0.0), 1.0) < 1e-15);
    // n=3, a=2, b=1: Gamma(10) / (2^3 3! Gamma(7)) = 362880 / 34560
    CHECK(rel(jacobi_leading_coeff(3, 2.0, 1.0), 10.5) < 1e-13);

    // agreement with the Gamma-quotient form away from its 0/0 points
    cplx a(0.3, 0.2), b(1.1, -0.5);
    cplx quot = std::exp(clgamma(8.0 + a + b + 1.0) - clgamma(4.0 + a + b + 1.0)) / (16.0 * 24.0);
    CHECK(rel(jacobi_leading_coeff(4, a, b), quot) < 1e-12);

    // fit through 4 points recovers the cubic coefficient; a 5th point shows
    // no spurious quartic term
    std::vector<cplx> zs = {0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<cplx> fs;
    for (cplx z : zs) fs.push_back(jacobi(3, 2.0, 1.0, z));
    cplx lead = divided_difference({zs.begin(), zs.begin() + 4}, {fs.begin(), fs.begin() + 4});
    CHECK(rel(lead, jacobi_leading_coeff(3, 2.0, 1.0)) < 1e-9);
    CHECK(std::abs(divided_difference(zs, fs)) < 1e-9 * std::abs(lead));
}

TEST_CASE("jacobi: real parameters and argument give real values") {
    std::mt19937 gen(424242);
    std::uniform_real_distribution<double> up(-3.0, 3.0), uz(-1.0, 1.0);
    for (int n = 1; n <= 6; ++n) {
        int done = 0;
        while (done < 8) {
            double a = up(gen), b = up(gen), z = uz(gen);
            bool bad = false;
            for (int k = 1; k <= n && !bad; ++k)
                bad = std::abs(k + a + b) < 0.1 || std::abs(2 * k + a + b - 2) < 0.1;
            if (bad) continue;
            cplx v = jacobi(n, cplx(a, 0.0), cplx(b, 0.0), cplx(z, 0.0));
            CHECK(std::abs(v.imag()) < 1e-13 * std::max(1.0, std::abs(v)));
            ++done;
        }
    }
}

TEST_CASE("jacobi: struct overloads match the flat signatures") {
    JacobiIndex idx{3, cplx(0.4, 0.8), cplx(-0.6, 0.5)};
    cplx z(0.3, -0.2);
    CHECK(jacobi(idx, z) == jacobi(idx.n, idx.alpha, idx.beta, z));
    CHECK(jacobi_deriv(idx, z) == jacobi_deriv(idx.n, idx.alpha, idx.beta, z));
    CHECK(jacobi_leading_coeff(idx) == jacobi_leading_coeff(idx.n, idx.alpha, idx.beta));
}
