#include "ptscatter/scattering.hpp"
#include "ptscatter/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace ptscatter {

cplx psqrt(cplx z) {
    cplx r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return r;
}

namespace {

const cplx I(0.0, 1.0);

// t_left of the conventional Scarf II at complex k, in log-Gamma space.
// All Gamma arguments carry -ik, which normalizes t -> 1 as k -> +inf
// (the variant with Gamma(1+ik) in the denominator differs by a
// unit-modulus factor Gamma(1+ik)/Gamma(1-ik) whose phase diverges at
// large k; the direct ODE solver confirms this normalization including
// the phase of t and r).
cplx scarf_tleft(cplx k, double A, double B) {
    cplx ik = I * k;
    cplx lg = clgamma(-A - ik) + clgamma(1.0 + A - ik) + clgamma(0.5 - B - ik) +
              clgamma(0.5 + B - ik) - clgamma(-ik) - clgamma(1.0 - ik) -
              2.0 * clgamma(0.5 - ik);
    if (lg.real() > 709.0) throw OverflowError("scarf_tleft: amplitude overflows");
    return std::exp(lg);
}

} // namespace

cplx scarf_fm_factor(cplx k, double B, int m) {
    cplx ik = I * k;
    cplx num = (B * B - (ik - 0.5) * (ik - 0.5)) + (B - ik + 0.5) * (1.0 - m);
    cplx den = (B * B - (ik + 0.5) * (ik + 0.5)) + (B + ik + 0.5) * (1.0 - m);
    if (std::abs(den) < 1e-13 * (1.0 + B * B + std::norm(k)))
        throw PoleError("scarf_fm_factor: denominator vanishes");
    return num / den;
}

Amplitudes scarf_usual_amplitudes(double k, double A, double B) {
    if (k <= 0.0) throw InvalidParamError("scarf_usual_amplitudes: k must be positive");
    cplx t = scarf_tleft(cplx(k, 0.0), A, B);
    double even = std::cos(PI * A) * std::sin(PI * B) / std::cosh(PI * k);
    double odd = std::sin(PI * A) * std::cos(PI * B) / std::sinh(PI * k);
    Amplitudes a;
    a.k = a.k_prime = cplx(k, 0.0);
    a.t_left = a.t_right = t;
    a.r_left = t * I * (even + odd);
    a.r_right = t * I * (-even + odd);
    return a;
}

Amplitudes scarf_extended_amplitudes(double k, const ScarfParams& p) {
    validate(p);
    Amplitudes a = scarf_usual_amplitudes(k, p.A, p.B);
    cplx F = scarf_fm_factor(cplx(k, 0.0), p.B, p.m);
    a.t_left *= F;
    a.t_right *= F;
    a.r_left *= F;
    a.r_right *= F;
    return a;
}

Amplitudes scarf_psym_amplitudes(double k, const ScarfParams& p) {
    return scarf_extended_amplitudes(k, p.swapped());
}

WaveNumbers rm_wavenumbers(double E, double B) {
    if (E == 0.0 && B == 0.0)
        throw InvalidParamError("rm_wavenumbers: E and B both zero");
    WaveNumbers w;
    w.energy = E;
    w.k = psqrt(cplx(E, 2.0 * B));
    w.k_prime = psqrt(cplx(E, -2.0 * B));
    return w;
}

Amplitudes rm_extended_amplitudes(const WaveNumbers& w, const RMParams& p) {
    validate(p);
    double A = p.A;
    cplx k = w.k, kp = w.k_prime;
    cplx ik = I * k, ikp = I * kp;
    cplx am = p.alpha_m(), bm = p.beta_m();
    if (std::abs(ik - bm) < 1e-13 * (1.0 + std::abs(bm)))
        throw DegenerateParamError("rm_extended_amplitudes: ik coincides with beta_m");

    cplx s = -I * (k + kp) / 2.0;
    cplx s2 = I * (k - kp) / 2.0;
    auto core = [A](cplx o) { return clgamma(-A - 1.0 + o) + clgamma(A + 2.0 + o); };

    cplx lt = core(s) - clgamma(1.0 - ikp) - clgamma(-ik);
    if (lt.real() > 709.0) throw OverflowError("rm_extended_amplitudes: overflow");
    cplx tlu = std::exp(lt);
    cplx rlu = std::exp(clgamma(ik) - clgamma(-ik) + core(s) - core(s2));
    cplx rru = std::exp(clgamma(ikp) - clgamma(-ikp) + core(s) - core(-s2));

    Amplitudes a;
    a.k = k;
    a.k_prime = kp;
    a.t_left = (am + ikp) / (ik - bm) * tlu;
    a.r_left = (-bm - ik) / (-bm + ik) * rlu;
    a.t_right = (-bm - ik) / (am - ikp) * (kp / k) * tlu;
    a.r_right = (am + ikp) / (am - ikp) * rru;
    return a;
}

Amplitudes rm_usual_amplitudes(const WaveNumbers& w, double A) {
    double B = std::imag(w.k * w.k) / 2.0;  // k^2 = E + 2iB
    return rm_extended_amplitudes(w, RMParams{A + 1.0, B, 0});
}

Reflectivity reflectivity_transmitivity(const Amplitudes& a) {
    return {std::norm(a.r_left), std::norm(a.r_right), std::norm(a.t_left)};
}

namespace {

// 1/t_left on the imaginary axis k = i*kappa for the four Scarf models;
// real there up to roundoff since every Gamma argument is real.
double pole_scan_g(const PotentialSpec& model, double kappa) {
    ScarfParams p = model.scarf();
    if (model.model == Model::ScarfPsymConventional || model.model == Model::ScarfExtendedPartner)
        p = p.swapped();
    cplx k(0.0, kappa);
    cplx t = scarf_tleft(k, p.A, p.B);
    if (model.model == Model::ScarfExtended || model.model == Model::ScarfExtendedPartner)
        t *= scarf_fm_factor(k, p.B, p.m);
    return (1.0 / t).real();
}

} // namespace

std::vector<cplx> pole_scan(const PotentialSpec& model, double kappa_lo, double kappa_hi,
                            int samples) {
    if (model.is_rm())
        throw InvalidParamError("pole_scan: only the Scarf II family has a real 1/t on the axis");
    if (!(kappa_lo >= 0.0) || kappa_hi <= kappa_lo || samples < 2)
        throw InvalidParamError("pole_scan: bad segment");

    // sample g = Re(1/t); a Gamma argument hit dead-on is resolved by an
    // epsilon nudge (next to a true pole of t the nudged |g| is tiny; next
    // to a pole cancelled by a zero of F_m it stays finite, so no root is
    // invented there)
    auto eval = [&](double kap) -> double {
        try {
            return pole_scan_g(model, kap);
        } catch (const PoleError&) {
            return pole_scan_g(model, kap + 1e-9 * (1.0 + kap));
        }
    };

    std::vector<cplx> poles;
    double h = (kappa_hi - kappa_lo) / samples;
    double prev_kap = kappa_lo == 0.0 ? 0.5 * h : kappa_lo;  // segment is open at 0
    double prev = eval(prev_kap);

    for (int j = 1; j <= samples; ++j) {
        double kap = kappa_lo + j * h;
        double g = eval(kap);
        if (prev != 0.0 && g != 0.0 && std::signbit(prev) != std::signbit(g)) {
            double a = prev_kap, b = kap, fa = prev;
            for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
                double mid = 0.5 * (a + b);
                double fm = eval(mid);
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            double root = 0.5 * (a + b);
            double gr = std::abs(eval(root));
            // a sign change across a zero of t has |1/t| exploding instead
            // of vanishing; the scale reference is the bracket-edge value
            if (gr < 1e-4 * std::max(1.0, std::abs(prev))) poles.emplace_back(0.0, root);
        }
        prev = g;
        prev_kap = kap;
    }
    return poles;
}

} // namespace ptscatter
