#pragma once
#include "ptscatter/potentials.hpp"

#include <vector>

namespace ptscatter {

/* Closed-form scattering amplitudes for both incidence sides.  k is the
 * wavenumber of the x -> -inf asymptotic region and k_prime of x -> +inf;
 * for Scarf II (vanishing asymptotics) k_prime == k. */
struct Amplitudes {
    cplx r_left, t_left, r_right, t_right;
    cplx k, k_prime;
};

/* Asymptotic wavenumbers of the RM-II problem under this library's
 * convention: k^2 = E + 2iB (left region, matching V(-inf) = -2iB) and
 * k'^2 = E - 2iB (right region); principal square root with Re >= 0,
 * tie-break Im >= 0.  For real E, k' = conj(k). */
struct WaveNumbers {
    double energy;
    cplx k;
    cplx k_prime;
};

// principal square root used throughout: Re >= 0, tie-break Im >= 0
cplx psqrt(cplx z);

/* Conventional Scarf II amplitudes at real k > 0:
 *   t = G(-A-ik) G(1+A-ik) G(1/2-B-ik) G(1/2+B-ik)
 *       / [G(-ik) G(1+ik) G(1/2-ik)^2],
 *   r_left  = t * i [ cos(piA) sin(piB)/cosh(pik) + sin(piA) cos(piB)/sinh(pik)],
 *   r_right = t * i [-cos(piA) sin(piB)/cosh(pik) + sin(piA) cos(piB)/sinh(pik)],
 *   t_right = t_left (same code path).
 * Evaluated in log-Gamma space so large k never overflows. */
Amplitudes scarf_usual_amplitudes(double k, double A, double B);

/* Rationally extended Scarf II: every conventional amplitude is multiplied
 * by the degree-m factor
 *   F_m(k) = ([B^2-(ik-1/2)^2] + (B-ik+1/2)(1-m))
 *          / ([B^2-(ik+1/2)^2] + (B+ik+1/2)(1-m)),
 * which has unit modulus for real k (numerator and denominator are complex
 * conjugates there), so the reflectivity and transmitivity are unchanged. */
Amplitudes scarf_extended_amplitudes(double k, const ScarfParams& p);

// F_m at complex k; exposed for tests and the pole scanner.
cplx scarf_fm_factor(cplx k, double B, int m);

// Amplitudes of the second (partner) family: the extended formulas at the
// swapped parameter set A' = B - 1/2, B' = A + 1/2.
Amplitudes scarf_psym_amplitudes(double k, const ScarfParams& p);

WaveNumbers rm_wavenumbers(double E, double B);

/* RM-II amplitudes for the rationally extended potential of order m at
 * depth parameter A (asymptotic offsets +-2iB).  With s = -i(k+k')/2,
 * s2 = i(k-k')/2, core(o) = G(-A-1+o) G(A+2+o) and the Eq.-pair
 * alpha_m = A+1-m + iB/(A+1-m), beta_m = conj-like partner:
 *   t_left  = (alpha_m+ik')/(ik-beta_m) * core(s) / [G(1-ik') G(-ik)]
 *   r_left  = (-beta_m-ik)/(-beta_m+ik) * [G(ik)/G(-ik)] core(s)/core(s2)
 *   t_right = (-beta_m-ik)/(alpha_m-ik') * (k'/k) * core(s) / [G(1-ik') G(-ik)]
 *   r_right = (alpha_m+ik')/(alpha_m-ik') * [G(ik')/G(-ik')] core(s)/core(-s2)
 * all in log-Gamma space.  m = 0 gives the conventional potential of the
 * same depth A. */
Amplitudes rm_extended_amplitudes(const WaveNumbers& w, const RMParams& p);

/* The printed "usual" RM-II displays with label A describe the potential
 * of depth A+1 (the transmission poles sit on the depth-(A+1) tower; the
 * ODE oracle confirms).  This returns the consistent four-amplitude set
 * for that potential, i.e. rm_extended_amplitudes at (A+1, B, m=0); its
 * t_left and r_left coincide exactly with the printed displays at label A
 * through the Gamma recursion. */
Amplitudes rm_usual_amplitudes(const WaveNumbers& w, double A);

struct Reflectivity {
    double R_left, R_right, T;
};
Reflectivity reflectivity_transmitivity(const Amplitudes& a);

/* Scan the positive imaginary k-axis segment (kappa_lo, kappa_hi] for
 * poles of t_left, i.e. bound states.  1/t is real there for the Scarf II
 * family; sign changes are refined by bisection to 1e-8 and crossings
 * caused by zeros of t (where |1/t| diverges instead of vanishing) are
 * rejected.  Returns pole locations i*kappa.  Scarf models only. */
std::vector<cplx> pole_scan(const PotentialSpec& model, double kappa_lo, double kappa_hi,
                            int samples);

} // namespace ptscatter
