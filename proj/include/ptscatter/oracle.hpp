#pragma once
#include "ptscatter/scattering.hpp"

#include <functional>

namespace ptscatter {

enum class Side { Left, Right };

/* One numerically solved scattering problem.  r and t are normalized to a
 * unit incident coefficient in the textbook convention (coefficients of
 * the global exponentials e^{+-ikx}), so they are directly comparable to
 * the closed forms.  match_residual is the spread between decompositions
 * taken at two matching radii, an estimate of the sub-asymptotic tail
 * contamination; solutions with match_residual < 1e-6 are trustworthy. */
struct ScatterSolution {
    cplx r, t;
    Side side;
    double energy;
    cplx k, k_prime;
    double match_residual;
    double domain_half_width;
    double step_control;
};

/* Integrate -psi'' + V psi = E psi across [-L, L] with an adaptive
 * embedded Runge-Kutta pair (Dormand-Prince 5(4)) on the complex system
 * (psi, psi'), starting from a pure outgoing wave on the transmission
 * side so the exponentially growing direction is integrated stably, and
 * decompose at the incident boundary into incident + reflected waves.
 * The decomposition uses first-order tail-corrected exponentials
 * e^{+-ikx}(1 + u e^{-gamma |x|}) with gamma and u measured from the
 * actual potential at the boundary, which suppresses the leading
 * truncation error of a merely finite matching radius.
 *
 * B_asym sets the asymptotic offsets V(-+inf) = -+ 2i B_asym (0 for
 * Scarf II); k = psqrt(E + 2i B_asym), k' = psqrt(E - 2i B_asym).
 * tol is the integrator's relative tolerance.
 *
 * Throws AsymptoteError when |V(+-L) - V(-+inf)| > 1e-3, NonConvergence
 * when step control fails or tol is below the double-precision floor
 * (~5e-15), which no step-size policy can satisfy. */
ScatterSolution solve_scattering(const std::function<cplx(double)>& V, double E,
                                 double B_asym, Side side, double L, double tol);

/* Bound-state search by the PT-symmetric Wronskian condition: integrate
 * the decaying solution inward from +L and locate zeros of
 *   f(E) = 2 Re(conj(psi) psi')(0) / (|psi(0)|^2 + |psi'(0)|^2),
 * which vanishes exactly when |psi| has the even-reflection property a
 * PT-normalizable state must have.  The bracket is scanned at 50 points;
 * NoRootError if no sign change, multiple_root_warning if more than one.
 * The first sign change is refined by bisection plus a final secant
 * polish to tolerance tol in E. */
struct ShootResult {
    double energy;
    bool multiple_root_warning;
};
ShootResult shoot_eigen(const std::function<cplx(double)>& V, double E_lo, double E_hi,
                        double L, double tol);

/* Closed forms vs the ODE oracle, both incidence sides.  For RM-II the
 * comparison is recorded under both wavenumber labelings: "artifact"
 * pairs the closed-form left entries with numeric left incidence,
 * "swapped" evaluates the closed forms with k and k' exchanged (the
 * other reading the asymptotics would permit a priori).
 * rm_reflection_factor_modulus records
 * |(-beta_m - ik)/(-beta_m + ik)| (the extended reflection dressing
 * factor, whose modulus is not 1 at real E).  Phases are offsets between
 * numeric and analytic amplitudes under the unit-incident anchoring. */
struct VerifyReport {
    PotentialSpec model;
    double e_or_k = 0.0;  // k for Scarf models, E for RM models
    Amplitudes analytic;
    ScatterSolution left, right;
    double rel_T = 0.0, rel_R_left = 0.0, rel_R_right = 0.0;
    double rel_T_swapped = 0.0, rel_R_left_swapped = 0.0, rel_R_right_swapped = 0.0;
    bool artifact_labeling_matches = true;
    double phase_t = 0.0, phase_r_left = 0.0;
    double rm_reflection_factor_modulus = 1.0;
};
VerifyReport verify_amplitudes(const PotentialSpec& model, double E_or_k, double L, double tol);

} // namespace ptscatter
