#pragma once
#include "ptscatter/types.hpp"

#include <string>

namespace ptscatter {

/* Parameters of the complex PT-symmetric Scarf II family,
 *
 *   V(x) = (-B^2 - A(A+1)) sech^2 x + i B (2A+1) sech x tanh x,
 *
 * and its rational extensions of order m.  Derived Jacobi exponents:
 *   alpha = B - A - 1/2,   beta  = -B - A - 1/2,
 *   gamma = A - B + 1/2,   delta = -A - B - 1/2  (partner set),
 * and b = (beta+alpha)/(beta-alpha).
 */
struct ScarfParams {
    double A;
    double B;
    int m = 0;

    cplx alpha() const { return {B - A - 0.5, 0.0}; }
    cplx beta() const { return {-B - A - 0.5, 0.0}; }
    cplx gamma() const { return {A - B + 0.5, 0.0}; }
    cplx delta() const { return {-A - B - 0.5, 0.0}; }
    // parameter swap B <-> A + 1/2 generating the second family
    ScarfParams swapped() const { return {B - 0.5, A + 0.5, m}; }
};

/* Parameters of the complex PT-symmetric Rosen-Morse II family,
 *
 *   V(x) = -A(A+1) sech^2 x + 2 i B tanh x,
 *
 * and its rational extensions.  The extension polynomial g_m and the state
 * polynomials carry the index-dependent complex Jacobi parameters
 *   alpha_j = A+1-j + iB/(A+1-j),   beta_j = A+1-j - iB/(A+1-j).
 */
struct RMParams {
    double A;
    double B;
    int m = 0;

    cplx alpha_j(int j) const {
        double d = A + 1.0 - j;
        return {d, B / d};
    }
    cplx beta_j(int j) const {
        double d = A + 1.0 - j;
        return {d, -B / d};
    }
    cplx alpha_m() const { return alpha_j(m); }
    cplx beta_m() const { return beta_j(m); }
};

// Throws InvalidParamError when outside the validity domain (A <= 0, or for
// RM-II A <= m-1 where the extension parameters degenerate).
void validate(const ScarfParams& p);
void validate(const RMParams& p);

// For Scarf II the analogue of the RM-II bound is B > m - 1/2; the literature
// is silent on it, so it is reported as a warning string (empty if fine)
// rather than enforced.
std::string scarf_param_warning(const ScarfParams& p);

cplx scarf_conventional(double x, const ScarfParams& p);

/* Rationally extended Scarf II potential of order m,
 *
 *   V_m = V + 2m(2B-m+1)
 *         + (2B-m+1) [ (-2A-1) + (2B+1) i sinh x ] P_{m-1}^{(-a,b)}/P_m^{(-a-1,b-1)}
 *         - (2B-m+1)^2 (cosh^2 x / 2) (P_{m-1}^{(-a,b)}/P_m^{(-a-1,b-1)})^2
 *
 * with (a, b) = (alpha, beta) and every polynomial evaluated at i sinh x.
 * m = 0 returns the conventional potential exactly.
 *
 * Throws NearNodeError when |P_m^{(-a-1,b-1)}(i sinh x)| < 1e-10 (1+|i sinh x|)^m,
 * signalling a parameter choice that violates nodelessness on the real axis.
 */
cplx scarf_extended(double x, const ScarfParams& p);

/* The partner potential generated by the swap B <-> A + 1/2, written in its
 * own (gamma, delta) parameters:
 *
 *   V_m = V + 2m(2A-m+2)
 *         + (2A-m+2) [ (-2B) + (2A+2) i sinh x ] P_{m-1}^{(-g,d)}/P_m^{(-g-1,d-1)}
 *         - (2A-m+2)^2 (cosh^2 x / 2) (P_{m-1}^{(-g,d)}/P_m^{(-g-1,d-1)})^2.
 *
 * Algebraically this equals scarf_extended at the swapped parameter set
 * (A' = B - 1/2, B' = A + 1/2); the equality is asserted in tests, never
 * assumed here.
 */
cplx scarf_extended_partner(double x, const ScarfParams& p);

cplx rm_conventional(double x, const RMParams& p);

/* Rationally extended RM-II potential: conventional part plus
 *
 *   2 (1-z^2) [ 2 z g'/g - (1-z^2) ( g''/g - (g'/g)^2 ) - m ],
 *
 * z = tanh x, g = P_m^{(alpha_m,beta_m)}(z), primes d/dz via the parameter
 * shift identity.  Throws NearNodeError when |g_m(z)| < 1e-10.
 */
cplx rm_extended(double x, const RMParams& p);

// The six potential variants of the family, addressable as one value type
// for grid evaluation, pole scans and oracle verification.
enum class Model {
    ScarfConventional,
    ScarfExtended,
    ScarfPsymConventional,  // conventional at the swapped parameters (same function)
    ScarfExtendedPartner,
    RMConventional,
    RMExtended,
};

struct PotentialSpec {
    Model model;
    double A;
    double B;
    int m = 0;

    ScarfParams scarf() const { return {A, B, m}; }
    RMParams rm() const { return {A, B, m}; }
    bool is_rm() const { return model == Model::RMConventional || model == Model::RMExtended; }
};

cplx evaluate(const PotentialSpec& spec, double x);

// Asymptotic value of the potential as x -> +inf (sign=+1) or -inf (sign=-1):
// 0 for Scarf II, +-2iB for RM-II.
cplx v_asymptotic(const PotentialSpec& spec, int sign);

/* Minimum over a uniform grid of the modulus of the denominator polynomial
 * (P_m^{(-a-1,b-1)}(i sinh x) for Scarf II variants, g_m(tanh x) for RM-II;
 * identically 1 when m = 0).  Used to validate nodelessness before
 * scattering or eigenvalue runs.
 */
double denominator_min_abs(const PotentialSpec& spec, double x_lo, double x_hi, int samples);

// Entry-point guard: scans [-30, 30] with 6001 samples and throws
// NearNodeError below 1e-8.
void assert_nodeless(const PotentialSpec& spec);

std::string model_name(Model model);

} // namespace ptscatter
