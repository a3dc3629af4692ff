#pragma once
#include "ptscatter/types.hpp"

namespace ptscatter {

// Degree and complex parameter pair of a Jacobi polynomial P_n^{(alpha,beta)}.
struct JacobiIndex {
    int n;
    cplx alpha;
    cplx beta;
};

/* Complex Gamma function.
 *
 * Lanczos approximation (g = 7, 9 coefficients), accurate to ~13 significant
 * digits on Re z >= 0.5, extended to the left half-plane by the reflection
 * formula Gamma(z) Gamma(1-z) = pi / sin(pi z).
 *
 * Throws PoleError when z lies within 1e-12 of a non-positive integer and
 * OverflowError when |Gamma(z)| is not representable in double precision
 * (use clgamma instead for products of large Gamma factors).
 */
cplx cgamma(cplx z);

/* log Gamma(z).
 *
 * Same Lanczos core in log form; exp(clgamma(z)) agrees with cgamma(z)
 * wherever the latter is representable.  The imaginary part is continuous on
 * Re z >= 0.5 but carries no global branch guarantee on the left half-plane;
 * quantities of physical interest are always built as exp of clgamma sums,
 * which is insensitive to 2 pi i offsets.
 */
cplx clgamma(cplx z);

/* Jacobi polynomial P_n^{(alpha,beta)}(z), complex parameters and argument,
 * by the standard three-term recurrence in the degree:
 *
 *   2k (k+a+b) (2k+a+b-2) P_k =
 *     (2k+a+b-1) [ (2k+a+b)(2k+a+b-2) z + a^2 - b^2 ] P_{k-1}
 *     - 2 (k+a-1)(k+b-1)(2k+a+b) P_{k-2}
 *
 * Exact for polynomials (no truncation).  Throws DegenerateParamError when a
 * recurrence denominator (k+a+b) or (2k+a+b-2), k <= n, vanishes.
 */
cplx jacobi(int n, cplx alpha, cplx beta, cplx z);
cplx jacobi(const JacobiIndex& idx, cplx z);

/* dP_n/dz via the parameter-shift identity
 *   d/dz P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
 */
cplx jacobi_deriv(int n, cplx alpha, cplx beta, cplx z);
cplx jacobi_deriv(const JacobiIndex& idx, cplx z);

// Second derivative, the shift identity applied twice.
cplx jacobi_deriv2(int n, cplx alpha, cplx beta, cplx z);

/* Coefficient of z^n in P_n^{(a,b)}(z):
 *
 *   Gamma(2n+a+b+1) / (2^n n! Gamma(n+a+b+1))
 *     = (1 / 2^n n!) * prod_{j=1..n} (n+a+b+j),
 *
 * computed as the Pochhammer product, which is entire in (a, b) and therefore
 * never hits a Gamma pole even when the quotient form is 0/0.
 */
cplx jacobi_leading_coeff(int n, cplx alpha, cplx beta);
cplx jacobi_leading_coeff(const JacobiIndex& idx);

} // namespace ptscatter
