#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace ptscatter {

using cplx = std::complex<double>;

constexpr double PI = 3.14159265358979323846;

// Typed numeric failures. Every throw site states which quantity degenerated,
// so callers (and the CLI exit-code mapping) can distinguish a bad parameter
// choice from a genuine singularity of the formulas.

// Gamma evaluated within 1e-12 of a non-positive integer.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// |Gamma(z)| exceeds double range; caller should switch to clgamma.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// A recurrence or combination denominator vanished for the given
// (alpha, beta, n, m) combination.
struct DegenerateParamError : std::domain_error {
    using std::domain_error::domain_error;
};

// The polynomial in the denominator of a rationally extended potential
// came too close to a node on the real axis.
struct NearNodeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameter set outside the validity domain (e.g. A <= m-1 for RM-II).
struct InvalidParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Adaptive integrator failed its step control.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Potential has not flattened to its asymptotic constant at the matching radius.
struct AsymptoteError : std::domain_error {
    using std::domain_error::domain_error;
};

// Eigenvalue bracket contains no sign change of the matching function.
struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptscatter
