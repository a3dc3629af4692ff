#include "ptscatter/eop.hpp"
#include "ptscatter/specfun.hpp"

#include <cmath>

namespace ptscatter {

namespace {

void require_nonzero(cplx v, const char* what) {
    if (std::abs(v) < 1e-13)
        throw DegenerateParamError(std::string("eop: vanishing denominator ") + what);
}

} // namespace

cplx x1_jacobi(int n, cplx a, cplx b, cplx z, X1Path path) {
    require_nonzero(b - a, "(beta - alpha)");
    cplx s = a + b + 2.0 * static_cast<double>(n);
    require_nonzero(s, "(alpha + beta + 2n)");
    cplx bb = (b + a) / (b - a);
    cplx pn = jacobi(n, a, b, z);
    cplx two_pnm1;
    if (path == X1Path::Direct) {
        two_pnm1 = 2.0 * jacobi(n - 1, a, b, z);
    } else {
        cplx na = a + static_cast<double>(n), nb = b + static_cast<double>(n);
        require_nonzero(na * nb, "(n+alpha)(n+beta)");
        two_pnm1 = (s * (1.0 - z * z) * jacobi_deriv(n, a, b, z) -
                    static_cast<double>(n) * ((a - b) - s * z) * pn) /
                   (na * nb);
    }
    return (a - b) / (2.0 * s) * (((bb - z) * s + 2.0 * bb) * pn - two_pnm1);
}

cplx xm_jacobi(int m, int n, cplx a, cplx b, cplx z) {
    if (m < 1) throw InvalidParamError("xm_jacobi: m must be >= 1");
    cplx d1 = 2.0 * static_cast<double>(m) - a + b - 2.0;
    cplx d2 = a + b + 2.0 * static_cast<double>(n);
    cplx d3 = a + static_cast<double>(n - m + 1);
    require_nonzero(d1, "(2m-alpha+beta-2)");
    require_nonzero(d2, "(2n+alpha+beta)");
    require_nonzero(d3, "(alpha+n-m+1)");
    cplx t1 = jacobi(m, -a - 2.0, b, z);
    cplx pm1 = jacobi(m - 1, -a, b, z);
    cplx t2 = 2.0 * static_cast<double>(n) * (static_cast<double>(m) - a + b - 1.0) / (d1 * d2) * pm1;
    cplx t3 = static_cast<double>(n) * (b + static_cast<double>(m) - 1.0) / (d3 * d1) *
              jacobi(m - 2, -a, b, z);
    cplx t4 = (static_cast<double>(m) - a + b - 1.0) * (a + static_cast<double>(n)) / (d3 * d2) * pm1;
    return (t1 + t2 - t3) * jacobi(n, a, b, z) + t4 * jacobi(n - 1, a, b, z);
}

cplx xm_jacobi(const XmJacobi& q, cplx z) { return xm_jacobi(q.m, q.n, q.alpha, q.beta, z); }

cplx y_poly(const RMParams& p, int n, cplx z) {
    validate(p);
    cplx an = p.alpha_j(n), bn = p.beta_j(n);
    cplx am = p.alpha_m(), bm = p.beta_m();
    cplx dn = an + bn + 2.0 * static_cast<double>(n);
    cplx dm = am + bm + 2.0 * static_cast<double>(p.m);
    require_nonzero(dn, "(2n+alpha_n+beta_n)");
    require_nonzero(dm, "(2m+alpha_m+beta_m)");
    cplx cn = 2.0 * (an + static_cast<double>(n)) * (bn + static_cast<double>(n)) / dn;
    cplx cm = 2.0 * (am + static_cast<double>(p.m)) * (bm + static_cast<double>(p.m)) / dm;
    cplx gm = jacobi(p.m, am, bm, z);
    cplx gm1 = jacobi(p.m - 1, am, bm, z);
    return cn * gm * jacobi(n - 1, an, bn, z) - cm * gm1 * jacobi(n, an, bn, z);
}

cplx y_poly(const YPoly& y, cplx z) { return y_poly(y.params, y.n, z); }

} // namespace ptscatter
