#include "ptscatter/potentials.hpp"
#include "ptscatter/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ptscatter {

void validate(const ScarfParams& p) {
    if (!(p.A > 0.0)) throw InvalidParamError("ScarfParams: A must be positive");
    if (p.m < 0) throw InvalidParamError("ScarfParams: m must be non-negative");
}

void validate(const RMParams& p) {
    if (!(p.A > 0.0)) throw InvalidParamError("RMParams: A must be positive");
    if (p.m < 0) throw InvalidParamError("RMParams: m must be non-negative");
    if (!(p.A > p.m - 1.0))
        throw InvalidParamError("RMParams: require A > m-1, got A=" + std::to_string(p.A) +
                                " m=" + std::to_string(p.m));
}

std::string scarf_param_warning(const ScarfParams& p) {
    if (p.m >= 1 && !(p.B > p.m - 0.5))
        return "Scarf II extension of order m=" + std::to_string(p.m) +
               " with B <= m-1/2: the (2B-m+1) factor degenerates, denominator may have nodes";
    return {};
}

cplx scarf_conventional(double x, const ScarfParams& p) {
    double sech = 1.0 / std::cosh(x);
    double th = std::tanh(x);
    return cplx((-p.B * p.B - p.A * (p.A + 1.0)) * sech * sech,
                p.B * (2.0 * p.A + 1.0) * sech * th);
}

namespace {

// Shared body of the order-m rational extension in the variables
//   c      : 2B-m+1 (direct) or 2A-m+2 (partner)
//   lin    : -2A-1  (direct) or -2B    (partner)
//   quad   : 2B+1   (direct) or 2A+2   (partner)
//   (a, b) : (alpha, beta)   or (gamma, delta)
cplx scarf_rational(double x, const ScarfParams& p, double c, double lin, double quad,
                    cplx a, cplx b) {
    cplx z(0.0, std::sinh(x));
    cplx den = jacobi(p.m, -a - 1.0, b - 1.0, z);
    double scale = std::pow(1.0 + std::abs(z), p.m);
    if (std::abs(den) < 1e-10 * scale)
        throw NearNodeError("scarf_extended: denominator polynomial within 1e-10 of a node at x=" +
                            std::to_string(x));
    cplx rat = jacobi(p.m - 1, -a, b, z) / den;
    double ch = std::cosh(x);
    return scarf_conventional(x, p) + 2.0 * p.m * c + c * (lin + quad * z) * rat -
           c * c * ch * ch / 2.0 * rat * rat;
}

} // namespace

cplx scarf_extended(double x, const ScarfParams& p) {
    validate(p);
    if (p.m == 0) return scarf_conventional(x, p);
    return scarf_rational(x, p, 2.0 * p.B - p.m + 1.0, -2.0 * p.A - 1.0, 2.0 * p.B + 1.0,
                          p.alpha(), p.beta());
}

cplx scarf_extended_partner(double x, const ScarfParams& p) {
    validate(p);
    if (p.m == 0) return scarf_conventional(x, p);
    return scarf_rational(x, p, 2.0 * p.A - p.m + 2.0, -2.0 * p.B, 2.0 * p.A + 2.0,
                          p.gamma(), p.delta());
}

cplx rm_conventional(double x, const RMParams& p) {
    double sech = 1.0 / std::cosh(x);
    return cplx(-p.A * (p.A + 1.0) * sech * sech, 2.0 * p.B * std::tanh(x));
}

cplx rm_extended(double x, const RMParams& p) {
    validate(p);
    if (p.m == 0) return rm_conventional(x, p);
    cplx am = p.alpha_m(), bm = p.beta_m();
    cplx z(std::tanh(x), 0.0);
    cplx g = jacobi(p.m, am, bm, z);
    if (std::abs(g) < 1e-10)
        throw NearNodeError("rm_extended: g_m within 1e-10 of a node at x=" + std::to_string(x));
    cplx u = jacobi_deriv(p.m, am, bm, z) / g;
    cplx du = jacobi_deriv2(p.m, am, bm, z) / g - u * u;  // (g''/g - (g'/g)^2)
    cplx omz2 = 1.0 - z * z;
    cplx rat = 2.0 * omz2 * (2.0 * z * u - omz2 * du - static_cast<double>(p.m));
    return rm_conventional(x, p) + rat;
}

cplx evaluate(const PotentialSpec& spec, double x) {
    switch (spec.model) {
        case Model::ScarfConventional: return scarf_conventional(x, spec.scarf());
        case Model::ScarfExtended: return scarf_extended(x, spec.scarf());
        case Model::ScarfPsymConventional: return scarf_conventional(x, spec.scarf().swapped());
        case Model::ScarfExtendedPartner: return scarf_extended_partner(x, spec.scarf());
        case Model::RMConventional: return rm_conventional(x, spec.rm());
        case Model::RMExtended: return rm_extended(x, spec.rm());
    }
    throw InvalidParamError("evaluate: unknown model");
}

cplx v_asymptotic(const PotentialSpec& spec, int sign) {
    if (spec.is_rm()) return cplx(0.0, sign >= 0 ? 2.0 * spec.B : -2.0 * spec.B);
    return 0.0;
}

double denominator_min_abs(const PotentialSpec& spec, double x_lo, double x_hi, int samples) {
    if (samples < 2) throw InvalidParamError("denominator_min_abs: samples must be >= 2");
    int m = spec.m;
    if (m == 0 || spec.model == Model::ScarfConventional ||
        spec.model == Model::ScarfPsymConventional || spec.model == Model::RMConventional)
        return 1.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (samples - 1);
        double v;
        if (spec.model == Model::RMExtended) {
            RMParams p = spec.rm();
            v = std::abs(jacobi(m, p.alpha_m(), p.beta_m(), cplx(std::tanh(x), 0.0)));
        } else {
            ScarfParams p = spec.scarf();
            cplx a = spec.model == Model::ScarfExtendedPartner ? p.gamma() : p.alpha();
            cplx b = spec.model == Model::ScarfExtendedPartner ? p.delta() : p.beta();
            cplx z(0.0, std::sinh(x));
            v = std::abs(jacobi(m, -a - 1.0, b - 1.0, z));
        }
        best = std::min(best, v);
    }
    return best;
}

void assert_nodeless(const PotentialSpec& spec) {
    if (denominator_min_abs(spec, -30.0, 30.0, 6001) < 1e-8)
        throw NearNodeError("potential denominator has a near-node on [-30, 30]: " +
                            model_name(spec.model));
}

std::string model_name(Model model) {
    switch (model) {
        case Model::ScarfConventional: return "scarf";
        case Model::ScarfExtended: return "scarf-ext";
        case Model::ScarfPsymConventional: return "scarf-psym";
        case Model::ScarfExtendedPartner: return "scarf-psym-ext";
        case Model::RMConventional: return "rm";
        case Model::RMExtended: return "rm-ext";
    }
    return "?";
}

} // namespace ptscatter
