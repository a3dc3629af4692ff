// Acceptance gate: one line per criterion, tolerances pinned in code.
// Exit status 0 only when every criterion passes.
#include "ptscatter/eop.hpp"
#include "ptscatter/oracle.hpp"
#include "ptscatter/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace ptscatter;
using Clock = std::chrono::steady_clock;

namespace {

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// 1. The m = 0 rational extension is the conventional potential, so its
//    amplitudes must reproduce the conventional ones. 200 random draws.
Outcome criterion1() {
    std::mt19937 gen(20250819);
    std::uniform_real_distribution<double> uA(0.5, 4.0), uB(0.6, 4.0), uk(0.1, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        double A = uA(gen), B = uB(gen), k = uk(gen);
        Amplitudes c = scarf_usual_amplitudes(k, A, B);
        Amplitudes e = scarf_extended_amplitudes(k, ScarfParams{A, B, 0});
        worst = std::max({worst, rel(e.t_left, c.t_left), rel(e.r_left, c.r_left),
                          rel(e.r_right, c.r_right), rel(e.t_right, c.t_right)});
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst amplitude rel dev %.2e, tol 1e-12", worst);
    return {worst <= 1e-12, buf};
}

// 2. The degree-m dressing factor has unit modulus on the real k axis, so
//    reflectivity and transmitivity are those of the m = 0 well.
Outcome criterion2() {
    double worstF = 0.0;
    for (int m = 0; m <= 5; ++m)
        for (int i = 0; i < 1000; ++i) {
            double k = 0.05 + i * (6.0 - 0.05) / 999.0;
            worstF = std::max(worstF, std::abs(std::abs(scarf_fm_factor(cplx(k, 0.0), 1.3, m)) - 1.0));
        }
    double worstRT = 0.0;
    for (int m = 1; m <= 5; ++m)
        for (double k : {0.5, 1.0, 2.0}) {
            Reflectivity fc = reflectivity_transmitivity(scarf_usual_amplitudes(k, 2.5, 1.3));
            Reflectivity fe =
                reflectivity_transmitivity(scarf_extended_amplitudes(k, ScarfParams{2.5, 1.3, m}));
            worstRT = std::max({worstRT, std::abs(fe.R_left - fc.R_left) / fc.R_left,
                                std::abs(fe.R_right - fc.R_right) / fc.R_right,
                                std::abs(fe.T - fc.T) / fc.T});
        }
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst ||F|-1| %.2e (tol 1e-13), worst R/T rel dev %.2e (tol 1e-12)",
                  worstF, worstRT);
    return {worstF < 1e-13 && worstRT <= 1e-12, buf};
}

// 3. The two m = 1 constructions of the exceptional polynomial (the
//    direct two-term formula and the five-polynomial general form) agree
//    pointwise at random complex parameters.
Outcome criterion3() {
    std::mt19937 gen(771);
    std::uniform_real_distribution<double> ur(-2.5, 2.5), ui(-1.0, 1.0), uz(-1.5, 1.5);
    double worst = 0.0;
    int checked = 0;
    for (int n = 0; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            cplx a, b;
            for (;;) {
                a = cplx(ur(gen), ui(gen));
                b = cplx(ur(gen), ui(gen));
                bool ok = std::abs(a - b) > 0.3 && std::abs(a + cplx(n)) > 0.3 &&
                          std::abs(b + cplx(n)) > 0.3 && std::abs(a + cplx(n - 0.0)) > 0.3;
                for (int j = 0; ok && j <= n + 1; ++j)
                    if (std::abs(a + b + cplx(2.0 * j)) < 0.3) ok = false;
                if (ok) break;
            }
            cplx z(uz(gen), uz(gen));
            cplx want = xm_jacobi(1, n, a, b, z);
            double scale = std::max(1.0, std::abs(want));
            worst = std::max({worst,
                              std::abs(x1_jacobi(n, a, b, z, X1Path::Direct) - want) / scale,
                              std::abs(x1_jacobi(n, a, b, z, X1Path::DerivativeEliminated) - want) / scale});
            ++checked;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d points, worst rel dev %.2e, tol 1e-10", checked, worst);
    return {worst <= 1e-10, buf};
}

// 4. Closed-form reflectivity/transmitivity of the vanishing-asymptote
//    family against the direct ODE solver, both incidence sides.
Outcome criterion4() {
    double worst = 0.0;
    for (int m : {0, 1, 2}) {
        PotentialSpec spec{m ? Model::ScarfExtended : Model::ScarfConventional, 2.5, 1.3, m};
        auto V = [&](double x) { return evaluate(spec, x); };
        for (double k : {0.5, 1.0, 2.0}) {
            Reflectivity f =
                reflectivity_transmitivity(scarf_extended_amplitudes(k, ScarfParams{2.5, 1.3, m}));
            ScatterSolution L = solve_scattering(V, k * k, 0.0, Side::Left, 20.0, 1e-10);
            ScatterSolution R = solve_scattering(V, k * k, 0.0, Side::Right, 20.0, 1e-10);
            worst = std::max({worst, std::abs(std::norm(L.t) - f.T) / f.T,
                              std::abs(std::norm(L.r) - f.R_left) / f.R_left,
                              std::abs(std::norm(R.r) - f.R_right) / f.R_right});
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "18 solver runs, worst R/T rel dev %.2e, tol 1e-4", worst);
    return {worst <= 1e-4, buf};
}

// 5. Same for the asymmetric-asymptote family, where the channel labeling
//    of the two complex wavenumbers is resolved, not assumed: at least one
//    labeling must reproduce both reflectivities.
Outcome criterion5() {
    double worstT = 0.0, worstR = 0.0;
    bool all_resolved = true;
    for (int m : {0, 1}) {
        for (double E : {2.0, 3.0, 5.0}) {
            PotentialSpec spec{m ? Model::RMExtended : Model::RMConventional, 2.0, 1.0, m};
            VerifyReport v = verify_amplitudes(spec, E, 10.0, 1e-12);
            worstT = std::max(worstT, v.rel_T);
            double direct = std::max(v.rel_R_left, v.rel_R_right);
            double swapped = std::max(v.rel_R_left_swapped, v.rel_R_right_swapped);
            worstR = std::max(worstR, std::min(direct, swapped));
            if (!(direct <= 1e-3 || swapped <= 1e-3)) all_resolved = false;
        }
    }
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "worst T rel dev %.2e (tol 1e-3), worst best-labeling R rel dev %.2e (tol 1e-3)",
                  worstT, worstR);
    return {worstT <= 1e-3 && worstR <= 1e-3 && all_resolved, buf};
}

// 6. The shooting oracle reproduces every closed-form bound energy of all
//    four families at the four reference parameter triples.
Outcome criterion6() {
    struct Triple { double A, B; int m; };
    const Triple triples[] = {{2.0, 1.0, 0}, {2.5, 1.3, 1}, {2.0, 1.0, 1}, {1.0, 1.0, 1}};
    double worst = 0.0;
    int count = 0;
    for (const Triple& tr : triples) {
        ScarfParams sp{tr.A, tr.B, tr.m};
        RMParams rp{tr.A, tr.B, tr.m};
        struct Fam { PotentialSpec spec; std::vector<double> Es; double L; };
        const Fam fams[] = {
            {{Model::ScarfExtended, tr.A, tr.B, tr.m}, scarf_energies(sp), 16.0},
            {{Model::ScarfExtendedPartner, tr.A, tr.B, tr.m}, scarf_psym_energies(sp), 16.0},
            {{Model::RMConventional, tr.A, tr.B, 0}, rm_energies(rp, false), 14.0},
            {{Model::RMExtended, tr.A, tr.B, tr.m}, rm_energies(rp, true), 14.0},
        };
        for (const Fam& f : fams) {
            auto V = [&](double x) { return evaluate(f.spec, x); };
            for (double E : f.Es) {
                double lo = E - 0.25, hi = E + 0.25;
                // the vanishing-asymptote families need E < 0; keep the
                // bracket clear of the continuum edge
                if (f.spec.model == Model::ScarfExtended ||
                    f.spec.model == Model::ScarfExtendedPartner)
                    hi = std::min(hi, -0.05);
                // slow-decay embedded levels need a wider domain
                double L = E > 0.5 ? 18.0 : f.L;
                ShootResult r = shoot_eigen(V, lo, hi, L, 1e-8);
                worst = std::max(worst, std::abs(r.energy - E));
                ++count;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d levels shot, worst energy dev %.2e, tol 1e-6", count, worst);
    return {worst <= 1e-6, buf};
}

// 7. Every in-scope closed-form eigenfunction satisfies its equation:
//    5-point finite-difference residual over [-15, 15], step 1e-3.
Outcome criterion7() {
    struct Triple { double A, B; int m; };
    const Triple triples[] = {{2.0, 1.0, 0}, {2.5, 1.3, 1}, {2.0, 1.0, 1}, {1.0, 1.0, 1}};
    Grid g{-15.0, 15.0, 1e-3};
    double worst = 0.0;
    int count = 0;
    for (const Triple& tr : triples) {
        ScarfParams sp{tr.A, tr.B, tr.m};
        RMParams rp{tr.A, tr.B, tr.m};
        struct SV { ScarfVariant v; Model mdl; const std::vector<double> Es; };
        const SV svs[] = {
            {ScarfVariant::Conventional, Model::ScarfConventional, scarf_energies(sp)},
            {ScarfVariant::Extended, Model::ScarfExtended, scarf_energies(sp)},
            {ScarfVariant::PsymConventional, Model::ScarfPsymConventional, scarf_psym_energies(sp)},
            {ScarfVariant::PsymExtended, Model::ScarfExtendedPartner, scarf_psym_energies(sp)},
        };
        for (const SV& s : svs) {
            PotentialSpec spec{s.mdl, tr.A, tr.B, tr.m};
            auto V = [&](double x) { return evaluate(spec, x); };
            for (int n = 0; n < (int)s.Es.size(); ++n) {
                worst = std::max(worst, residual(V, scarf_wavefunction(sp, s.v, n), s.Es[n], g));
                ++count;
            }
        }
        {
            PotentialSpec spec{Model::RMConventional, tr.A, tr.B, 0};
            auto V = [&](double x) { return evaluate(spec, x); };
            auto Es = rm_energies(rp, false);
            for (int n = 0; n < (int)Es.size(); ++n) {
                worst = std::max(
                    worst, residual(V, rm_wavefunction(rp, RMVariant::Conventional, n), Es[n], g));
                ++count;
            }
        }
        {
            PotentialSpec spec{Model::RMExtended, tr.A, tr.B, tr.m};
            auto V = [&](double x) { return evaluate(spec, x); };
            auto Es = rm_energies(rp, true);
            // the energies list omits the deleted level n = m; recover the
            // surviving level indices in order
            std::vector<int> ns;
            for (int n = 0; n < tr.A + 1.0; ++n)
                if (n != tr.m) ns.push_back(n);
            for (size_t i = 0; i < Es.size(); ++i) {
                worst = std::max(worst,
                                 residual(V, rm_wavefunction(rp, RMVariant::ExtendedClosedForm, ns[i]),
                                          Es[i], g));
                ++count;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d eigenfunctions, worst residual %.2e, tol 1e-6", count, worst);
    return {worst < 1e-6, buf};
}

// 8. PT symmetry V(-x)* = V(x) for all six potentials.
Outcome criterion8() {
    const PotentialSpec specs[] = {
        {Model::ScarfConventional, 2.5, 1.3, 0}, {Model::ScarfExtended, 2.5, 1.3, 1},
        {Model::ScarfPsymConventional, 2.5, 1.3, 0}, {Model::ScarfExtendedPartner, 2.5, 1.3, 1},
        {Model::RMConventional, 2.0, 1.0, 0}, {Model::RMExtended, 2.0, 1.0, 1},
    };
    std::mt19937 gen(88);
    std::uniform_real_distribution<double> ux(-6.0, 6.0);
    double worst = 0.0;
    for (const auto& s : specs)
        for (int i = 0; i < 200; ++i) {
            double x = ux(gen);
            cplx v = evaluate(s, x);
            worst = std::max(worst, std::abs(std::conj(evaluate(s, -x)) - v) / (1.0 + std::abs(v)));
        }
    char buf[128];
    std::snprintf(buf, sizeof buf, "6 potentials x 200 points, worst dev %.2e, tol 1e-12", worst);
    return {worst <= 1e-12, buf};
}

// 9. Handed reflection: the two reflection amplitudes differ while the
//    transmission amplitude is common, and the ODE solver sees the same
//    ordering of the two reflection magnitudes.
Outcome criterion9() {
    bool ok = true;
    double min_split = 1e300;
    for (int m : {0, 1, 2}) {
        Amplitudes a = scarf_extended_amplitudes(1.0, ScarfParams{2.3, 1.1, m});
        min_split = std::min(min_split, std::abs(a.r_left - a.r_right));
        if (!(std::abs(a.r_left - a.r_right) > 1e-3)) ok = false;
        if (!(a.t_left == a.t_right)) ok = false;
        PotentialSpec spec{m ? Model::ScarfExtended : Model::ScarfConventional, 2.3, 1.1, m};
        auto V = [&](double x) { return evaluate(spec, x); };
        // the m = 2 rational correction still sits at ~1.3e-3 at |x| = 12,
        // which trips the solver's flatness guard; 14 clears it for all m
        ScatterSolution L = solve_scattering(V, 1.0, 0.0, Side::Left, 14.0, 1e-10);
        ScatterSolution R = solve_scattering(V, 1.0, 0.0, Side::Right, 14.0, 1e-10);
        bool closed_order = std::abs(a.r_left) > std::abs(a.r_right);
        bool oracle_order = std::abs(L.r) > std::abs(R.r);
        if (closed_order != oracle_order) ok = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "smallest |r_l - r_r| %.2e (floor 1e-3), t side-equal, solver agrees on ordering",
                  min_split);
    return {ok, buf};
}

// 10. Bound-state poles of t on the positive imaginary axis. Every found
//     pole must lie on one of the two analytic towers, and the advertised
//     sets must be found. At (0.3, 2) the shallow first-tower level at
//     kappa = 0.3 is also in the scanned window and is checked as such.
Outcome criterion10() {
    auto towers = [](double A, double B) {
        std::vector<double> v;
        for (int n = 0; n < A; ++n) v.push_back(A - n);
        for (int n = 0; n + 0.5 < B; ++n) v.push_back(B - 0.5 - n);
        return v;
    };
    bool ok = true;
    double worst = 0.0;
    struct Case { double A, B; std::vector<double> required; };
    const Case cases[] = {{2.5, 0.3, {2.5, 1.5, 0.5}}, {0.3, 2.0, {1.5, 0.5}}};
    for (const Case& c : cases) {
        auto found = pole_scan(PotentialSpec{Model::ScarfConventional, c.A, c.B, 0}, 0.05, 3.2, 400);
        for (double want : c.required) {
            double best = 1e300;
            for (cplx z : found) best = std::min(best, std::abs(z - cplx(0.0, want)));
            worst = std::max(worst, best);
            if (best > 1e-8) ok = false;
        }
        for (cplx z : found) {
            double best = 1e300;
            for (double t : towers(c.A, c.B)) best = std::min(best, std::abs(z - cplx(0.0, t)));
            if (best > 1e-8) ok = false;  // spurious crossing
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "required poles located to %.2e (tol 1e-8), no off-tower artifacts",
                  worst);
    return {ok, buf};
}

// 11. Shape invariance of the extended chain after one additive constant.
Outcome criterion11() {
    SIReport r = rm_si_check(RMParams{2.0, 1.0, 1}, Grid{-12.0, 12.0, 1e-2});
    char buf[160];
    std::snprintf(buf, sizeof buf, "max deviation %.2e (tol 1e-8), partner pairs with (A-1, m-1): %s",
                  r.max_dev, r.plus_matches_shifted ? "yes" : "no");
    return {r.max_dev < 1e-8, buf};
}

// 12. The closed-form extended eigenfunction and the one built by the
//     first-order intertwining operator are proportional. At n = 1 the
//     level is deleted: both constructions vanish identically, which is
//     the degenerate reading of proportionality, checked as such.
Outcome criterion12() {
    RMParams p{2.0, 1.0, 1};
    BoundState c0 = rm_wavefunction(p, RMVariant::ExtendedClosedForm, 0);
    BoundState o0 = rm_wavefunction(p, RMVariant::ExtendedOperator, 0);
    cplx ratio0 = c0.eval(0.0) / o0.eval(0.0);
    double worst = 0.0;
    for (double x = -2.5; x <= 2.5; x += 0.125) {
        cplx den = o0.eval(x);
        if (std::abs(den) < 1e-12) continue;
        worst = std::max(worst, std::abs(c0.eval(x) / den - ratio0) / std::abs(ratio0));
    }
    BoundState c1 = rm_wavefunction(p, RMVariant::ExtendedClosedForm, 1);
    BoundState o1 = rm_wavefunction(p, RMVariant::ExtendedOperator, 1);
    double zmax = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.25)
        zmax = std::max({zmax, std::abs(c1.eval(x)), std::abs(o1.eval(x))});
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n=0 ratio constant to %.2e (tol 1e-9); n=1 both paths vanish, max %.2e (tol 1e-12)",
                  worst, zmax);
    return {worst <= 1e-9 && zmax < 1e-12, buf};
}

} // namespace

int main() {
    struct Entry {
        int id;
        Outcome (*fn)();
        double budget_s;
    };
    const Entry entries[] = {
        {1, criterion1, 1.0},  {2, criterion2, 1.0},  {3, criterion3, 1.0},
        {4, criterion4, 30.0}, {5, criterion5, 60.0}, {6, criterion6, 30.0},
        {7, criterion7, 30.0}, {8, criterion8, 1.0},  {9, criterion9, 10.0},
        {10, criterion10, 5.0}, {11, criterion11, 5.0}, {12, criterion12, 2.0},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_budget = dt < e.budget_s;
        bool pass = o.pass && in_budget;
        if (!pass) ++failures;
        std::printf("CRITERION %d: %s (%s) [%.2fs, budget %.0fs]\n", e.id, pass ? "PASS" : "FAIL",
                    o.detail.c_str(), dt, e.budget_s);
    }
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all 12 criteria pass\n");
    return failures ? 1 : 0;
}
