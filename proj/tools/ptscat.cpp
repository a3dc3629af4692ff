// ptscat: deterministic CSV/JSON artifacts for the two complex potential
// families: grid evaluation, spectra with oracle cross-checks, amplitude
// sweeps, and verification reports.
#include "CLI11.hpp"
#include "json.hpp"

#include "ptscatter/eop.hpp"
#include "ptscatter/oracle.hpp"
#include "ptscatter/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ptscatter;

namespace {

constexpr const char* kArtifact = "ptscat 1.0.0";
constexpr const char* kConvention =
    "k^2 = E + 2iB (left channel), k'^2 = E - 2iB (right channel); "
    "principal square root with Re >= 0, tie-break Im >= 0; "
    "the vanishing-asymptote family uses the same real k > 0 on both sides";

struct RunConfig {
    std::string model = "scarf";
    double A = 2.0, B = 1.0;
    int m = 0;
    double xmin = -8.0, xmax = 8.0;
    int nx = 161;
    double kmin = 0.2, kmax = 3.0;
    int nk = 15;
    double Emin = 0.5, Emax = 5.0;
    int nE = 10;
    double L = std::numeric_limits<double>::quiet_NaN();  // NaN: per-task default
    double tol = 1e-10;
    std::string out;  // empty: stdout
    std::string format = "csv";
};

std::string num(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    if (n <= 1) return {lo};
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

// canonical six-way model resolution; the -ext aliases with m = 0 are
// normalized to the conventional entry points so that the m = 0 reduction
// is byte-identical by construction, not by rounding
PotentialSpec resolve_model(const RunConfig& cfg) {
    const std::string& s = cfg.model;
    Model mdl;
    if (s == "scarf" || s == "scarf-ext")
        mdl = cfg.m > 0 ? Model::ScarfExtended : Model::ScarfConventional;
    else if (s == "scarf-psym" || s == "scarf-psym-ext")
        mdl = cfg.m > 0 ? Model::ScarfExtendedPartner : Model::ScarfPsymConventional;
    else if (s == "rm" || s == "rm-ext")
        mdl = cfg.m > 0 ? Model::RMExtended : Model::RMConventional;
    else
        throw InvalidParamError("unknown model '" + s + "'");
    PotentialSpec spec{mdl, cfg.A, cfg.B, cfg.m};
    if (spec.is_rm())
        validate(spec.rm());
    else
        validate(spec.scarf());
    assert_nodeless(spec);
    return spec;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // preformatted cells
};

std::string config_echo(const RunConfig& cfg, const PotentialSpec& spec) {
    std::ostringstream os;
    os << "model=" << model_name(spec.model) << " A=" << num(cfg.A) << " B=" << num(cfg.B)
       << " m=" << cfg.m;
    return os.str();
}

void write_csv(std::ostream& os, const RunConfig& cfg, const PotentialSpec& spec,
               const std::string& extra, const Table& t) {
    os << "# " << kArtifact << "\n";
    os << "# " << config_echo(cfg, spec) << "\n";
    if (!extra.empty()) os << "# " << extra << "\n";
    os << "# wavenumber convention: " << kConvention << "\n";
    os << "# columns: ";
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
}

bool cell_is_number(const std::string& c) {
    if (c.empty() || c == "nan") return false;
    char* end = nullptr;
    std::strtod(c.c_str(), &end);
    return end && *end == '\0';
}

void write_json(std::ostream& os, const RunConfig& cfg, const PotentialSpec& spec,
                const std::string& extra, const Table& t) {
    os << "{\n  \"artifact\": \"" << kArtifact << "\",\n";
    os << "  \"convention\": \"" << kConvention << "\",\n";
    os << "  \"config\": {\"model\": \"" << model_name(spec.model) << "\", \"A\": " << num(cfg.A)
       << ", \"B\": " << num(cfg.B) << ", \"m\": " << cfg.m << "},\n";
    if (!extra.empty()) os << "  \"note\": \"" << extra << "\",\n";
    os << "  \"columns\": [";
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? ", " : "") << '"' << t.columns[i] << '"';
    os << "],\n  \"rows\": [\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            const std::string& c = t.rows[r][i];
            os << (i ? ", " : "");
            if (cell_is_number(c))
                os << c;
            else if (c.empty() || c == "nan")
                os << "null";
            else
                os << '"' << c << '"';
        }
        os << (r + 1 < t.rows.size() ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
}

int emit(const RunConfig& cfg, const PotentialSpec& spec, const std::string& extra,
         const Table& t) {
    std::ostringstream body;
    if (cfg.format == "json")
        write_json(body, cfg, spec, extra, t);
    else
        write_csv(body, cfg, spec, extra, t);
    if (cfg.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw InvalidParamError("cannot open output file '" + cfg.out + "'");
        f << body.str();
    }
    return 0;
}

// ---------------------------------------------------------------- potential

int cmd_potential(const RunConfig& cfg) {
    PotentialSpec spec = resolve_model(cfg);
    Table t;
    t.columns = {"x", "re_V", "im_V"};
    for (double x : linspace(cfg.xmin, cfg.xmax, cfg.nx)) {
        cplx v = evaluate(spec, x);
        t.rows.push_back({num(x), num(v.real()), num(v.imag())});
    }
    std::ostringstream extra;
    extra << "grid: xmin=" << num(cfg.xmin) << " xmax=" << num(cfg.xmax) << " nx=" << cfg.nx;
    return emit(cfg, spec, extra.str(), t);
}

// ----------------------------------------------------------------- spectrum

struct Level {
    int n;
    double E;
    BoundState psi;
};

std::vector<Level> levels_for(const PotentialSpec& spec) {
    std::vector<Level> out;
    if (!spec.is_rm()) {
        ScarfParams p = spec.scarf();
        bool psym = spec.model == Model::ScarfPsymConventional ||
                    spec.model == Model::ScarfExtendedPartner;
        auto Es = psym ? scarf_psym_energies(p) : scarf_energies(p);
        ScarfVariant v = spec.model == Model::ScarfConventional ? ScarfVariant::Conventional
                         : spec.model == Model::ScarfExtended   ? ScarfVariant::Extended
                         : spec.model == Model::ScarfPsymConventional
                             ? ScarfVariant::PsymConventional
                             : ScarfVariant::PsymExtended;
        for (int n = 0; n < (int)Es.size(); ++n)
            out.push_back({n, Es[n], scarf_wavefunction(p, v, n)});
    } else {
        RMParams p = spec.rm();
        bool ext = spec.model == Model::RMExtended;
        auto Es = rm_energies(p, ext);
        // the extended tower omits the deleted level n = m; report the true
        // level indices of the survivors
        std::vector<int> ns;
        if (ext) {
            for (int n = 0; n < p.A + 1.0; ++n)
                if (n != p.m) ns.push_back(n);
        } else {
            for (int n = 0; n < (int)Es.size(); ++n) ns.push_back(n);
        }
        RMVariant v = ext ? RMVariant::ExtendedClosedForm : RMVariant::Conventional;
        for (size_t i = 0; i < Es.size(); ++i)
            out.push_back({ns[i], Es[i], rm_wavefunction(p, v, ns[i])});
    }
    return out;
}

int cmd_spectrum(const RunConfig& cfg) {
    PotentialSpec spec = resolve_model(cfg);
    auto V = [spec](double x) { return evaluate(spec, x); };
    const double res_tol = 1e-6;
    Grid grid{-15.0, 15.0, 1e-3};

    Table t;
    t.columns = {"n", "E", "residual", "shoot_E", "shoot_abs_dev"};
    bool all_ok = true;
    for (const Level& lv : levels_for(spec)) {
        double res = residual(V, lv.psi, lv.E, grid);
        if (!(res < res_tol)) all_ok = false;
        // shooting domain: wide enough to bury the tail, short enough that
        // the growing direction cannot swamp double precision
        double L = cfg.L;
        if (std::isnan(L)) L = !spec.is_rm() ? 16.0 : (lv.E > 0.5 ? 18.0 : 14.0);
        double lo = lv.E - 0.25, hi = lv.E + 0.25;
        if (!spec.is_rm()) hi = std::min(hi, -0.05);
        std::string shoot = "nan", dev = "nan";
        try {
            ShootResult sr = shoot_eigen(V, lo, hi, L, 1e-8);
            shoot = num(sr.energy);
            dev = num(std::abs(sr.energy - lv.E));
        } catch (const std::exception&) {
            // informational column; the pass decision is residual-based
        }
        t.rows.push_back({std::to_string(lv.n), num(lv.E), num(res), shoot, dev});
    }
    std::ostringstream extra;
    extra << "residual threshold " << num(res_tol)
          << "; deleted levels (n = m of the extended tower) are omitted: "
             "their closed-form eigenfunction vanishes identically and the "
             "shooting oracle finds no state there";
    int rc = emit(cfg, spec, extra.str(), t);
    if (rc) return rc;
    return all_ok ? 0 : 2;
}

// --------------------------------------------------------------- amplitudes

int cmd_amplitudes(const RunConfig& cfg) {
    PotentialSpec spec = resolve_model(cfg);
    Table t;
    std::vector<double> sweep;
    std::string extra;
    bool rm = spec.is_rm();
    if (rm) {
        t.columns = {"E", "re_k", "im_k", "re_k_prime", "im_k_prime"};
        sweep = linspace(cfg.Emin, cfg.Emax, cfg.nE);
        std::ostringstream os;
        os << "sweep: Emin=" << num(cfg.Emin) << " Emax=" << num(cfg.Emax) << " nE=" << cfg.nE;
        extra = os.str();
    } else {
        t.columns = {"k"};
        sweep = linspace(cfg.kmin, cfg.kmax, cfg.nk);
        std::ostringstream os;
        os << "sweep: kmin=" << num(cfg.kmin) << " kmax=" << num(cfg.kmax) << " nk=" << cfg.nk;
        extra = os.str();
    }
    for (const char* c : {"re_r_left", "im_r_left", "re_t_left", "im_t_left", "re_r_right",
                          "im_r_right", "re_t_right", "im_t_right", "R_left", "R_right", "T",
                          "status"})
        t.columns.push_back(c);

    auto make_row = [&](double v) -> std::vector<std::string> {
        std::vector<std::string> row;
        try {
            Amplitudes a;
            if (rm) {
                WaveNumbers w = rm_wavenumbers(v, cfg.B);
                a = rm_extended_amplitudes(w, spec.rm());
                row = {num(v), num(w.k.real()), num(w.k.imag()), num(w.k_prime.real()),
                       num(w.k_prime.imag())};
            } else {
                if (spec.model == Model::ScarfConventional || spec.model == Model::ScarfExtended)
                    a = scarf_extended_amplitudes(v, spec.scarf());
                else
                    a = scarf_psym_amplitudes(v, spec.scarf());
                row = {num(v)};
            }
            Reflectivity f = reflectivity_transmitivity(a);
            for (cplx z : {a.r_left, a.t_left, a.r_right, a.t_right}) {
                row.push_back(num(z.real()));
                row.push_back(num(z.imag()));
            }
            row.push_back(num(f.R_left));
            row.push_back(num(f.R_right));
            row.push_back(num(f.T));
            row.push_back("ok");
        } catch (const PoleError&) {
            row.assign(t.columns.size(), "");
            row.front() = num(v);
            row.back() = "pole";
        } catch (const OverflowError&) {
            row.assign(t.columns.size(), "");
            row.front() = num(v);
            row.back() = "overflow";
        }
        return row;
    };

    // rows are independent closed-form evaluations: compute them
    // concurrently, write them in sweep order
    std::vector<std::future<std::vector<std::string>>> futs;
    futs.reserve(sweep.size());
    for (double v : sweep)
        futs.push_back(std::async(std::launch::async | std::launch::deferred, make_row, v));
    for (auto& f : futs) t.rows.push_back(f.get());
    return emit(cfg, spec, extra, t);
}

// ------------------------------------------------------------------- verify

struct CheckEntry {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informational = false;
    std::string error;  // nonempty: exception text instead of a measurement
};

void append_oracle_checks(std::vector<CheckEntry>& checks, const PotentialSpec& spec,
                          double e_or_k, double L, double tol) {
    try {
        VerifyReport v = verify_amplitudes(spec, e_or_k, L, tol);
        bool rm = spec.is_rm();
        double rt = rm ? 1e-3 : 1e-4;
        checks.push_back({"closed_vs_oracle_T", v.rel_T, rt, v.rel_T <= rt, false, ""});
        // at reflectionless parameter points (e.g. integer A and B of the
        // vanishing-asymptote family) the closed-form r is exactly zero and
        // a relative comparison is meaningless; check the oracle's R against
        // an absolute noise floor instead
        bool zero_refl = std::norm(v.analytic.r_left) < 1e-14 &&
                         std::norm(v.analytic.r_right) < 1e-14;
        if (zero_refl) {
            double Rl = std::norm(v.left.r), Rr = std::norm(v.right.r);
            checks.push_back({"oracle_R_left_abs", Rl, 1e-8, Rl <= 1e-8, false, ""});
            checks.push_back({"oracle_R_right_abs", Rr, 1e-8, Rr <= 1e-8, false, ""});
        } else {
            checks.push_back(
                {"closed_vs_oracle_R_left", v.rel_R_left, rt, v.rel_R_left <= rt, false, ""});
            checks.push_back(
                {"closed_vs_oracle_R_right", v.rel_R_right, rt, v.rel_R_right <= rt, false, ""});
        }
        checks.push_back({"phase_t", std::abs(v.phase_t), rt, std::abs(v.phase_t) <= rt, false, ""});
        if (!zero_refl)
            checks.push_back({"phase_r_left", std::abs(v.phase_r_left), rt,
                              std::abs(v.phase_r_left) <= rt, false, ""});
        if (rm) {
            checks.push_back({"wavenumber_labeling_resolved",
                              v.artifact_labeling_matches ? 1.0 : 0.0, 1.0,
                              v.artifact_labeling_matches, false, ""});
            checks.push_back({"rm_reflection_factor_modulus", v.rm_reflection_factor_modulus, 0.0,
                              true, true, ""});
        }
    } catch (const std::exception& ex) {
        checks.push_back({"closed_vs_oracle", 0.0, 0.0, false, false, ex.what()});
    }
}

int cmd_verify(const RunConfig& cfg) {
    PotentialSpec spec = resolve_model(cfg);
    std::vector<CheckEntry> checks;

    // symmetry of the potential itself
    {
        std::mt19937 gen(88);
        std::uniform_real_distribution<double> ux(-6.0, 6.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            double x = ux(gen);
            cplx v = evaluate(spec, x);
            worst = std::max(worst,
                             std::abs(std::conj(evaluate(spec, -x)) - v) / (1.0 + std::abs(v)));
        }
        checks.push_back({"pt_symmetry", worst, 1e-12, worst <= 1e-12, false, ""});
    }

    // m = 0 reduction of the rational extension
    if (!spec.is_rm()) {
        std::mt19937 gen(17);
        std::uniform_real_distribution<double> uk(0.1, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double k = uk(gen);
            Amplitudes c = scarf_usual_amplitudes(k, cfg.A, cfg.B);
            Amplitudes e = scarf_extended_amplitudes(k, ScarfParams{cfg.A, cfg.B, 0});
            worst = std::max({worst, std::abs(e.t_left - c.t_left) / std::abs(c.t_left),
                              std::abs(e.r_left - c.r_left) / std::abs(c.r_left)});
        }
        checks.push_back({"m0_reduction_amplitudes", worst, 1e-12, worst <= 1e-12, false, ""});
        double worstF = 0.0;
        for (int i = 0; i < 100; ++i) {
            double k = 0.05 + i * 0.06;
            worstF = std::max(worstF,
                              std::abs(std::abs(scarf_fm_factor(cplx(k, 0.0), cfg.B,
                                                                std::max(cfg.m, 1))) -
                                       1.0));
        }
        checks.push_back({"unimodular_dressing", worstF, 1e-13, worstF <= 1e-13, false, ""});
        Reflectivity f = reflectivity_transmitivity(
            scarf_extended_amplitudes(1.0, ScarfParams{cfg.A, cfg.B, cfg.m}));
        double gu = std::abs(std::abs(1.0 - f.T) - std::sqrt(f.R_left * f.R_right));
        checks.push_back({"generalized_unitarity", gu, 1e-10, gu <= 1e-10, false, ""});
    } else {
        double worst = 0.0;
        for (double x = -8.0; x <= 8.0; x += 0.37) {
            cplx c = rm_conventional(x, RMParams{cfg.A, cfg.B, 0});
            cplx e = rm_extended(x, RMParams{cfg.A, cfg.B, 0});
            worst = std::max(worst, std::abs(e - c) / (1.0 + std::abs(c)));
        }
        checks.push_back({"m0_reduction_potential", worst, 1e-13, worst <= 1e-13, false, ""});
        WaveNumbers w = rm_wavenumbers(3.0, cfg.B);
        Amplitudes u = rm_usual_amplitudes(w, cfg.A);
        Amplitudes e = rm_extended_amplitudes(w, spec.rm());
        double dev = std::abs(std::abs(e.t_left) - std::abs(u.t_left)) / std::abs(u.t_left);
        checks.push_back({"unimodular_t_dressing", dev, 1e-12, dev <= 1e-12, false, ""});
    }

    double probe = spec.is_rm() ? 3.0 : 1.0;  // E for RM, k for the others
    double L = cfg.L;
    if (std::isnan(L)) L = spec.is_rm() ? 10.0 : 12.0;
    append_oracle_checks(checks, spec, probe, L, cfg.tol);

    bool all_pass = true;
    for (const auto& c : checks)
        if (!c.informational && !c.pass) all_pass = false;

    std::ostringstream body;
    body << "{\n  \"artifact\": \"" << kArtifact << "\",\n";
    body << "  \"convention\": \"" << kConvention << "\",\n";
    body << "  \"config\": {\"model\": \"" << model_name(spec.model) << "\", \"A\": "
         << num(cfg.A) << ", \"B\": " << num(cfg.B) << ", \"m\": " << cfg.m
         << ", \"probe\": " << num(probe) << ", \"L\": " << num(L) << ", \"tol\": "
         << num(cfg.tol) << "},\n";
    body << "  \"checks\": [\n";
    for (size_t i = 0; i < checks.size(); ++i) {
        const CheckEntry& c = checks[i];
        body << "    {\"name\": \"" << c.name << "\", ";
        if (c.error.empty()) {
            body << "\"measured\": " << num(c.measured) << ", \"tolerance\": "
                 << (c.informational ? "null" : num(c.tolerance)) << ", ";
        } else {
            body << "\"error\": \"" << c.error << "\", ";
        }
        body << "\"pass\": " << (c.pass ? "true" : "false") << ", \"informational\": "
             << (c.informational ? "true" : "false") << "}" << (i + 1 < checks.size() ? "," : "")
             << "\n";
    }
    body << "  ],\n  \"all_pass\": " << (all_pass ? "true" : "false") << "\n}\n";

    if (cfg.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw InvalidParamError("cannot open output file '" + cfg.out + "'");
        f << body.str();
    }
    return all_pass ? 0 : 2;
}

// -------------------------------------------------------------------- check

int cmd_check() {
    struct Line {
        std::string name;
        double measured, tol;
        bool pass;
    };
    std::vector<Line> lines;
    auto add = [&](const std::string& name, double measured, double tol) {
        lines.push_back({name, measured, tol, measured <= tol});
    };

    {  // PT symmetry of all six potentials
        const PotentialSpec specs[] = {
            {Model::ScarfConventional, 2.5, 1.3, 0}, {Model::ScarfExtended, 2.5, 1.3, 1},
            {Model::ScarfPsymConventional, 2.5, 1.3, 0}, {Model::ScarfExtendedPartner, 2.5, 1.3, 1},
            {Model::RMConventional, 2.0, 1.0, 0}, {Model::RMExtended, 2.0, 1.0, 1}};
        std::mt19937 gen(88);
        std::uniform_real_distribution<double> ux(-6.0, 6.0);
        double worst = 0.0;
        for (const auto& s : specs)
            for (int i = 0; i < 200; ++i) {
                double x = ux(gen);
                cplx v = evaluate(s, x);
                worst = std::max(worst, std::abs(std::conj(evaluate(s, -x)) - v) /
                                            (1.0 + std::abs(v)));
            }
        add("pt_symmetry", worst, 1e-12);
    }
    {  // m = 0 amplitude reduction
        std::mt19937 gen(17);
        std::uniform_real_distribution<double> uk(0.1, 5.0), uA(0.6, 3.5), uB(0.6, 3.5);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double k = uk(gen), A = uA(gen), B = uB(gen);
            Amplitudes c = scarf_usual_amplitudes(k, A, B);
            Amplitudes e = scarf_extended_amplitudes(k, ScarfParams{A, B, 0});
            worst = std::max(worst, std::abs(e.t_left - c.t_left) / std::abs(c.t_left));
        }
        add("m0_reduction", worst, 1e-12);
    }
    {  // reflectionless sweep: integer parameters
        double worst = 0.0;
        for (double k : linspace(0.3, 3.0, 20))
            worst = std::max(worst, std::abs(scarf_usual_amplitudes(k, 1.0, 0.0).r_left));
        add("reflectionless_integer_params", worst, 1e-12);
    }
    {  // transmitivity is m-independent across the sweep
        double worst = 0.0;
        for (double k : linspace(0.3, 3.0, 20)) {
            Reflectivity f0 = reflectivity_transmitivity(
                scarf_extended_amplitudes(k, ScarfParams{2.5, 1.3, 0}));
            Reflectivity f2 = reflectivity_transmitivity(
                scarf_extended_amplitudes(k, ScarfParams{2.5, 1.3, 2}));
            worst = std::max(worst, std::abs(f2.T - f0.T) / f0.T);
        }
        add("transmitivity_m_independent", worst, 1e-12);
    }
    {  // generalized unitarity |1 - T| = sqrt(R_l R_r)
        double worst = 0.0;
        for (double k : {0.5, 1.0, 2.0}) {
            Reflectivity f = reflectivity_transmitivity(
                scarf_extended_amplitudes(k, ScarfParams{2.3, 1.1, 1}));
            worst = std::max(worst, std::abs(std::abs(1.0 - f.T) - std::sqrt(f.R_left * f.R_right)));
        }
        add("generalized_unitarity", worst, 1e-10);
    }
    {  // B = 0: the two families collapse onto the same real well
        WaveNumbers w = rm_wavenumbers(1.0, 0.0);
        Amplitudes a = rm_extended_amplitudes(w, RMParams{1.5, 0.0, 0});
        Amplitudes s = scarf_usual_amplitudes(1.0, 1.5, 0.0);
        double worst = std::max(std::abs(a.t_left - s.t_left) / std::abs(s.t_left),
                                std::abs(a.r_left - s.r_left) / std::abs(s.r_left));
        add("b0_cross_family", worst, 1e-10);
    }
    {  // bound-state poles on the imaginary axis
        auto poles = pole_scan(PotentialSpec{Model::ScarfConventional, 2.0, 1.0, 0}, 0.05, 3.2, 400);
        double worst = 1e300;
        const double want[] = {0.5, 1.0, 2.0};
        if (poles.size() == 3) {
            worst = 0.0;
            for (int i = 0; i < 3; ++i)
                worst = std::max(worst, std::abs(poles[i] - cplx(0.0, want[i])));
        }
        add("pole_towers", worst, 1e-8);
    }
    {  // extended shape invariance after one constant
        SIReport r = rm_si_check(RMParams{2.0, 1.0, 1}, Grid{-12.0, 12.0, 1e-2});
        add("extended_shape_invariance", r.max_dev, 1e-8);
    }
    {  // dual-path eigenfunctions proportional; deleted level doubly zero
        RMParams p{2.0, 1.0, 1};
        BoundState c0 = rm_wavefunction(p, RMVariant::ExtendedClosedForm, 0);
        BoundState o0 = rm_wavefunction(p, RMVariant::ExtendedOperator, 0);
        cplx ratio0 = c0.eval(0.0) / o0.eval(0.0);
        double worst = 0.0;
        for (double x = -2.5; x <= 2.5; x += 0.25) {
            cplx den = o0.eval(x);
            if (std::abs(den) < 1e-12) continue;
            worst = std::max(worst, std::abs(c0.eval(x) / den - ratio0) / std::abs(ratio0));
        }
        add("dual_path_proportionality", worst, 1e-9);
        BoundState c1 = rm_wavefunction(p, RMVariant::ExtendedClosedForm, 1);
        BoundState o1 = rm_wavefunction(p, RMVariant::ExtendedOperator, 1);
        double zmax = 0.0;
        for (double x = -3.0; x <= 3.0; x += 0.25)
            zmax = std::max({zmax, std::abs(c1.eval(x)), std::abs(o1.eval(x))});
        add("deleted_level_zero", zmax, 1e-12);
    }

    bool all = true;
    for (const Line& l : lines) {
        std::printf("CHECK %-32s %s (measured %.3e, tol %.0e)\n", l.name.c_str(),
                    l.pass ? "PASS" : "FAIL", l.measured, l.tol);
        if (!l.pass) all = false;
    }
    std::printf("%s\n", all ? "all checks pass" : "CHECK FAILURES PRESENT");
    return all ? 0 : 2;
}

// --------------------------------------------------------------------- main

// first pass: load --config JSON (if present) as defaults; flags override
void load_config_file(int argc, char** argv, RunConfig& cfg) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw InvalidParamError("cannot read config file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(f);
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("model", cfg.model);
    get("A", cfg.A);
    get("B", cfg.B);
    get("m", cfg.m);
    get("xmin", cfg.xmin);
    get("xmax", cfg.xmax);
    get("nx", cfg.nx);
    get("kmin", cfg.kmin);
    get("kmax", cfg.kmax);
    get("nk", cfg.nk);
    get("Emin", cfg.Emin);
    get("Emax", cfg.Emax);
    get("nE", cfg.nE);
    get("L", cfg.L);
    get("tol", cfg.tol);
    get("out", cfg.out);
    get("format", cfg.format);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        load_config_file(argc, argv, cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    CLI::App app{"closed-form and oracle-verified scattering/spectra for two "
                 "families of complex PT-symmetric potentials"};
    app.require_subcommand(1);
    std::string config_path;  // consumed in the prepass; declared for --help
    app.add_option("--config", config_path, "JSON config file; explicit flags override it");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model,
                        "scarf | scarf-ext | scarf-psym | scarf-psym-ext | rm | rm-ext "
                        "(-ext aliases with m=0 normalize to the conventional model)");
        sub->add_option("--A", cfg.A, "depth-like parameter A");
        sub->add_option("--B", cfg.B, "imaginary-strength parameter B");
        sub->add_option("--m", cfg.m, "rational extension order (0 = conventional)");
        sub->add_option("--L", cfg.L,
                        "oracle domain half-width (default: per-task choice)");
        sub->add_option("--tol", cfg.tol, "oracle step-control tolerance");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv | json");
        sub->add_option("--config", config_path, "JSON config file (prepass)");
    };

    CLI::App* pot = app.add_subcommand("potential", "evaluate V on an x grid");
    add_common(pot);
    pot->add_option("--xmin", cfg.xmin, "grid start");
    pot->add_option("--xmax", cfg.xmax, "grid end");
    pot->add_option("--nx", cfg.nx, "grid points");

    CLI::App* spec_cmd = app.add_subcommand(
        "spectrum", "closed-form energies with residuals and shooting cross-check");
    add_common(spec_cmd);

    CLI::App* amp = app.add_subcommand(
        "amplitudes", "closed-form amplitude sweep (k for scarf models, E for rm)");
    add_common(amp);
    amp->add_option("--kmin", cfg.kmin, "k sweep start (scarf models)");
    amp->add_option("--kmax", cfg.kmax, "k sweep end");
    amp->add_option("--nk", cfg.nk, "k sweep points");
    amp->add_option("--Emin", cfg.Emin, "E sweep start (rm models)");
    amp->add_option("--Emax", cfg.Emax, "E sweep end");
    amp->add_option("--nE", cfg.nE, "E sweep points");

    CLI::App* ver = app.add_subcommand(
        "verify", "JSON verification report: invariants plus closed-vs-oracle comparison");
    add_common(ver);

    app.add_subcommand("check", "run the built-in numeric self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cfg.format != "csv" && cfg.format != "json") {
        std::cerr << "error: unknown format '" << cfg.format << "'\n";
        return 1;
    }

    try {
        if (pot->parsed()) return cmd_potential(cfg);
        if (spec_cmd->parsed()) return cmd_spectrum(cfg);
        if (amp->parsed()) return cmd_amplitudes(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        return cmd_check();
    } catch (const NearNodeError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const DegenerateParamError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const InvalidParamError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
