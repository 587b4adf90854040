#include "lagsphere/report.hpp"

#include <cmath>

#include "lagsphere/identities.hpp"
#include "lagsphere/immersions.hpp"
#include "lagsphere/integrals.hpp"

namespace lagsphere {

void RunConfig::validate() const {
    if (!(c1 > c2 && c2 > 0.0) || !std::isfinite(c1) || !std::isfinite(c2))
        throw std::invalid_argument("config: require c1 > c2 > 0");
    if (!std::isfinite(t)) throw std::invalid_argument("config: t must be finite");
    if (grid_nx < 16 || grid_ntheta < 16) throw std::invalid_argument("config: grid must be >= 16x16");
    if (!(fd_step > 0.0 && fd_step <= 1e-2))
        throw std::invalid_argument("config: fd-step must be in (0, 1e-2]");
    if (samples < 1) throw std::invalid_argument("config: samples >= 1");
    if (!(pole_band > 0.0 && pole_band < 1.0))
        throw std::invalid_argument("config: pole-band must be in (0,1)");
    if (tol_profile != "default" && tol_profile != "strict")
        throw std::invalid_argument("config: tol-profile must be 'default' or 'strict'");
}

namespace {

using json = nlohmann::ordered_json;

json meta_block(const RunConfig& cfg) {
    json m;
    m["c1"] = cfg.c1;
    m["c2"] = cfg.c2;
    m["t"] = cfg.t;
    m["grid"] = {cfg.grid_nx, cfg.grid_ntheta};
    m["fd_step"] = cfg.fd_step;
    m["samples"] = cfg.samples;
    m["pole_band"] = cfg.pole_band;
    m["tol_profile"] = cfg.tol_profile;
    m["seed"] = cfg.seed;
    m["parallel"] = cfg.parallel;
    m["sign_calibration"] = {
        {"J", "J u = sqrt(c) (u x p) on each factor (inward-normal cross product)"},
        {"omega", "omega(u,v) = <Ju, v>"},
        {"chart_orientation", "(s1,s2) and (theta,x) positive; w = s1 + i s2"},
        {"note", "frozen so that the d-Maslov, div JH and variation-field identities hold "
                 "with C = Jac(phi)"}};
    m["inversion_scale_note"] =
        "the inverted minimal immersions carry the corrective 1/4 scale on (F_t, G_t); "
        "the unscaled form fails the reconstruction by a dilation";
    return m;
}

json identity_row(const SuiteSummary& s, double tol_scale, const char* kind, bool* overall,
                  const char* note = nullptr) {
    const double tol = s.tol * tol_scale;
    const bool pass = !s.gated || s.max_residual <= tol;
    if (s.gated && overall) *overall = *overall && pass;
    json row;
    row["id"] = s.id;
    row["kind"] = kind;
    row["ref"] = s.ref;
    row["max_residual"] = s.max_residual;
    row["tol"] = tol;
    row["samples"] = s.samples;
    if (s.order != 0.0) row["richardson_order"] = s.order;
    row["gated"] = s.gated;
    row["pass"] = pass;
    if (note) row["note"] = note;
    return row;
}

json global_row(const GlobalCheck& c, double tol_scale, bool* overall) {
    const double tol = c.tol * tol_scale;
    const double err = c.rel_gate ? c.rel_err : c.abs_err;
    const bool pass = !c.gated || err <= tol;
    if (c.gated && overall) *overall = *overall && pass;
    json row;
    row["id"] = c.id;
    row["kind"] = "global";
    row["ref"] = c.ref;
    row["value"] = c.value;
    row["expected"] = c.expected;
    row["abs_err"] = c.abs_err;
    row["rel_err"] = c.rel_err;
    row["tol"] = tol;
    row["tol_on"] = c.rel_gate ? "rel_err" : "abs_err";
    row["grid_refine_delta"] = c.refine_delta;
    if (c.id == "bochner" || c.id == "bochner_band99") {
        row["band_excluded_area"] = c.band_excluded_area;
        row["note"] = "report-only: the closed-form displays feeding this integral are "
                      "mutually inconsistent; see perp_h_closed/poly_abc";
    }
    row["gated"] = c.gated;
    row["pass"] = pass;
    return row;
}

json scalar_row(const char* id, const char* ref, double value, double tol, bool gated,
                const char* relation, bool* overall, const char* note = nullptr) {
    const bool pass = !gated || (std::string_view(relation) == ">=" ? value >= tol : value <= tol);
    if (gated && overall) *overall = *overall && pass;
    json row;
    row["id"] = id;
    row["kind"] = "scalar";
    row["ref"] = ref;
    row["value"] = value;
    row["tol"] = tol;
    row["relation"] = relation;
    row["gated"] = gated;
    row["pass"] = pass;
    if (note) row["note"] = note;
    return row;
}

}  // namespace

VerificationReport run_verify(const RunConfig& cfg) {
    cfg.validate();
    const Params prm(cfg.c1, cfg.c2);
    const double ts = cfg.tol_scale();
    const Exec mode = cfg.mode();

    bool overall = true;
    json checks = json::array();

    // Pointwise suites (cylinder chart).
    const SamplePlan unrestricted{cfg.samples, cfg.seed, 0.0};
    const SamplePlan banded{cfg.samples, cfg.seed, cfg.pole_band};

    for (const auto& s : run_exact_suite(prm, cfg.t, unrestricted, cfg.fd_step, mode))
        checks.push_back(identity_row(s, ts, "identity", &overall));

    for (const auto& s : run_derivative_suite(prm, cfg.t, banded, cfg.fd_step, mode)) {
        const char* note = nullptr;
        if (s.id == "ham_stat" && cfg.t != 0.0)
            note = "failing-as-expected: stationarity holds only at t = 0, so this defect is "
                   "nonzero by design and not gated here";
        if (s.id == "perp_h_closed" || s.id == "poly_abc")
            note = "report-only: this closed-form display is inconsistent with the gated "
                   "curvature polynomial (the measured |nabla-perp H|^2 is nonnegative while "
                   "the display can go negative); the residual is reported as found";
        checks.push_back(identity_row(s, ts, "identity", &overall, note));
    }

    // Stationarity discrimination.
    {
        const double sup = stationarity_sup_divjh(prm, cfg.t, banded, cfg.fd_step, mode);
        if (cfg.t == 0.0) {
            checks.push_back(scalar_row(
                "stationarity_sup_divjh", "sup |div JH| vanishes exactly at t = 0",
                sup, 5e-6 * prm.D * ts, true, "<=", &overall));
        } else {
            const double floor = 0.1 * prm.D * std::sinh(std::abs(2.0 * cfg.t)) / 4.0;
            checks.push_back(scalar_row(
                "stationarity_discrimination",
                "sup |div JH| stays bounded away from zero off t = 0", sup, floor, true, ">=",
                &overall));
        }
    }

    // Variation field (only meaningful at t = 0).
    if (cfg.t == 0.0) {
        const auto v = run_variation_suite(prm, banded, 1e-4, mode);
        json row = scalar_row("variation_field",
                              "normal part of dPhi_t/dt at t=0 equals J grad f",
                              v.max_residual, 1e-5 * ts, true, "<=", &overall);
        row["richardson_order"] = v.order;
        row["samples"] = v.samples;
        checks.push_back(row);
    }

    // Inversion construction.
    {
        const auto ic = inversion_consistency(prm, cfg.t);
        checks.push_back(scalar_row("inversion_consistency",
                                    "inverting the scaled minimal immersion reproduces Phi_t",
                                    ic.sup_deviation, 1e-10, true, "<=", &overall));
        checks.push_back(scalar_row("lawlor_membership",
                                    "|F|^2-|G|^2 = -(c1-c2) and Re(FG) = (c1-c2) sinh t cosh t",
                                    ic.lawlor_membership, 1e-10, true, "<=", &overall));
        checks.push_back(scalar_row("hat_conformality",
                                    "induced metric of the minimal immersion is conformal with "
                                    "factor (c1-c2) cosh 2t cosh 2s1 / 16",
                                    ic.hat_conformality, 1e-10, true, "<=", &overall));
        checks.push_back(scalar_row("hat_affine_subspace",
                                    "<hatPhi, a> = -1/2 and <hatPhi, a^> = 0",
                                    ic.affine_residual, 1e-12, true, "<=", &overall));
    }

    // Global integrals.
    {
        GlobalCheckOptions opt;
        opt.fd_h = cfg.fd_step;
        opt.pole_band = cfg.pole_band;
        opt.mode = mode;
        const auto grid = QuadratureGrid::make(cfg.grid_nx, cfg.grid_ntheta);
        for (const auto& c : global_checks(prm, cfg.t, grid, opt))
            checks.push_back(global_row(c, ts, &overall));
    }

    // Zeros of H (report-only exploration).
    if (cfg.t == 0.0) {
        const auto [cabs, h2] = h_zero_probe(prm);
        json row;
        row["id"] = "h_zeros_at_poles";
        row["kind"] = "scalar";
        row["ref"] = "zeros of H sit where C = +-1/2; probed at |x| = 0.9999";
        row["value"] = json::array({cabs, h2});
        row["gated"] = false;
        row["pass"] = true;
        row["note"] = "report-only: |C| at the probe should approach 1/2 and |H|^2 should approach 0";
        checks.push_back(row);
    }

    VerificationReport rep;
    rep.doc["meta"] = meta_block(cfg);
    rep.doc["checks"] = checks;
    rep.doc["overall"] = overall;
    rep.overall = overall;
    return rep;
}

}  // namespace lagsphere
