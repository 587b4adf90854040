// Command-line harness: runs the verification suites, emits JSON reports, CSV
// field dumps, and the area-scan CSV/SVG. The exit status encodes gated
// pass/fail:
//   0  all gated checks pass
//   1  a gated check failed
//   2  configuration error
//   3  numeric breakdown (NaN, degenerate metric, domain violation)
//   4  I/O failure

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lagsphere/identities.hpp"
#include "lagsphere/immersions.hpp"
#include "lagsphere/integrals.hpp"
#include "lagsphere/local_geometry.hpp"
#include "lagsphere/operators.hpp"
#include "lagsphere/report.hpp"

namespace {

using lagsphere::ChartPoint;
using lagsphere::LocalGeometry;
using lagsphere::Params;
using lagsphere::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitGatedFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open " + path);
    os << text;
    if (!os) throw std::ios_base::failure("write failed for " + path);
}

bool parse_grid(const std::string& s, int& nx, int& nth) {
    const auto pos = s.find_first_of("xX");
    if (pos == std::string::npos) return false;
    try {
        nx = std::stoi(s.substr(0, pos));
        nth = std::stoi(s.substr(pos + 1));
    } catch (...) {
        return false;
    }
    return nx > 0 && nth > 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& grid_str) {
    cmd->add_option("--c1", cfg.c1, "Gauss curvature of the first factor");
    cmd->add_option("--c2", cfg.c2, "Gauss curvature of the second factor");
    cmd->add_option("--grid", grid_str, "quadrature grid as NxM (x-nodes x theta-nodes)");
    cmd->add_option("--fd-step", cfg.fd_step, "finite-difference step");
    cmd->add_option("--samples", cfg.samples, "random sample count for pointwise suites");
    cmd->add_option("--seed", cfg.seed, "sampling seed (determinism)");
    cmd->add_option("--pole-band", cfg.pole_band, "|x| bound for finite-difference checks");
    cmd->add_option("--tol-profile", cfg.tol_profile, "'default' or 'strict'");
    cmd->add_flag("--serial", [&cfg](int64_t) { cfg.parallel = false; },
                  "run node/sample kernels on the serial reference path");
}

void apply_grid(const std::string& grid_str, RunConfig& cfg) {
    if (grid_str.empty()) return;
    if (!parse_grid(grid_str, cfg.grid_nx, cfg.grid_ntheta))
        throw std::invalid_argument("bad --grid, expected NxM");
}

std::string area_scan_csv(const std::vector<lagsphere::AreaScanRow>& rows) {
    std::string csv = "t,A_closed,A_quad,rel_err\n";
    for (const auto& r : rows) {
        csv += format_double(r.t) + "," + format_double(r.area_closed);
        csv += ",";
        if (r.area_quad) csv += format_double(*r.area_quad);
        csv += ",";
        if (r.rel_err) csv += format_double(*r.rel_err);
        csv += "\n";
    }
    return csv;
}

std::string area_scan_svg(const std::vector<lagsphere::AreaScanRow>& rows) {
    const int W = 640, Hh = 440, ml = 60, mr = 20, mt = 20, mb = 50;
    double tmin = rows.front().t, tmax = rows.back().t, amax = 0.0;
    for (const auto& r : rows) amax = std::max(amax, r.area_closed);
    auto X = [&](double t) { return ml + (t - tmin) / (tmax - tmin) * (W - ml - mr); };
    auto Y = [&](double a) { return Hh - mb - a / amax * (Hh - mt - mb); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(W) + "\" height=\"" + std::to_string(Hh) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(Hh - mb) + "\" x2=\"" +
           format_double(W - mr) + "\" y2=\"" + format_double(Hh - mb) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(mt) + "\" x2=\"" +
           format_double(ml) + "\" y2=\"" + format_double(Hh - mb) + "\" stroke=\"black\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : rows)
        svg += format_double(X(r.t)) + "," + format_double(Y(r.area_closed)) + " ";
    svg += "\"/>\n";
    svg += "<text x=\"" + format_double((W - ml - mr) / 2.0 + ml) + "\" y=\"" +
           format_double(Hh - 12) + "\" text-anchor=\"middle\" font-size=\"14\">t</text>\n";
    svg += "<text x=\"18\" y=\"" + format_double((Hh - mt - mb) / 2.0 + mt) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 " +
           format_double((Hh - mt - mb) / 2.0 + mt) + ")\">A(t)</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double tv = tmin + (tmax - tmin) * k / 4.0;
        svg += "<text x=\"" + format_double(X(tv)) + "\" y=\"" + format_double(Hh - mb + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" + format_double(tv) + "</text>\n";
        const double av = amax * k / 4.0;
        svg += "<text x=\"" + format_double(ml - 6) + "\" y=\"" + format_double(Y(av) + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + format_double(av) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
    const auto rep = lagsphere::run_verify(cfg);
    write_text(out_path, rep.dump());
    if (!out_path.empty()) {
        std::cout << (rep.overall ? "PASS" : "FAIL") << " (report: " << out_path << ")\n";
    }
    return rep.overall ? kExitOk : kExitGatedFail;
}

int cmd_scan_area(const RunConfig& cfg, double t_min, double t_max, int steps,
                  const std::string& csv_path, const std::string& svg_path, bool with_quad) {
    if (!(t_min < t_max) || steps < 3)
        throw std::invalid_argument("scan-area: need t-min < t-max and steps >= 3");
    const Params prm(cfg.c1, cfg.c2);
    std::optional<lagsphere::QuadratureGrid> grid;
    if (with_quad) grid = lagsphere::QuadratureGrid::make(cfg.grid_nx, cfg.grid_ntheta);
    const auto rows =
        lagsphere::area_scan(prm, t_min, t_max, steps, grid ? &*grid : nullptr, cfg.mode());
    write_text(csv_path, area_scan_csv(rows));
    if (!svg_path.empty()) write_text(svg_path, area_scan_svg(rows));
    return kExitOk;
}

int cmd_field(const RunConfig& cfg, const std::string& quantity, const std::string& out_path) {
    static const std::array<std::string, 8> known = {"C",     "H2", "K",      "divJH",
                                                     "theta", "xi", "sigma2", "conf"};
    bool ok = false;
    for (const auto& k : known) ok = ok || k == quantity;
    if (!ok) throw std::invalid_argument("unknown --quantity " + quantity);

    const Params prm(cfg.c1, cfg.c2);
    const lagsphere::PhiFamilyMap cmap(prm, cfg.t, lagsphere::Chart::Cylinder);
    const auto grid = lagsphere::QuadratureGrid::make(cfg.grid_nx, cfg.grid_ntheta);
    const double eps = lagsphere::h_zero_eps(prm);

    std::string csv = "s1,s2,x,theta_coord,value\n";
    for (int ix = 0; ix < grid.n_x; ++ix) {
        const double x = grid.x[ix];
        const bool in_band = std::abs(x) <= cfg.pole_band;
        for (int it = 0; it < grid.n_theta; ++it) {
            const double theta = grid.theta(it);
            const ChartPoint cp{std::atanh(x), theta};
            double value;
            const LocalGeometry lg = lagsphere::local_geometry(prm, cmap, cp);
            if (quantity == "C") {
                value = lg.C;
            } else if (quantity == "H2") {
                value = lg.H2;
            } else if (quantity == "sigma2") {
                value = lg.sigma2;
            } else if (quantity == "conf") {
                value = std::max(std::abs(lg.E - lg.G), std::abs(lg.F)) / lg.E;
            } else if (quantity == "K") {
                value = lagsphere::gauss_curvature(prm, cmap, cp, cfg.fd_step);
            } else if (quantity == "divJH") {
                if (!in_band) continue;  // validity band
                auto jh = [&](const ChartPoint& q) {
                    return lagsphere::local_geometry(prm, cmap, q).JH;
                };
                value = lagsphere::divergence(prm, cmap, jh, cp, cfg.fd_step);
            } else if (quantity == "theta") {
                value = std::abs(lg.gs - (8.0 / prm.D) * lg.hs * lg.hs) / lg.e2u;
            } else {  // xi
                if (std::sqrt(lg.H2) <= eps) continue;  // validity band
                value = std::abs(lagsphere::dot(lg.dd, lg.Jdelta) / lg.hs + (prm.S / prm.D) * lg.gs) / lg.e2u;
            }
            csv += format_double(cp.u1) + "," + format_double(cp.u2) + "," + format_double(x) +
                   "," + format_double(theta) + "," + format_double(value) + "\n";
        }
    }
    write_text(out_path, csv);
    return kExitOk;
}

int cmd_point(const RunConfig& cfg, double s1, double s2, const std::string& out_path) {
    if (!std::isfinite(s1) || !std::isfinite(s2))
        throw std::invalid_argument("point: s1, s2 must be finite");
    const Params prm(cfg.c1, cfg.c2);
    const lagsphere::PhiFamilyMap cmap(prm, cfg.t, lagsphere::Chart::Cylinder);
    const ChartPoint cp{s1, s2};
    const LocalGeometry lg = lagsphere::local_geometry(prm, cmap, cp);

    json j;
    j["config"] = {{"c1", cfg.c1}, {"c2", cfg.c2}, {"t", cfg.t}, {"s1", s1}, {"s2", s2}};
    j["point"] = lg.point.p;
    j["metric"] = {{"E", lg.E}, {"F", lg.F}, {"G", lg.G}, {"detg", lg.detg},
                   {"conformal", lg.conformal}, {"e2u", lg.e2u}};
    j["H"] = lg.H;
    j["JH"] = lg.JH;
    j["H2"] = lg.H2;
    j["C"] = lg.C;
    j["sigma2"] = lg.sigma2;
    j["K_fd"] = lagsphere::gauss_curvature(prm, cmap, cp, cfg.fd_step);
    j["K_gauss_eq"] = lg.gauss_from_equation(prm);

    json res = json::array();
    for (const auto& r : lagsphere::exact_suite(prm, cfg.t, cp, cfg.fd_step))
        res.push_back({{"id", r.id}, {"residual", r.residual}, {"gated", r.gated}, {"tol", r.tol}});
    if (lagsphere::pole_coordinate(lagsphere::Chart::Cylinder, cp) <= cfg.pole_band) {
        for (const auto& r : lagsphere::derivative_suite(prm, cfg.t, cp, cfg.fd_step))
            res.push_back(
                {{"id", r.id}, {"residual", r.residual}, {"gated", r.gated}, {"tol", r.tol}});
    }
    j["residuals"] = res;
    write_text(out_path, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification engine for Lagrangian spheres in S2xS2"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string grid_str;

    auto* verify = app.add_subcommand("verify", "run all suites and emit the JSON report");
    std::string out_path;
    verify->add_option("--t", cfg.t, "deformation parameter");
    verify->add_option("--out", out_path, "report path (default: stdout)");
    add_common(verify, cfg, grid_str);

    auto* scan = app.add_subcommand("scan-area", "tabulate A(t) and optionally plot it");
    double t_min = -3.0, t_max = 3.0;
    int steps = 121;
    std::string csv_path, svg_path;
    bool no_quad = false;
    scan->add_option("--t-min", t_min, "scan start");
    scan->add_option("--t-max", t_max, "scan end");
    scan->add_option("--steps", steps, "sample count");
    scan->add_option("--csv", csv_path, "CSV path (default: stdout)");
    scan->add_option("--svg", svg_path, "SVG path (optional)");
    scan->add_flag("--no-quad", no_quad, "skip the quadrature cross-check column");
    add_common(scan, cfg, grid_str);

    auto* field = app.add_subcommand("field", "dump a pointwise field over the grid as CSV");
    std::string quantity;
    std::string field_out;
    field->add_option("--quantity", quantity, "C|H2|K|divJH|theta|xi|sigma2|conf")->required();
    field->add_option("--t", cfg.t, "deformation parameter");
    field->add_option("--out", field_out, "CSV path (default: stdout)");
    add_common(field, cfg, grid_str);

    auto* point = app.add_subcommand("point", "full local geometry and residuals at one point");
    double s1 = 0.0, s2 = 0.0;
    std::string point_out;
    point->add_option("--t", cfg.t, "deformation parameter");
    point->add_option("--s1", s1, "cylinder chart coordinate")->required();
    point->add_option("--s2", s2, "cylinder chart coordinate");
    point->add_option("--out", point_out, "JSON path (default: stdout)");
    add_common(point, cfg, grid_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        apply_grid(grid_str, cfg);
        cfg.validate();
        if (verify->parsed()) return cmd_verify(cfg, out_path);
        if (scan->parsed()) return cmd_scan_area(cfg, t_min, t_max, steps, csv_path, svg_path, !no_quad);
        if (field->parsed()) return cmd_field(cfg, quantity, field_out);
        if (point->parsed()) return cmd_point(cfg, s1, s2, point_out);
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
