// Integration tests that drive the installed CLI binary end to end.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef LAGSPHERE_CLI_PATH
#error "LAGSPHERE_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = std::string(LAGSPHERE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

const std::string kSmall = "--grid 64x64 --samples 100";

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("verify: c1 <= c2 is a config error") {
    CHECK(run("verify --c1 1 --c2 4 --t 0").exit_code == 2);
    CHECK(run("verify --c1 4 --c2 1 --grid 8x8").exit_code == 2);
    CHECK(run("verify --c1 4 --c2 1 --tol-profile bogus").exit_code == 2);
}

TEST_CASE("exit codes: gated failure, numeric breakdown, io failure") {
    // the coarsest legal FD step inflates the O(h^2) residuals past their gates
    CHECK(run("verify --t 0 " + kSmall + " --fd-step 0.01 --out cli_fail.json").exit_code == 1);
    std::remove("cli_fail.json");
    // cosh overflow far outside the chart turns the metric non-finite
    CHECK(run("point --t 0 --s1 400 --s2 0").exit_code == 3);
    // unwritable output path
    CHECK(run("scan-area --t-min 0 --t-max 1 --steps 3 --no-quad --csv /nonexistent-dir/x.csv")
              .exit_code == 4);
}

TEST_CASE("verify at t=0 passes and writes a well-formed report") {
    const auto r = run("verify --c1 4 --c2 1 --t 0 " + kSmall + " --out cli_report.json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_report.json"));
    CHECK(doc.at("overall") == true);
    bool saw_theta = false, saw_eight = false;
    for (const auto& c : doc.at("checks")) {
        if (c.at("id") == "theta") saw_theta = c.at("pass") == true;
        if (c.at("id") == "eight_pi") saw_eight = c.at("pass") == true;
    }
    CHECK(saw_theta);
    CHECK(saw_eight);
    std::remove("cli_report.json");
}

TEST_CASE("verify at t=0.3 passes; stationarity defect reported, not gated") {
    const auto r = run("verify --c1 4 --c2 1 --t 0.3 " + kSmall + " --out cli_report2.json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_report2.json"));
    for (const auto& c : doc.at("checks"))
        if (c.at("id") == "ham_stat") {
            CHECK(c.at("gated") == false);
            CHECK(c.contains("note"));
        }
    std::remove("cli_report2.json");
}

TEST_CASE("verify output is byte-identical for identical config and seed") {
    CHECK(run("verify --t 0 " + kSmall + " --seed 42 --out cli_a.json").exit_code == 0);
    CHECK(run("verify --t 0 " + kSmall + " --seed 42 --out cli_b.json").exit_code == 0);
    CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
    // and the serial reference path produces the same numbers
    CHECK(run("verify --t 0 " + kSmall + " --seed 42 --serial --out cli_c.json").exit_code == 0);
    auto a = nlohmann::json::parse(slurp("cli_a.json"));
    auto c = nlohmann::json::parse(slurp("cli_c.json"));
    a["meta"].erase("parallel");
    c["meta"].erase("parallel");
    CHECK(a.dump() == c.dump());
    std::remove("cli_a.json");
    std::remove("cli_b.json");
    std::remove("cli_c.json");
}

TEST_CASE("scan-area: validation, csv schema, svg") {
    CHECK(run("scan-area --t-min -1 --t-max 1 --steps 2").exit_code == 2);
    const auto r = run(
        "scan-area --t-min -3 --t-max 3 --steps 121 --no-quad --csv cli_scan.csv --svg cli_area.svg");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp("cli_scan.csv");
    CHECK(csv.rfind("t,A_closed,A_quad,rel_err\n", 0) == 0);
    CHECK(count_lines(csv) == 122);
    // argmax row at t = 0
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    double best_t = -1, best_a = -1;
    while (std::getline(is, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double t = std::stod(line.substr(0, c1));
        const double a = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        if (a > best_a) {
            best_a = a;
            best_t = t;
        }
    }
    CHECK(best_t == doctest::Approx(0.0));
    const std::string svg = slurp("cli_area.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::remove("cli_scan.csv");
    std::remove("cli_area.svg");
}

TEST_CASE("scan-area quadrature column at a spot value") {
    const auto r = run("scan-area --t-min 0.9 --t-max 1.1 --steps 3 --grid 48x48 --csv cli_scan2.csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(slurp("cli_scan2.csv"));
    std::string line;
    std::getline(is, line);
    bool found = false;
    while (std::getline(is, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double t = std::stod(line.substr(0, c1));
        if (std::abs(t - 1.0) < 1e-12) {
            const double a = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
            CHECK(a == doctest::Approx(8.83434450474843).epsilon(1e-9));
            found = true;
        }
    }
    CHECK(found);
    std::remove("cli_scan2.csv");
}

TEST_CASE("field: unknown quantity rejected; H2 and C obey their bounds") {
    CHECK(run("field --quantity bogus --t 0").exit_code == 2);

    const auto r = run("field --quantity H2 --t 0 --grid 24x16 --out cli_field.csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(slurp("cli_field.csv"));
    std::string line;
    std::getline(is, line);
    CHECK(line == "s1,s2,x,theta_coord,value");
    int rows = 0;
    while (std::getline(is, line)) {
        const auto p = line.rfind(',');
        const double v = std::stod(line.substr(p + 1));
        CHECK(v <= 3.0 / 4.0 + 1e-9);
        CHECK(v >= 0.0);
        ++rows;
    }
    CHECK(rows == 24 * 16);
    std::remove("cli_field.csv");

    const auto rc = run("field --quantity C --t 0 --grid 24x16 --out cli_fc.csv");
    CHECK(rc.exit_code == 0);
    std::istringstream isc(slurp("cli_fc.csv"));
    std::getline(isc, line);
    while (std::getline(isc, line)) {
        const auto p = line.rfind(',');
        CHECK(std::abs(std::stod(line.substr(p + 1))) <= 0.5 + 1e-12);
    }
    std::remove("cli_fc.csv");
}

TEST_CASE("field: divJH matches the closed form columnwise at t=1") {
    const auto r = run("field --quantity divJH --t 1 --grid 16x16 --out cli_div.csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(slurp("cli_div.csv"));
    std::string line;
    std::getline(is, line);
    int rows = 0;
    while (std::getline(is, line)) {
        double col[5];
        std::istringstream ls(line);
        std::string tok;
        for (int i = 0; i < 5; ++i) {
            std::getline(ls, tok, ',');
            col[i] = std::stod(tok);
        }
        const double x = col[2];
        const double closed = -3.0 * std::sinh(2.0) * x / (2.0 * (1.0 + x * x));
        CHECK(std::abs(col[4] - closed) <= 5e-6 * std::max(1.0, std::abs(closed)));
        ++rows;
    }
    CHECK(rows > 0);  // pole band trims the outermost nodes
    std::remove("cli_div.csv");
}

TEST_CASE("field: theta coefficient vanishes on Phi_0; xi rows restricted and finite") {
    const auto r = run("field --quantity theta --t 0 --grid 20x16 --out cli_th.csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(slurp("cli_th.csv"));
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        const auto p = line.rfind(',');
        CHECK(std::stod(line.substr(p + 1)) <= 1e-9);
    }
    std::remove("cli_th.csv");

    const auto rx = run("field --quantity xi --t 0 --grid 20x16 --out cli_xi.csv");
    CHECK(rx.exit_code == 0);
    std::istringstream isx(slurp("cli_xi.csv"));
    std::getline(isx, line);
    int rows = 0;
    while (std::getline(isx, line)) {
        const auto p = line.rfind(',');
        CHECK(std::isfinite(std::stod(line.substr(p + 1))));
        ++rows;
    }
    CHECK(rows > 0);
    CHECK(rows <= 20 * 16);
    std::remove("cli_xi.csv");
}

TEST_CASE("point: equator values and validation") {
    const auto r = run("point --t 0 --s1 0 --s2 0 --out cli_point.json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_point.json"));
    CHECK(std::abs(doc.at("C").get<double>()) < 1e-10);
    CHECK(doc.at("H2").get<double>() == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(doc.at("K_fd").get<double>() == doctest::Approx(-2.0 / 3.0).epsilon(1e-5));
    CHECK(doc.at("metric").at("E").get<double>() == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(doc.at("residuals").size() > 5);
    std::remove("cli_point.json");

    // far point: |C| <= 1/2 and the hoc residual stays jet-exact
    const auto r2 = run("point --t 0 --s1 3 --s2 1.2 --out cli_point2.json");
    CHECK(r2.exit_code == 0);
    const auto doc2 = nlohmann::json::parse(slurp("cli_point2.json"));
    CHECK(std::abs(doc2.at("C").get<double>()) <= 0.5 + 1e-12);
    for (const auto& c : doc2.at("residuals"))
        if (c.at("id") == "hoc") CHECK(c.at("residual").get<double>() <= 1e-9);
    std::remove("cli_point2.json");

    CHECK(run("point --t 0 --s1 nan --s2 0").exit_code == 2);
}
