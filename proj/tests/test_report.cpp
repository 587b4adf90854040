#include <doctest.h>

#include <map>
#include <string>

#include "lagsphere/report.hpp"

using namespace lagsphere;

namespace {

RunConfig small_config(double t) {
    RunConfig cfg;
    cfg.t = t;
    cfg.grid_nx = 64;
    cfg.grid_ntheta = 64;
    cfg.samples = 150;
    return cfg;
}

const nlohmann::ordered_json* find_check(const nlohmann::ordered_json& doc, const std::string& id) {
    for (const auto& c : doc.at("checks"))
        if (c.at("id") == id) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.c1 = 1.0;
    cfg.c2 = 4.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.grid_nx = 8;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.fd_step = 0.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.tol_profile = "lenient";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_NOTHROW(RunConfig{}.validate());
}

TEST_CASE("verify at t = 0 passes with all gated checks present") {
    const auto rep = run_verify(small_config(0.0));
    CHECK(rep.overall);
    CHECK(rep.doc.at("overall") == true);

    for (const char* id :
         {"lagrangian", "theta", "hoc", "koh", "esfera2", "s0_membership", "d_maslov",
          "ham_stat", "g_zbar", "div_match", "grad_c", "delta_c", "lalog2", "lalog_k", "xi",
          "stationarity_sup_divjh", "variation_field", "inversion_consistency",
          "lawlor_membership", "area_vs_closed", "eight_pi", "willmore", "degree_zero",
          "gauss_bonnet", "bochner", "perp_h_closed", "poly_abc", "h_zeros_at_poles"}) {
        INFO(id);
        CHECK(find_check(rep.doc, id) != nullptr);
    }
    // report-only entries never gate
    CHECK(find_check(rep.doc, "bochner")->at("gated") == false);
    CHECK(find_check(rep.doc, "perp_h_closed")->at("gated") == false);
    CHECK(find_check(rep.doc, "poly_abc")->at("gated") == false);
    CHECK(find_check(rep.doc, "bochner")->contains("note"));

    // every check id appears exactly once and carries a nonempty ref where defined
    std::map<std::string, int> counts;
    for (const auto& c : rep.doc.at("checks")) {
        counts[c.at("id").get<std::string>()]++;
        if (c.contains("ref")) CHECK(!c.at("ref").get<std::string>().empty());
    }
    for (const auto& [id, n] : counts) {
        INFO(id);
        CHECK(n == 1);
    }

    // frozen calibration is recorded in the metadata
    CHECK(rep.doc.at("meta").contains("sign_calibration"));
    CHECK(rep.doc.at("meta").contains("inversion_scale_note"));
}

TEST_CASE("verify at t = 0.3: ham_stat reported failing-as-expected, overall still passes") {
    const auto rep = run_verify(small_config(0.3));
    CHECK(rep.overall);
    const auto* ham = find_check(rep.doc, "ham_stat");
    REQUIRE(ham != nullptr);
    CHECK(ham->at("gated") == false);
    CHECK(ham->at("max_residual").get<double>() > 1e-2);
    CHECK(ham->contains("note"));
    const auto* disc = find_check(rep.doc, "stationarity_discrimination");
    REQUIRE(disc != nullptr);
    CHECK(disc->at("pass") == true);
    // t-only identities absent
    CHECK(find_check(rep.doc, "theta") == nullptr);
    CHECK(find_check(rep.doc, "variation_field") == nullptr);
}

TEST_CASE("reports are deterministic given config and seed") {
    const auto a = run_verify(small_config(0.0));
    const auto b = run_verify(small_config(0.0));
    CHECK(a.dump() == b.dump());

    RunConfig serial = small_config(0.0);
    serial.parallel = false;
    const auto c = run_verify(serial);
    // identical numbers on the serial reference path; only the mode flag differs
    auto da = a.doc;
    auto dc = c.doc;
    da["meta"].erase("parallel");
    dc["meta"].erase("parallel");
    CHECK(da.dump() == dc.dump());
}

TEST_CASE("strict profile tightens gates") {
    RunConfig cfg = small_config(0.0);
    cfg.tol_profile = "strict";
    const auto rep = run_verify(cfg);
    CHECK(rep.overall);  // the margins are wide enough to survive halved gates
    const auto* lag = find_check(rep.doc, "lagrangian");
    REQUIRE(lag != nullptr);
    CHECK(lag->at("tol").get<double>() == doctest::Approx(0.5e-9));
}
