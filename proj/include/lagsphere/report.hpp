#ifndef LAGSPHERE_REPORT_HPP
#define LAGSPHERE_REPORT_HPP

/// Run configuration and the JSON verification report. Reports are
/// deterministic: identical config + seed produce byte-identical output.

#include <string>

#include <json.hpp>

#include "lagsphere/parallel.hpp"

namespace lagsphere {

struct RunConfig {
    double c1 = 4.0;
    double c2 = 1.0;
    double t = 0.0;
    int grid_nx = 200;
    int grid_ntheta = 256;
    double fd_step = 1e-3;
    int samples = 1000;
    double pole_band = 0.95;
    std::string tol_profile = "default";  // "default" | "strict"
    unsigned long long seed = 20240915ull;
    bool parallel = true;

    Exec mode() const { return parallel ? Exec::Parallel : Exec::Serial; }

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;

    /// Tolerance scaling: the strict profile halves every gate.
    double tol_scale() const { return tol_profile == "strict" ? 0.5 : 1.0; }
};

struct VerificationReport {
    nlohmann::ordered_json doc;
    bool overall = false;

    std::string dump() const { return doc.dump(2) + "\n"; }
};

/// Runs every suite applicable at cfg.t and assembles the report.
VerificationReport run_verify(const RunConfig& cfg);

}  // namespace lagsphere

#endif
