#ifndef LAGSPHERE_IDENTITIES_HPP
#define LAGSPHERE_IDENTITIES_HPP

/// Pointwise residual evaluation for the identity catalog of the surface
/// theory on Phi_t, split into a jet-exact suite and a finite-difference
/// suite, plus the variation-field check at t = 0. Identities are evaluated
/// in the cylinder chart (conformal for the induced metric; certified, not
/// assumed).

#include <string>
#include <vector>

#include "lagsphere/ambient.hpp"
#include "lagsphere/chart.hpp"
#include "lagsphere/parallel.hpp"

namespace lagsphere {

struct IdentityResidual {
    std::string id;
    std::string ref;      // formula anchor; stable report schema
    double residual;      // normalized, >= 0
    double normalizer;
    bool gated;
    double tol;
};

/// Gating is data, not code: report-only entries can be promoted without
/// interface changes.
struct RegistryEntry {
    const char* id;
    const char* ref;
    bool t0_only_eval;    // identity only holds (and is only evaluated) at t = 0
    bool gated_at_t0;
    bool gated_all_t;     // gated at every t where evaluated
    double tol;
};

const std::vector<RegistryEntry>& exact_registry();
const std::vector<RegistryEntry>& derivative_registry();

/// Threshold below which H counts as zero (entries dividing by <H, J deltaPhi>
/// are skipped, not extrapolated).
inline double h_zero_eps(const Params& prm) { return 1e-3 * std::sqrt(prm.D); }

/// Jet-exact identity residuals at one cylinder-chart point of Phi_t.
/// The single finite-difference ingredient is the Brioschi curvature used by
/// the gauss_eq entry (step fd_h).
std::vector<IdentityResidual> exact_suite(const Params& prm, double t, const ChartPoint& cp,
                                          double fd_h = 1e-3);

/// Finite-difference identity residuals at one cylinder-chart point (step h).
/// Requires pole_coordinate <= band for every entry.
std::vector<IdentityResidual> derivative_suite(const Params& prm, double t, const ChartPoint& cp,
                                               double h, double pole_band = 0.95);

/// Normal part of dPhi_t/dt at t=0 versus J grad f, normalized by sqrt(c1-c2).
double variation_field_residual(const Params& prm, const ChartPoint& cp, double h_t = 1e-4,
                                double pole_band = 0.95);

// ---------------------------------------------------------------------------
// Suite runners over random samples
// ---------------------------------------------------------------------------

struct SamplePlan {
    int count = 1000;
    unsigned long long seed = 20240915ull;
    double pole_band = 0.0;   // 0: |x| unrestricted; otherwise require |x| <= band
};

std::vector<ChartPoint> sample_points(const SamplePlan& plan);

/// Aggregated per-identity result over a sample.
struct SuiteSummary {
    std::string id;
    std::string ref;
    double max_residual = 0.0;
    double tol = 0.0;
    bool gated = false;
    bool pass = true;
    int samples = 0;
    double order = 0.0;       // Richardson order estimate (derivative suite)
};

std::vector<SuiteSummary> run_exact_suite(const Params& prm, double t, const SamplePlan& plan,
                                          double fd_h, Exec mode);
std::vector<SuiteSummary> run_derivative_suite(const Params& prm, double t, const SamplePlan& plan,
                                               double h, Exec mode);

struct VariationSummary {
    double max_residual = 0.0;
    double order = 0.0;
    int samples = 0;
};
VariationSummary run_variation_suite(const Params& prm, const SamplePlan& plan, double h_t, Exec mode);

/// sup |div JH| over the sample (finite differences, step h).
double stationarity_sup_divjh(const Params& prm, double t, const SamplePlan& plan, double h, Exec mode);

/// Near-pole exploration of the zeros of H (report-only): returns (|C|, |H|^2)
/// at |x| = probe on Phi_0.
std::pair<double, double> h_zero_probe(const Params& prm, double probe_x = 0.9999);

}  // namespace lagsphere

#endif
