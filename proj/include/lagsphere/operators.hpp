#ifndef LAGSPHERE_OPERATORS_HPP
#define LAGSPHERE_OPERATORS_HPP

/// Finite-difference operators for fields derived from jet-exact geometry:
/// divergence, Laplace-Beltrami, gradient norm, normal-connection norm, and the
/// intrinsic Brioschi curvature. All stencils are central, O(h^2), and operate
/// on exact metric samples, so Richardson ratios between h and h/2 expose the
/// convergence order directly.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "lagsphere/local_geometry.hpp"

namespace lagsphere {

/// Contravariant components of an ambient-represented tangent field.
inline void contravariant(const LocalGeometry& lg, const Vec6& X, double& a1, double& a2) {
    const double b1 = dot(X, lg.d1), b2 = dot(X, lg.d2);
    a1 = (lg.G * b1 - lg.F * b2) / lg.detg;
    a2 = (lg.E * b2 - lg.F * b1) / lg.detg;
}

/// div X = (1/sqrt(g)) d_i (sqrt(g) X^i) by central differences of exact
/// metric/frame samples. `field` maps a chart point to an ambient tangent vector.
template <class VecField>
double divergence(const Params& prm, const ChartMap& map, VecField&& field, const ChartPoint& cp,
                  double h) {
    auto sqg_flux = [&](double u1, double u2, int comp) {
        const ChartPoint q{u1, u2};
        const LocalGeometry lg = local_geometry(prm, map, q);
        const Vec6 X = field(q);
        double a1, a2;
        contravariant(lg, X, a1, a2);
        return std::sqrt(lg.detg) * (comp == 0 ? a1 : a2);
    };
    const LocalGeometry lg0 = local_geometry(prm, map, cp);
    const double t1 = (sqg_flux(cp.u1 + h, cp.u2, 0) - sqg_flux(cp.u1 - h, cp.u2, 0)) / (2.0 * h);
    const double t2 = (sqg_flux(cp.u1, cp.u2 + h, 1) - sqg_flux(cp.u1, cp.u2 - h, 1)) / (2.0 * h);
    return (t1 + t2) / std::sqrt(lg0.detg);
}

/// |grad f|^2 = g^{ij} d_i f d_j f with central differences for df.
template <class ScalarField>
double gradient_norm2(const Params& prm, const ChartMap& map, ScalarField&& f, const ChartPoint& cp,
                      double h) {
    const LocalGeometry lg = local_geometry(prm, map, cp);
    const double f1 = (f(ChartPoint{cp.u1 + h, cp.u2}) - f(ChartPoint{cp.u1 - h, cp.u2})) / (2.0 * h);
    const double f2 = (f(ChartPoint{cp.u1, cp.u2 + h}) - f(ChartPoint{cp.u1, cp.u2 - h})) / (2.0 * h);
    return lg.gi11() * f1 * f1 + 2.0 * lg.gi12() * f1 * f2 + lg.gi22() * f2 * f2;
}

/// Laplace-Beltrami, Delta f = (1/sqrt(g)) d_i (sqrt(g) g^{ij} d_j f), realized
/// as the divergence of the finite-difference gradient field (nested central
/// differences; still O(h^2) since the inner truncation error is smooth).
template <class ScalarField>
double laplace_beltrami(const Params& prm, const ChartMap& map, ScalarField&& f, const ChartPoint& cp,
                        double h) {
    auto grad_field = [&](const ChartPoint& q) -> Vec6 {
        const LocalGeometry lg = local_geometry(prm, map, q);
        const double f1 = (f(ChartPoint{q.u1 + h, q.u2}) - f(ChartPoint{q.u1 - h, q.u2})) / (2.0 * h);
        const double f2 = (f(ChartPoint{q.u1, q.u2 + h}) - f(ChartPoint{q.u1, q.u2 - h})) / (2.0 * h);
        const double a1 = lg.gi11() * f1 + lg.gi12() * f2;
        const double a2 = lg.gi12() * f1 + lg.gi22() * f2;
        return a1 * lg.d1 + a2 * lg.d2;
    };
    return divergence(prm, map, grad_field, cp, h);
}

/// Gauss curvature by the Brioschi formula on a 3x3 stencil of exact metric
/// samples. Deliberately independent of the Gauss equation, so the latter
/// remains a genuine cross-check of H, C and |sigma|^2.
inline double gauss_curvature([[maybe_unused]] const Params& prm, const ChartMap& map,
                              const ChartPoint& cp, double h) {
    double E[3][3], F[3][3], G[3][3];
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            const Jet6 jet = map.jet(cp.u1 + i * h, cp.u2 + j * h);
            const Vec6 a = detail::jet_d1(jet), b = detail::jet_d2(jet);
            E[i + 1][j + 1] = dot(a, a);
            F[i + 1][j + 1] = dot(a, b);
            G[i + 1][j + 1] = dot(b, b);
        }
    const double E0 = E[1][1], F0 = F[1][1], G0 = G[1][1];
    const double Eu = (E[2][1] - E[0][1]) / (2 * h), Ev = (E[1][2] - E[1][0]) / (2 * h);
    const double Gu = (G[2][1] - G[0][1]) / (2 * h), Gv = (G[1][2] - G[1][0]) / (2 * h);
    const double Fu = (F[2][1] - F[0][1]) / (2 * h), Fv = (F[1][2] - F[1][0]) / (2 * h);
    const double Evv = (E[1][2] - 2 * E0 + E[1][0]) / (h * h);
    const double Guu = (G[2][1] - 2 * G0 + G[0][1]) / (h * h);
    const double Fuv = (F[2][2] - F[2][0] - F[0][2] + F[0][0]) / (4 * h * h);

    auto det3 = [](double a11, double a12, double a13, double a21, double a22, double a23,
                   double a31, double a32, double a33) {
        return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
               a13 * (a21 * a32 - a22 * a31);
    };
    const double m1 = det3(-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
                           Fv - 0.5 * Gu, E0, F0,
                           0.5 * Gv, F0, G0);
    const double m2 = det3(0.0, 0.5 * Ev, 0.5 * Gu,
                           0.5 * Ev, E0, F0,
                           0.5 * Gu, F0, G0);
    const double detg = E0 * G0 - F0 * F0;
    if (!(detg > 0.0)) throw std::domain_error("gauss_curvature: degenerate metric on stencil");
    return (m1 - m2) / (detg * detg);
}

/// |nabla^perp H|^2: central-difference the H field, project onto the
/// Sigma-normal bundle inside T(S2xS2), contract with the inverse metric.
inline double normal_connection_norm2(const Params& prm, const ChartMap& map, const ChartPoint& cp,
                                      double h) {
    const LocalGeometry lg0 = local_geometry(prm, map, cp);
    auto Hat = [&](double u1, double u2) {
        return local_geometry(prm, map, ChartPoint{u1, u2}).H;
    };
    const Vec6 dH[2] = {
        (1.0 / (2.0 * h)) * (Hat(cp.u1 + h, cp.u2) - Hat(cp.u1 - h, cp.u2)),
        (1.0 / (2.0 * h)) * (Hat(cp.u1, cp.u2 + h) - Hat(cp.u1, cp.u2 - h))};
    Vec6 N[2];
    for (int k = 0; k < 2; ++k) {
        const Vec6 w = project_to_tangent(prm, lg0.point, dH[k]);
        double a1, a2;
        contravariant(lg0, w, a1, a2);
        N[k] = w - (a1 * lg0.d1 + a2 * lg0.d2);
    }
    return lg0.gi11() * dot(N[0], N[0]) + 2.0 * lg0.gi12() * dot(N[0], N[1]) +
           lg0.gi22() * dot(N[1], N[1]);
}

/// Convergence-order estimate from residuals that tend to zero: r(h) ~ C h^p.
/// Residuals at or below `floor` count as converged (order reported as large).
inline double order_from_residuals(double r_h, double r_h2, double floor = 1e-9) {
    if (r_h <= floor || r_h2 <= 0.0) return 8.0;
    return std::log2(r_h / r_h2);
}

/// Convergence-order estimate from three values of a quantity with unknown limit.
inline double order_from_triple(double v_h, double v_h2, double v_h4, double floor = 1e-12) {
    const double d1 = std::abs(v_h - v_h2), d2 = std::abs(v_h2 - v_h4);
    if (d1 <= floor || d2 <= floor) return 8.0;
    return std::log2(d1 / d2);
}

/// Default pole band for FD-based operations on the catalog immersions.
inline constexpr double kDefaultPoleBand = 0.95;

/// |x| of the underlying sphere point for the catalog charts.
inline double pole_coordinate(Chart chart, const ChartPoint& cp) {
    return chart == Chart::Cylinder ? std::abs(std::tanh(cp.u1)) : std::abs(cp.u2);
}

}  // namespace lagsphere

#endif
