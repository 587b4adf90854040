#ifndef LAGSPHERE_LOCAL_GEOMETRY_HPP
#define LAGSPHERE_LOCAL_GEOMETRY_HPP

/// The complete pointwise geometric package of an immersed surface in
/// S^2_{c1} x S^2_{c2}: induced metric, conformal factor, second fundamental
/// form contractions, mean curvature H, associated Jacobian C, and the
/// complexified frame deltaPhi, all derived from one exact 2-jet.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "lagsphere/ambient.hpp"
#include "lagsphere/chart.hpp"
#include "lagsphere/jet.hpp"

namespace lagsphere {

struct LocalGeometry {
    ProductPoint point;
    Vec6 d1, d2;             // dPhi/du1, dPhi/du2
    Vec6 d11, d12, d22;      // flat second derivatives
    double E, F, G, detg;
    bool conformal;          // E ~ G, F ~ 0 within tolerance
    double e2u;              // conformal factor when conformal; (E+G)/2 otherwise
    Vec6 H;                  // mean curvature in S2xS2 (half trace of sigma)
    Vec6 JH;                 // J applied to H (metric dual of alpha_H)
    double C;                // associated Jacobian; |C| <= 1/2 on Lagrangian surfaces
    double lagrangian_defect;  // |omega(d1,d2)|/sqrt(det g) = |Jac(phi) + Jac(psi)|
    double sigma2;           // |sigma|^2, fully contracted
    double H2;               // |H|^2
    double K = std::numeric_limits<double>::quiet_NaN();  // filled by gauss_curvature

    // Complexified frame data (cylinder-chart identity suites).
    CVec6 delta;             // deltaPhi = (d1 - i d2)/2
    CVec6 Jdelta;            // J deltaPhi
    CVec6 dd;                // delta delta Phi: d^2_w Phi projected to T(S2xS2)
    std::complex<double> hs; // <H, J deltaPhi>
    std::complex<double> gs; // <deltaPhi, P deltaPhi>
    std::complex<double> C_conformal;  // -i e^{-2u} <P deltaPhi, J conj(deltaPhi)>

    double u() const { return 0.5 * std::log(e2u); }

    /// Gauss curvature through the Gauss equation (jet-exact ingredients);
    /// independent of the finite-difference Brioschi route stored in K.
    double gauss_from_equation(const Params& prm) const {
        return prm.S * C * C + 2.0 * H2 - 0.5 * sigma2;
    }

    /// trace_g of the pullback of the factor metric (phi factor if `first`).
    double factor_trace(bool first, const double gi[3]) const {
        const int o = first ? 0 : 3;
        double t11 = 0.0, t12 = 0.0, t22 = 0.0;
        for (int k = o; k < o + 3; ++k) {
            t11 += d1[k] * d1[k];
            t12 += d1[k] * d2[k];
            t22 += d2[k] * d2[k];
        }
        return gi[0] * t11 + 2.0 * gi[1] * t12 + gi[2] * t22;
    }

    // Inverse metric entries g^{11}, g^{12}, g^{22}.
    double gi11() const { return G / detg; }
    double gi12() const { return -F / detg; }
    double gi22() const { return E / detg; }
};

namespace detail {

inline Vec6 jet_value(const Jet6& j) { return {j[0].v, j[1].v, j[2].v, j[3].v, j[4].v, j[5].v}; }
inline Vec6 jet_d1(const Jet6& j) { return {j[0].d1, j[1].d1, j[2].d1, j[3].d1, j[4].d1, j[5].d1}; }
inline Vec6 jet_d2(const Jet6& j) { return {j[0].d2, j[1].d2, j[2].d2, j[3].d2, j[4].d2, j[5].d2}; }
inline Vec6 jet_d11(const Jet6& j) { return {j[0].d11, j[1].d11, j[2].d11, j[3].d11, j[4].d11, j[5].d11}; }
inline Vec6 jet_d12(const Jet6& j) { return {j[0].d12, j[1].d12, j[2].d12, j[3].d12, j[4].d12, j[5].d12}; }
inline Vec6 jet_d22(const Jet6& j) { return {j[0].d22, j[1].d22, j[2].d22, j[3].d22, j[4].d22, j[5].d22}; }

}  // namespace detail

/// Exact 2-jet of a chart map at a chart point.
inline Jet6 jet_eval(const ChartMap& map, const ChartPoint& cp) { return map.jet(cp.u1, cp.u2); }

/// Assembles the full pointwise package from one jet. Throws std::domain_error
/// on a degenerate metric or an off-manifold point.
inline LocalGeometry local_geometry(const Params& prm, const ChartMap& map, const ChartPoint& cp) {
    const Jet6 j = jet_eval(map, cp);

    LocalGeometry lg;
    lg.point = ProductPoint{detail::jet_value(j)};
    if (lg.point.manifold_defect(prm) > 1e-10)
        throw std::domain_error("local_geometry: map image leaves S2xS2");
    lg.d1 = detail::jet_d1(j);
    lg.d2 = detail::jet_d2(j);
    lg.d11 = detail::jet_d11(j);
    lg.d12 = detail::jet_d12(j);
    lg.d22 = detail::jet_d22(j);

    lg.E = dot(lg.d1, lg.d1);
    lg.F = dot(lg.d1, lg.d2);
    lg.G = dot(lg.d2, lg.d2);
    lg.detg = lg.E * lg.G - lg.F * lg.F;
    if (!(lg.detg > 0.0) || !std::isfinite(lg.detg))
        throw std::domain_error("local_geometry: degenerate metric");
    lg.conformal = std::abs(lg.E - lg.G) <= 1e-8 * lg.E && std::abs(lg.F) <= 1e-8 * lg.E;
    lg.e2u = 0.5 * (lg.E + lg.G);

    // Product-covariant second derivatives and their sigma (Sigma-normal) parts.
    const double gi[3] = {lg.gi11(), lg.gi12(), lg.gi22()};
    Vec6 sig[3];
    {
        const Vec6 hd[3] = {project_to_tangent(prm, lg.point, lg.d11),
                            project_to_tangent(prm, lg.point, lg.d12),
                            project_to_tangent(prm, lg.point, lg.d22)};
        for (int k = 0; k < 3; ++k) {
            const double a1 = dot(hd[k], lg.d1), a2 = dot(hd[k], lg.d2);
            const double b1 = gi[0] * a1 + gi[1] * a2;
            const double b2 = gi[1] * a1 + gi[2] * a2;
            sig[k] = hd[k] - (b1 * lg.d1 + b2 * lg.d2);
        }
    }

    lg.H = 0.5 * (gi[0] * sig[0] + (2.0 * gi[1]) * sig[1] + gi[2] * sig[2]);
    lg.H2 = dot(lg.H, lg.H);
    lg.JH = detail::apply_J_impl<Vec6>(prm, lg.point, lg.H);

    // |sigma|^2 = g^{ik} g^{jl} <sigma_ij, sigma_kl>, sigma symmetric
    {
        const double s11 = dot(sig[0], sig[0]), s12 = dot(sig[0], sig[1]), s13 = dot(sig[0], sig[2]);
        const double s22 = dot(sig[1], sig[1]), s23 = dot(sig[1], sig[2]), s33 = dot(sig[2], sig[2]);
        const double a = gi[0], b = gi[1], c = gi[2];
        lg.sigma2 = a * a * s11 + 4.0 * a * b * s12 + 2.0 * b * b * s13 +
                    2.0 * (a * c + b * b) * s22 + 4.0 * b * c * s23 + c * c * s33;
    }

    // Associated Jacobian via the factor-map Jacobian (general charts).
    {
        const Vec3 p1 = lg.point.p1();
        const Vec3 dphi1 = {lg.d1[0], lg.d1[1], lg.d1[2]};
        const Vec3 dphi2 = {lg.d2[0], lg.d2[1], lg.d2[2]};
        const Vec3 J1d1 = cross(dphi1, p1);  // inward convention, see ambient.hpp
        lg.C = std::sqrt(prm.c1) * dot(J1d1, dphi2) / std::sqrt(lg.detg);
    }
    lg.lagrangian_defect =
        std::abs(dot(detail::apply_J_impl<Vec6>(prm, lg.point, lg.d1), lg.d2)) / std::sqrt(lg.detg);
    // The Cauchy-Schwarz bound on C is a Lagrangian fact; fixtures such as the
    // round sphere legitimately exceed it.
    if (lg.lagrangian_defect <= 1e-6 && std::abs(lg.C) > 0.5 + 1e-12)
        throw std::domain_error("local_geometry: |C| exceeds the Cauchy-Schwarz bound");

    // Complexified frame.
    for (int i = 0; i < 6; ++i) lg.delta[i] = 0.5 * std::complex<double>(lg.d1[i], -lg.d2[i]);
    lg.Jdelta = apply_J(prm, lg.point, lg.delta);
    lg.hs = dot(lg.H, lg.Jdelta);
    lg.gs = dot(lg.delta, apply_P(lg.delta));
    lg.C_conformal = std::complex<double>(0.0, -1.0) / lg.e2u *
                     dot(apply_P(lg.delta), apply_J(prm, lg.point, conj(lg.delta)));

    // delta delta Phi: d^2_w Phi = (d11 - 2i d12 - d22)/4, projected to T(S2xS2).
    {
        CVec6 ddw;
        for (int i = 0; i < 6; ++i)
            ddw[i] = 0.25 * std::complex<double>(lg.d11[i] - lg.d22[i], -2.0 * lg.d12[i]);
        const Vec6 re = {ddw[0].real(), ddw[1].real(), ddw[2].real(),
                         ddw[3].real(), ddw[4].real(), ddw[5].real()};
        const Vec6 im = {ddw[0].imag(), ddw[1].imag(), ddw[2].imag(),
                         ddw[3].imag(), ddw[4].imag(), ddw[5].imag()};
        const Vec6 pre = project_to_tangent(prm, lg.point, re);
        const Vec6 pim = project_to_tangent(prm, lg.point, im);
        for (int i = 0; i < 6; ++i) lg.dd[i] = std::complex<double>(pre[i], pim[i]);
    }

    // H must be Sigma-normal and tangent to the product. The assembly of H
    // amplifies rounding by 1/e2u, so the gates carry that noise floor; in the
    // bulk it is far below the 1e-10 relative tolerance.
    {
        const double hn = std::sqrt(lg.H2);
        double max_hd = 0.0;
        for (const Vec6* d : {&lg.d11, &lg.d12, &lg.d22}) max_hd = std::max(max_hd, norm(*d));
        const double h_noise = 64.0 * std::numeric_limits<double>::epsilon() *
                               (max_hd / lg.e2u + hn);
        if (hn > 0.0) {
            const double tol = (1e-10 * hn + h_noise) * std::sqrt(lg.e2u);
            if (std::abs(dot(lg.H, lg.d1)) > tol || std::abs(dot(lg.H, lg.d2)) > tol)
                throw std::domain_error("local_geometry: H failed Sigma-normality");
            if (tangency_defect(prm, lg.point, lg.H) > 1e-10 + h_noise / hn)
                throw std::domain_error("local_geometry: H failed product tangency");
        }
    }

    return lg;
}

}  // namespace lagsphere

#endif
