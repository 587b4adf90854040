#ifndef LAGSPHERE_AMBIENT_HPP
#define LAGSPHERE_AMBIENT_HPP

/// Geometry of the ambient Kaehler surface S^2_{c1} x S^2_{c2} in R^6 = R^3 x R^3:
/// product metric, complex structure J, product structure P, Kaehler form, and
/// tangent-space projection.
///
/// Frozen orientation conventions (see VerificationReport metadata):
///   J^i u  = sqrt(c_i) (u x p_i)   on each factor (cross with the inward unit normal),
///   omega(u,v) = <Ju, v>,
///   charts (s1,s2) and (theta,x) are positively oriented.
/// With these choices every sign-sensitive identity of the surface theory
/// (d-Maslov form, div JH closed form, variation field J grad f) holds verbatim.

#include <cmath>
#include <stdexcept>

#include "lagsphere/vec.hpp"

namespace lagsphere {

/// Curvature pair and derived constants. Requires c1 > c2 > 0.
struct Params {
    double c1;
    double c2;
    double D;        // c1 - c2
    double S;        // c1 + c2
    Vec6 a;          // base point ((0,0,1/sqrt(c1)), (0,0,1/sqrt(c2)))
    Vec6 a_hat;      // antipodal twist (-a1, a2)

    Params(double c1_, double c2_) : c1(c1_), c2(c2_), D(c1_ - c2_), S(c1_ + c2_) {
        if (!(c1 > c2 && c2 > 0.0) || !std::isfinite(c1) || !std::isfinite(c2))
            throw std::invalid_argument("Params: require c1 > c2 > 0");
        const double r1 = 1.0 / std::sqrt(c1), r2 = 1.0 / std::sqrt(c2);
        a = {0.0, 0.0, r1, 0.0, 0.0, r2};
        a_hat = {0.0, 0.0, -r1, 0.0, 0.0, r2};
    }
};

/// A point of S^2_{c1} x S^2_{c2}, stored as (p1, p2) in R^3 x R^3.
struct ProductPoint {
    Vec6 p;

    Vec3 p1() const { return {p[0], p[1], p[2]}; }
    Vec3 p2() const { return {p[3], p[4], p[5]}; }

    /// On-manifold defect, relative to the factor radii.
    double manifold_defect(const Params& prm) const {
        const Vec3 q1 = p1(), q2 = p2();
        return std::max(std::abs(dot(q1, q1) - 1.0 / prm.c1) * prm.c1,
                        std::abs(dot(q2, q2) - 1.0 / prm.c2) * prm.c2);
    }
};

// Ambient vectors are plain Vec6 (or CVec6 when complexified; the inner
// product extends complex-bilinearly, never Hermitian). Tangency to the
// product at a point is a property, checked where it matters.

inline double tangency_defect(const Params& prm, const ProductPoint& pt, const Vec6& v) {
    const Vec3 p1 = pt.p1(), p2 = pt.p2();
    const Vec3 v1 = {v[0], v[1], v[2]}, v2 = {v[3], v[4], v[5]};
    const double n = norm(v);
    if (n == 0.0) return 0.0;
    return std::max(std::abs(dot(v1, p1)) * std::sqrt(prm.c1),
                    std::abs(dot(v2, p2)) * std::sqrt(prm.c2)) / n;
}

/// Removes the components along the unit normals sqrt(c1)(p1,0), sqrt(c2)(0,p2).
inline Vec6 project_to_tangent(const Params& prm, const ProductPoint& pt, const Vec6& w) {
    const Vec3 p1 = pt.p1(), p2 = pt.p2();
    const double a1 = prm.c1 * (w[0] * p1[0] + w[1] * p1[1] + w[2] * p1[2]);
    const double a2 = prm.c2 * (w[3] * p2[0] + w[4] * p2[1] + w[5] * p2[2]);
    return {w[0] - a1 * p1[0], w[1] - a1 * p1[1], w[2] - a1 * p1[2],
            w[3] - a2 * p2[0], w[4] - a2 * p2[1], w[5] - a2 * p2[2]};
}

namespace detail {
template <class V>
inline V apply_J_impl(const Params& prm, const ProductPoint& pt, const V& v) {
    const Vec3 p1 = pt.p1(), p2 = pt.p2();
    const double r1 = std::sqrt(prm.c1), r2 = std::sqrt(prm.c2);
    V out{};
    // factor 1: sqrt(c1) (v1 x p1)
    out[0] = r1 * (v[1] * p1[2] - v[2] * p1[1]);
    out[1] = r1 * (v[2] * p1[0] - v[0] * p1[2]);
    out[2] = r1 * (v[0] * p1[1] - v[1] * p1[0]);
    // factor 2: sqrt(c2) (v2 x p2)
    out[3] = r2 * (v[4] * p2[2] - v[5] * p2[1]);
    out[4] = r2 * (v[5] * p2[0] - v[3] * p2[2]);
    out[5] = r2 * (v[3] * p2[1] - v[4] * p2[0]);
    return out;
}
}  // namespace detail

/// J applied to a tangent vector at pt. Throws if v is visibly non-tangent.
inline Vec6 apply_J(const Params& prm, const ProductPoint& pt, const Vec6& v) {
    if (tangency_defect(prm, pt, v) > 1e-8)
        throw std::domain_error("apply_J: vector is not tangent to S2xS2");
    return detail::apply_J_impl<Vec6>(prm, pt, v);
}

/// Complexified J (componentwise on real and imaginary parts).
inline CVec6 apply_J(const Params& prm, const ProductPoint& pt, const CVec6& v) {
    return detail::apply_J_impl<CVec6>(prm, pt, v);
}

inline Vec6 apply_P(const Vec6& v) { return {-v[0], -v[1], -v[2], v[3], v[4], v[5]}; }
inline CVec6 apply_P(const CVec6& v) { return {-v[0], -v[1], -v[2], v[3], v[4], v[5]}; }

/// Kaehler 2-form, omega(u,v) = <Ju, v>.
inline double kahler_form(const Params& prm, const ProductPoint& pt, const Vec6& u, const Vec6& v) {
    return dot(apply_J(prm, pt, u), v);
}

}  // namespace lagsphere

#endif
