#ifndef LAGSPHERE_IMMERSIONS_HPP
#define LAGSPHERE_IMMERSIONS_HPP

/// The closed-form catalog: the family Phi_t, the distinguished Phi_0, Lawlor
/// cylinders and their inverted minimal surfaces, the Hamiltonian potential f,
/// and the closed-form scalars A(t) and div JH_t. Everything is written once
/// against a generic scalar so that plain values and exact 2-jets share the
/// same code path.

#include <complex>
#include <stdexcept>
#include <utility>

#include "lagsphere/ambient.hpp"
#include "lagsphere/chart.hpp"
#include "lagsphere/jet.hpp"

namespace lagsphere {

/// Deformation parameter with cached hyperbolics.
struct FamilyParam {
    double t;
    double s_t;  // sinh t
    double c_t;  // cosh t

    explicit FamilyParam(double t_) : t(t_), s_t(std::sinh(t_)), c_t(std::cosh(t_)) {
        if (!std::isfinite(t_)) throw std::invalid_argument("FamilyParam: t must be finite");
    }
};

namespace detail {

/// The family's denominator rho(x) = (c1 ct^2 - c2 st^2) + (c1 st^2 - c2 ct^2) x^2
/// is linear in x^2 and positive at x^2 = 0 and x^2 = 1 whenever c1 > c2 > 0,
/// hence positive on the whole sphere.
inline void check_family_denominator(const Params& prm, const FamilyParam& fp) {
    const double at0 = prm.c1 * fp.c_t * fp.c_t - prm.c2 * fp.s_t * fp.s_t;
    const double at1 = at0 + prm.c1 * fp.s_t * fp.s_t - prm.c2 * fp.c_t * fp.c_t;
    if (!(at0 > 0.0 && at1 > 0.0))
        throw std::domain_error("phi_family: denominator lost positivity");
}

/// Phi_t = (phi_t, psi_t) on the unit sphere, generic scalar S.
template <class S>
std::array<S, 6> phi_family_core(const Params& prm, const FamilyParam& fp, const Cx<S>& z, const S& x) {
    const double c1 = prm.c1, c2 = prm.c2;
    const double st = fp.s_t, ct = fp.c_t;
    const double st2 = st * st, ct2 = ct * ct;
    const S x2 = x * x;
    const S rho = (c1 * ct2 - c2 * st2) + (c1 * st2 - c2 * ct2) * x2;
    const S pref = (2.0 * std::sqrt(prm.D)) / rho;

    const Cx<S> phi_z = Cx<S>(pref) * Cx<S>(S(st), ct * x) * z;
    const S phi_x = pref * ((c1 * ct2 - 2.0 * c1 - c2 * st2) + (c1 * st2 + 2.0 * c1 - c2 * ct2) * x2) *
                    (1.0 / (2.0 * std::sqrt(c1) * std::sqrt(prm.D)));
    const Cx<S> psi_z = Cx<S>(pref) * Cx<S>(S(ct), st * x) * conj(z);
    const S psi_x = pref * ((c1 * ct2 - 2.0 * c2 - c2 * st2) + (c1 * st2 + 2.0 * c2 - c2 * ct2) * x2) *
                    (1.0 / (2.0 * std::sqrt(c2) * std::sqrt(prm.D)));

    return {phi_z.re, phi_z.im, phi_x, psi_z.re, psi_z.im, psi_x};
}

/// Phi_0, coded on its own from its defining display (not by calling
/// phi_family_core at t=0); the two codings must agree everywhere.
template <class S>
std::array<S, 6> phi_zero_core(const Params& prm, const Cx<S>& z, const S& x) {
    const double c1 = prm.c1, c2 = prm.c2;
    const S x2 = x * x;
    const S pref = (2.0 * std::sqrt(prm.D)) / (c1 - c2 * x2);

    const Cx<S> phi_z = Cx<S>(pref) * Cx<S>(S(0.0), x) * z;
    const S phi_x = pref * ((-c1) + (2.0 * c1 - c2) * x2) * (1.0 / (2.0 * std::sqrt(c1) * std::sqrt(prm.D)));
    const Cx<S> psi_z = Cx<S>(pref) * conj(z);
    const S psi_x = pref * ((c1 - 2.0 * c2) + c2 * x2) * (1.0 / (2.0 * std::sqrt(c2) * std::sqrt(prm.D)));

    return {phi_z.re, phi_z.im, phi_x, psi_z.re, psi_z.im, psi_x};
}

/// Lawlor cylinder parametrization (F_t, G_t), generic scalar.
template <class S>
std::pair<Cx<S>, Cx<S>> lawlor_core(const Params& prm, const FamilyParam& fp, const S& s1, const S& s2) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    const double r = std::sqrt(prm.D);
    const S ch = cosh(s1), sh = sinh(s1);
    const Cx<S> e_plus(cos(s2), sin(s2));
    const Cx<S> F = Cx<S>(S(r * fp.s_t) * ch, S(r * fp.c_t) * sh) * e_plus;
    const Cx<S> G = Cx<S>(S(r * fp.c_t) * ch, S(r * fp.s_t) * sh) * conj(e_plus);
    return {F, G};
}

/// hat Phi_t with the adopted corrective 1/4 scale on (F_t, G_t).
template <class S>
std::array<S, 6> minimal_hat_core(const Params& prm, const FamilyParam& fp, const S& s1, const S& s2) {
    auto [F, G] = lawlor_core(prm, fp, s1, s2);
    return {F.re * 0.25, F.im * 0.25, S(-std::sqrt(prm.c1) / 4.0),
            G.re * 0.25, G.im * 0.25, S(-std::sqrt(prm.c2) / 4.0)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Value-level catalog operations
// ---------------------------------------------------------------------------

inline void require_on_sphere(const SpherePoint& sp) {
    if (sp.sphere_defect() > 1e-12)
        throw std::domain_error("input point is off the unit sphere");
}

inline ProductPoint phi_family(const Params& prm, double t, const SpherePoint& sp) {
    require_on_sphere(sp);
    const FamilyParam fp(t);
    detail::check_family_denominator(prm, fp);
    const auto v = detail::phi_family_core<double>(prm, fp, {sp.z.real(), sp.z.imag()}, sp.x);
    return ProductPoint{{v[0], v[1], v[2], v[3], v[4], v[5]}};
}

inline ProductPoint phi_zero(const Params& prm, const SpherePoint& sp) {
    require_on_sphere(sp);
    const auto v = detail::phi_zero_core<double>(prm, {sp.z.real(), sp.z.imag()}, sp.x);
    return ProductPoint{{v[0], v[1], v[2], v[3], v[4], v[5]}};
}

inline std::pair<std::complex<double>, std::complex<double>>
lawlor_chart(const Params& prm, double t, double s1, double s2) {
    const FamilyParam fp(t);
    const auto [F, G] = detail::lawlor_core<double>(prm, fp, s1, s2);
    return {{F.re, F.im}, {G.re, G.im}};
}

inline Vec6 minimal_hat(const Params& prm, double t, double s1, double s2) {
    const FamilyParam fp(t);
    const auto v = detail::minimal_hat_core<double>(prm, fp, s1, s2);
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

/// w -> center + w/|w|^2.
inline Vec6 invert_at(const Vec6& center, const Vec6& w) {
    const double n2 = dot(w, w);
    if (n2 < 1e-28) throw std::domain_error("invert_at: |w| too small");
    Vec6 out;
    for (int i = 0; i < 6; ++i) out[i] = center[i] + w[i] / n2;
    return out;
}

/// The Hamiltonian potential f whose gradient drives the variation Phi_t at t=0.
inline double hamiltonian_potential(const Params& prm, const SpherePoint& sp) {
    require_on_sphere(sp);
    const double x = sp.x;
    return 2.0 * prm.D / (prm.c1 * prm.c2) *
           (prm.D * x / (prm.c1 - prm.c2 * x * x) -
            prm.S / std::sqrt(prm.c1 * prm.c2) * std::atanh(std::sqrt(prm.c2 / prm.c1) * x));
}

/// 2-jet of the potential pulled back through the cylinder chart (f depends on
/// the sphere height x = tanh s1 only).
inline Jet2 hamiltonian_potential_jet_cyl(const Params& prm, double s1) {
    const Jet2 x = tanh(Jet2::var1(s1));
    const Jet2 inner = prm.D * x / (prm.c1 - prm.c2 * x * x) -
                       (prm.S / std::sqrt(prm.c1 * prm.c2)) * atanh(std::sqrt(prm.c2 / prm.c1) * x);
    return (2.0 * prm.D / (prm.c1 * prm.c2)) * inner;
}

/// Parameter where the closed area formula changes branch.
inline double area_branch_t(const Params& prm) { return 0.5 * std::acosh(prm.S / prm.D); }

/// Closed form for the area A(t) of the metric induced by Phi_t. Both branch
/// displays cancel catastrophically as d -> s, and they share the expansion
///   A = 32 pi / (s+d)^2 [ (s+2d) - 2d^2/(s+d) * sum_j w^j/(2j+3) ],
/// w = (s-d)/(s+d) (the artanh and arctan series coincide after w flips
/// sign), so a narrow window around the branch point is evaluated by the
/// series; branch selection stays an exact comparison outside it.
inline double closed_area(const Params& prm, double t) {
    const double s = prm.S;
    const double d = prm.D * std::cosh(2.0 * t);
    const double w = (s - d) / (s + d);
    if (std::abs(w) <= 1e-3) {
        double series = 0.0, wj = 1.0;
        for (int j = 0; j < 12; ++j) {
            series += wj / (2.0 * j + 3.0);
            wj *= w;
        }
        return 32.0 * M_PI / ((s + d) * (s + d)) * ((s + 2.0 * d) - 2.0 * d * d / (s + d) * series);
    }
    if (d < s) {
        const double q = s * s - d * d;
        return 32.0 * M_PI / q * (s - 2.0 * d * d / std::sqrt(q) * std::atanh(std::sqrt((s - d) / (s + d))));
    }
    const double q = s * s - d * d;  // negative
    return 32.0 * M_PI / q * (s - 2.0 * d * d / std::sqrt(-q) * std::atan(std::sqrt((d - s) / (d + s))));
}

/// Closed form for div JH_t at (z, x); identically zero iff t = 0.
inline double closed_div_jh(const Params& prm, double t, const SpherePoint& sp) {
    require_on_sphere(sp);
    return (prm.c2 - prm.c1) * std::sinh(2.0 * t) * sp.x / (2.0 * (1.0 + sp.x * sp.x));
}

// ---------------------------------------------------------------------------
// Jet-evaluable chart maps
// ---------------------------------------------------------------------------

/// Phi_t over either chart.
class PhiFamilyMap final : public ChartMap {
  public:
    PhiFamilyMap(const Params& prm, double t, Chart chart)
        : prm_(prm), fp_(t), chart_(chart) {
        detail::check_family_denominator(prm_, fp_);
    }

    Jet6 jet(double u1, double u2) const override {
        const auto sc = jetchart::seeds(chart_, u1, u2);
        return detail::phi_family_core<Jet2>(prm_, fp_, sc.z, sc.x);
    }
    Chart chart() const override { return chart_; }
    double t() const { return fp_.t; }

  private:
    Params prm_;
    FamilyParam fp_;
    Chart chart_;
};

/// Phi_0 over either chart (independent coding; must agree with PhiFamilyMap at t=0).
class PhiZeroMap final : public ChartMap {
  public:
    PhiZeroMap(const Params& prm, Chart chart) : prm_(prm), chart_(chart) {}

    Jet6 jet(double u1, double u2) const override {
        const auto sc = jetchart::seeds(chart_, u1, u2);
        return detail::phi_zero_core<Jet2>(prm_, sc.z, sc.x);
    }
    Chart chart() const override { return chart_; }

  private:
    Params prm_;
    Chart chart_;
};

/// hat Phi_t over the cylinder chart. Image lies in R^6, not on S2xS2.
class MinimalHatMap final : public ChartMap {
  public:
    MinimalHatMap(const Params& prm, double t) : prm_(prm), fp_(t) {}

    Jet6 jet(double u1, double u2) const override {
        return detail::minimal_hat_core<Jet2>(prm_, fp_, Jet2::var1(u1), Jet2::var2(u2));
    }
    Chart chart() const override { return Chart::Cylinder; }

  private:
    Params prm_;
    FamilyParam fp_;
};

/// Latitude circle x latitude circle: the Lagrangian product-torus fixture
/// with C == 0 and parallel mean curvature. Chart variables are (theta1, theta2).
class ProductTorusMap final : public ChartMap {
  public:
    ProductTorusMap(const Params& prm, double x1, double x2) : x1_(x1), x2_(x2) {
        r1_ = 1.0 / prm.c1 - x1 * x1;
        r2_ = 1.0 / prm.c2 - x2 * x2;
        if (r1_ <= 0.0 || r2_ <= 0.0)
            throw std::domain_error("product_torus: latitude circle degenerates");
        r1_ = std::sqrt(r1_);
        r2_ = std::sqrt(r2_);
    }

    Jet6 jet(double u1, double u2) const override {
        const Jet2 th1 = Jet2::var1(u1), th2 = Jet2::var2(u2);
        return {r1_ * cos(th1), r1_ * sin(th1), Jet2(x1_),
                r2_ * cos(th2), r2_ * sin(th2), Jet2(x2_)};
    }
    Chart chart() const override { return Chart::Cylinder; }

  private:
    double x1_, x2_, r1_, r2_;
};

inline ProductTorusMap product_torus(const Params& prm, double x1, double x2) {
    return ProductTorusMap(prm, x1, x2);
}

/// S^2_c x {q2}: the round-sphere fixture used to validate the intrinsic
/// curvature and divergence operators. Chart variables are the unit-sphere
/// (theta, x), scaled onto S^2_c.
class RoundSphereMap final : public ChartMap {
  public:
    RoundSphereMap(const Params& prm, double c) : c_(c), q2_(1.0 / std::sqrt(prm.c2)) {}

    Jet6 jet(double u1, double u2) const override {
        const Jet2 theta = Jet2::var1(u1), x = Jet2::var2(u2);
        const double r = 1.0 / std::sqrt(c_);
        const Jet2 rad = r * sqrt(1.0 - x * x);
        return {rad * cos(theta), rad * sin(theta), r * x,
                Jet2(0.0), Jet2(0.0), Jet2(q2_)};
    }
    Chart chart() const override { return Chart::Sphere; }

  private:
    double c_;
    double q2_;
};

}  // namespace lagsphere

#endif
