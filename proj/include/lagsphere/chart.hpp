#ifndef LAGSPHERE_CHART_HPP
#define LAGSPHERE_CHART_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lagsphere/jet.hpp"
#include "lagsphere/vec.hpp"

namespace lagsphere {

/// A point of the unit sphere S^2, written as (z, x) with |z|^2 + x^2 = 1.
struct SpherePoint {
    std::complex<double> z;
    double x;

    double sphere_defect() const { return std::abs(std::norm(z) + x * x - 1.0); }
};

/// The two charts used by the engine.
///  - Cylinder: (s1, s2), conformal for every catalog immersion; identities live here.
///  - Sphere:   (theta, x) with z = sqrt(1-x^2) e^{i theta}; quadrature lives here.
enum class Chart { Cylinder, Sphere };

struct ChartPoint {
    double u1;
    double u2;
};

/// (s1, s2) -> (e^{i s2}/cosh s1, tanh s1). Lands on the unit sphere exactly.
inline SpherePoint cyl_to_sphere(double s1, double s2) {
    const double sech = 1.0 / std::cosh(s1);
    return {std::complex<double>(std::cos(s2) * sech, std::sin(s2) * sech), std::tanh(s1)};
}

/// Inverse of cyl_to_sphere where defined (|x| < 1).
inline ChartPoint sphere_to_cyl(const SpherePoint& sp) {
    if (std::abs(sp.x) >= 1.0) throw std::domain_error("sphere_to_cyl: |x| must be < 1");
    return {std::atanh(sp.x), std::arg(sp.z)};
}

inline SpherePoint sphere_chart_point(double theta, double x) {
    return {std::sqrt(std::max(0.0, 1.0 - x * x)) * std::complex<double>(std::cos(theta), std::sin(theta)), x};
}

/// An abstract twice-differentiable map from a 2D chart into R^6, evaluable on
/// exact 2-jets.
class ChartMap {
  public:
    virtual ~ChartMap() = default;
    virtual Jet6 jet(double u1, double u2) const = 0;
    virtual Chart chart() const = 0;

    Vec6 value(double u1, double u2) const {
        const Jet6 j = jet(u1, u2);
        return {j[0].v, j[1].v, j[2].v, j[3].v, j[4].v, j[5].v};
    }
};

namespace jetchart {

/// Jet seeds of the unit-sphere coordinates (z, x) in the given chart.
struct SphereCoords {
    Cx<Jet2> z;
    Jet2 x;
};

inline SphereCoords seeds(Chart chart, double u1, double u2) {
    if (chart == Chart::Cylinder) {
        const Jet2 s1 = Jet2::var1(u1), s2 = Jet2::var2(u2);
        const Jet2 sech = 1.0 / cosh(s1);
        return {Cx<Jet2>(cos(s2) * sech, sin(s2) * sech), tanh(s1)};
    }
    if (std::abs(u2) >= 1.0) throw std::domain_error("sphere chart: |x| >= 1 (pole)");
    const Jet2 theta = Jet2::var1(u1), x = Jet2::var2(u2);
    const Jet2 r = sqrt(1.0 - x * x);
    return {Cx<Jet2>(r * cos(theta), r * sin(theta)), x};
}

}  // namespace jetchart

}  // namespace lagsphere

#endif
