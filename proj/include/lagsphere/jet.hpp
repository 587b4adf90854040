#ifndef LAGSPHERE_JET_HPP
#define LAGSPHERE_JET_HPP

/// Exact truncated second-order Taylor arithmetic in two chart variables.
/// Closed-form maps written against this type yield their exact first and
/// second partial derivatives (no truncation error), which is what makes the
/// pointwise identity suites jet-exact.

#include <array>
#include <cmath>
#include <stdexcept>

namespace lagsphere {

struct Jet2 {
    double v = 0.0;    // value
    double d1 = 0.0;   // d/du1
    double d2 = 0.0;   // d/du2
    double d11 = 0.0;  // d2/du1^2
    double d12 = 0.0;  // d2/du1 du2
    double d22 = 0.0;  // d2/du2^2

    Jet2() = default;
    Jet2(double value) : v(value) {}
    Jet2(double value, double g1, double g2, double h11, double h12, double h22)
        : v(value), d1(g1), d2(g2), d11(h11), d12(h12), d22(h22) {}

    /// Seeds for the two chart variables at a point.
    static Jet2 var1(double a) { return {a, 1.0, 0.0, 0.0, 0.0, 0.0}; }
    static Jet2 var2(double b) { return {b, 0.0, 1.0, 0.0, 0.0, 0.0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d11 + b.d11, a.d12 + b.d12, a.d22 + b.d22};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d11 - b.d11, a.d12 - b.d12, a.d22 - b.d22};
}
inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2, -a.d11, -a.d12, -a.d22}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + a.v * b.d2,
            a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11,
            a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12,
            a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22};
}

inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2(c); }
inline Jet2 operator+(double c, const Jet2& a) { return a + Jet2(c); }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2(c) - a; }
inline Jet2 operator*(const Jet2& a, double c) {
    return {a.v * c, a.d1 * c, a.d2 * c, a.d11 * c, a.d12 * c, a.d22 * c};
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

/// Composition with a scalar function given by (f(v), f'(v), f''(v)).
inline Jet2 compose(const Jet2& a, double f, double fp, double fpp) {
    return {f,
            fp * a.d1,
            fp * a.d2,
            fpp * a.d1 * a.d1 + fp * a.d11,
            fpp * a.d1 * a.d2 + fp * a.d12,
            fpp * a.d2 * a.d2 + fp * a.d22};
}

inline Jet2 inv(const Jet2& a) {
    const double iv = 1.0 / a.v;
    return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return inv(a) * c; }

inline Jet2 sqrt(const Jet2& a) {
    const double s = std::sqrt(a.v);
    return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e);
}
inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c);
}
inline Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, s, c, s);
}
inline Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, c, s, c);
}
inline Jet2 tanh(const Jet2& a) {
    const double t = std::tanh(a.v), sech2 = 1.0 - t * t;
    return compose(a, t, sech2, -2.0 * t * sech2);
}
inline Jet2 atan(const Jet2& a) {
    const double d = 1.0 + a.v * a.v;
    return compose(a, std::atan(a.v), 1.0 / d, -2.0 * a.v / (d * d));
}
inline Jet2 atanh(const Jet2& a) {
    const double d = 1.0 - a.v * a.v;
    return compose(a, std::atanh(a.v), 1.0 / d, 2.0 * a.v / (d * d));
}
inline Jet2 log(const Jet2& a) {
    const double iv = 1.0 / a.v;
    return compose(a, std::log(a.v), iv, -iv * iv);
}

/// Complex numbers over a generic scalar (double for plain evaluation, Jet2
/// for exact jets). The immersion formulas are written once against this.
template <class S>
struct Cx {
    S re{}, im{};

    Cx() = default;
    Cx(const S& r) : re(r) {}
    Cx(const S& r, const S& i) : re(r), im(i) {}
};

template <class S> Cx<S> operator+(const Cx<S>& a, const Cx<S>& b) { return {a.re + b.re, a.im + b.im}; }
template <class S> Cx<S> operator-(const Cx<S>& a, const Cx<S>& b) { return {a.re - b.re, a.im - b.im}; }
template <class S> Cx<S> operator*(const Cx<S>& a, const Cx<S>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class S> Cx<S> operator*(const S& c, const Cx<S>& a) { return {c * a.re, c * a.im}; }
template <class S> Cx<S> operator*(const Cx<S>& a, const S& c) { return {a.re * c, a.im * c}; }
template <class S> Cx<S> conj(const Cx<S>& a) { return {a.re, -a.im}; }
template <class S> Cx<S> times_i(const Cx<S>& a) { return {-a.im, a.re}; }

/// Value, gradient, and Hessian of a six-component map: the 2-jet of a chart map.
using Jet6 = std::array<Jet2, 6>;

}  // namespace lagsphere

#endif
