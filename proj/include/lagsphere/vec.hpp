#ifndef LAGSPHERE_VEC_HPP
#define LAGSPHERE_VEC_HPP

#include <array>
#include <cmath>
#include <complex>

namespace lagsphere {

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;
using CVec6 = std::array<std::complex<double>, 6>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double dot(const Vec6& a, const Vec6& b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

/// Complex-bilinear extension of the Euclidean inner product (no conjugation).
inline std::complex<double> dot(const CVec6& a, const CVec6& b) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

inline std::complex<double> dot(const Vec6& a, const CVec6& b) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec6& a) { return std::sqrt(dot(a, a)); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Hermitian norm, used only to measure residual magnitudes of complex vectors.
inline double hnorm(const CVec6& a) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += std::norm(a[i]);
    return std::sqrt(s);
}

inline Vec6 operator+(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec6 operator-(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec6 operator*(double c, const Vec6& a) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = c * a[i];
    return r;
}

inline CVec6 operator+(const CVec6& a, const CVec6& b) {
    CVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}

inline CVec6 operator-(const CVec6& a, const CVec6& b) {
    CVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
    return r;
}

inline CVec6 operator*(std::complex<double> c, const CVec6& a) {
    CVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = c * a[i];
    return r;
}

inline CVec6 conj(const CVec6& a) {
    CVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = std::conj(a[i]);
    return r;
}

inline CVec6 complexify(const Vec6& a) {
    CVec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i];
    return r;
}

}  // namespace lagsphere

#endif
