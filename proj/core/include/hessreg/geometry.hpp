#ifndef HESSREG_GEOMETRY_HPP
#define HESSREG_GEOMETRY_HPP

#include <array>
#include <cmath>

namespace hessreg {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline bool all_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    static Mat3 identity() {
        Mat3 e;
        e(0, 0) = e(1, 1) = e(2, 2) = 1.0;
        return e;
    }
    static Mat3 diagonal(const Vec3& d) {
        Mat3 e;
        e(0, 0) = d.x;
        e(1, 1) = d.y;
        e(2, 2) = d.z;
        return e;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(j, i);
    return r;
}

inline double determinant(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Inverse via the adjugate; caller is responsible for checking the determinant.
inline Mat3 inverse(const Mat3& a, double det) {
    Mat3 r;
    const double id = 1.0 / det;
    r(0, 0) = id * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
    r(0, 1) = id * (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2));
    r(0, 2) = id * (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1));
    r(1, 0) = id * (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2));
    r(1, 1) = id * (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0));
    r(1, 2) = id * (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2));
    r(2, 0) = id * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    r(2, 1) = id * (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1));
    r(2, 2) = id * (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    return r;
}

// Symmetric 3x3 matrix stored as its 6 unique components.
struct Sym3 {
    double xx = 0.0, yy = 0.0, zz = 0.0, xy = 0.0, xz = 0.0, yz = 0.0;

    Mat3 to_mat3() const {
        Mat3 a;
        a(0, 0) = xx;
        a(1, 1) = yy;
        a(2, 2) = zz;
        a(0, 1) = a(1, 0) = xy;
        a(0, 2) = a(2, 0) = xz;
        a(1, 2) = a(2, 1) = yz;
        return a;
    }

    static Sym3 from_mat3_symmetrized(const Mat3& a) {
        return {a(0, 0), a(1, 1), a(2, 2),
                0.5 * (a(0, 1) + a(1, 0)),
                0.5 * (a(0, 2) + a(2, 0)),
                0.5 * (a(1, 2) + a(2, 1))};
    }

    static Sym3 outer(const Vec3& v) {
        return {v.x * v.x, v.y * v.y, v.z * v.z, v.x * v.y, v.x * v.z, v.y * v.z};
    }
};

inline Sym3 operator+(const Sym3& a, const Sym3& b) {
    return {a.xx + b.xx, a.yy + b.yy, a.zz + b.zz, a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
}
inline Sym3 operator-(const Sym3& a, const Sym3& b) {
    return {a.xx - b.xx, a.yy - b.yy, a.zz - b.zz, a.xy - b.xy, a.xz - b.xz, a.yz - b.yz};
}
inline Sym3 operator*(double s, const Sym3& a) {
    return {s * a.xx, s * a.yy, s * a.zz, s * a.xy, s * a.xz, s * a.yz};
}

// Frobenius inner product over the full 3x3 matrices (off-diagonals count twice).
inline double frobenius_dot(const Sym3& a, const Sym3& b) {
    return a.xx * b.xx + a.yy * b.yy + a.zz * b.zz +
           2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

inline double frobenius_norm2(const Sym3& a) { return frobenius_dot(a, a); }
inline double frobenius_norm(const Sym3& a) { return std::sqrt(frobenius_norm2(a)); }

// v' S v
inline double quadratic_form(const Sym3& s, const Vec3& v) {
    return s.xx * v.x * v.x + s.yy * v.y * v.y + s.zz * v.z * v.z +
           2.0 * (s.xy * v.x * v.y + s.xz * v.x * v.z + s.yz * v.y * v.z);
}

inline bool all_finite(const Sym3& s) {
    return std::isfinite(s.xx) && std::isfinite(s.yy) && std::isfinite(s.zz) &&
           std::isfinite(s.xy) && std::isfinite(s.xz) && std::isfinite(s.yz);
}

} // namespace hessreg

#endif
