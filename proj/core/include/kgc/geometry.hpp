#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace kgc {

using complex = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double a) const { return {a * x, a * y}; }
};

inline Vec2 operator*(double a, Vec2 v) { return {a * v.x, a * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

/// Symmetric 2x2 matrix (only the upper triangle is stored).
struct Mat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double det() const { return xx * yy - xy * xy; }
    double trace() const { return xx + yy; }

    /// Eigenvalues, ascending.
    std::pair<double, double> eigenvalues() const {
        const double mean = 0.5 * (xx + yy);
        const double disc = std::hypot(0.5 * (xx - yy), xy);
        return {mean - disc, mean + disc};
    }

    /// Signature as (#positive, #negative) eigenvalue counts; zeros counted in neither.
    std::pair<int, int> signature(double tol = 0.0) const {
        auto [lo, hi] = eigenvalues();
        int pos = 0, neg = 0;
        if (lo > tol) ++pos; else if (lo < -tol) ++neg;
        if (hi > tol) ++pos; else if (hi < -tol) ++neg;
        return {pos, neg};
    }

    Vec2 apply(Vec2 v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
};

inline Mat2 operator+(Mat2 a, Mat2 b) { return {a.xx + b.xx, a.xy + b.xy, a.yy + b.yy}; }
inline Mat2 operator*(double a, Mat2 m) { return {a * m.xx, a * m.xy, a * m.yy}; }

/// Rank-one symmetric update a * v v^T.
inline Mat2 outer(double a, Vec2 v) { return {a * v.x * v.x, a * v.x * v.y, a * v.y * v.y}; }

}  // namespace kgc
