// Fixed-size 2- and 4-dimensional vectors and matrices used throughout.
// Conventions: Mat2 row-major, m[r][c]; phase-space order (q1, q2, p1, p2);
// J0 is the quarter turn [[0,-1],[1,0]], so J0*q = (-q2, q1).
#pragma once

#include <array>
#include <cmath>

namespace rotorsym {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }
inline double norm_inf(Vec2 v) { return std::max(std::abs(v.x), std::abs(v.y)); }

// Quarter-turn matrix applied to a vector: J0*v.
inline Vec2 j0(Vec2 v) { return {-v.y, v.x}; }
// Clockwise quarter turn: -J0.
inline Vec2 j0_bar(Vec2 v) { return {v.y, -v.x}; }
// Rotation by angle theta (counterclockwise).
inline Vec2 rotate(double theta, Vec2 v) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

struct Mat2 {
    // m[r][c]
    std::array<std::array<double, 2>, 2> m{{{0.0, 0.0}, {0.0, 0.0}}};

    static Mat2 identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

    Vec2 apply(Vec2 v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    Vec2 apply_transpose(Vec2 v) const {
        return {m[0][0] * v.x + m[1][0] * v.y, m[0][1] * v.x + m[1][1] * v.y};
    }
    Mat2 operator+(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat2 scaled(double s) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = s * m[i][j];
        return r;
    }
};

struct Vec4 {
    std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    Vec4() = default;
    Vec4(double a, double b, double c, double d) : v{a, b, c, d} {}
    Vec4(Vec2 q, Vec2 p) : v{q.x, q.y, p.x, p.y} {}

    Vec2 q() const { return {v[0], v[1]}; }
    Vec2 p() const { return {v[2], v[3]}; }

    Vec4 operator+(const Vec4& o) const {
        return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2], v[3] + o.v[3]};
    }
    Vec4 operator-(const Vec4& o) const {
        return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2], v[3] - o.v[3]};
    }
    Vec4& operator+=(const Vec4& o) {
        for (int i = 0; i < 4; ++i) v[i] += o.v[i];
        return *this;
    }
};

inline Vec4 operator*(double s, const Vec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }
inline double norm_inf(const Vec4& a) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(a[i]));
    return r;
}

struct Mat4 {
    // m[r][c]
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
        return r;
    }

    Vec4 apply(const Vec4& v) const {
        Vec4 r;
        for (int i = 0; i < 4; ++i) {
            double s = 0.0;
            for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
            r[i] = s;
        }
        return r;
    }
    Mat4 multiply(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    Mat4 operator-(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    Mat4 operator+(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
};

// Largest absolute entry.
inline double norm_inf(const Mat4& a) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a.m[i][j]));
    return r;
}

} // namespace rotorsym
