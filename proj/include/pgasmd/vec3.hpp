#ifndef PGASMD_VEC3_HPP
#define PGASMD_VEC3_HPP

#include <cmath>

namespace pgasmd {

/// Cartesian triple in reduced Lennard-Jones units.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm2(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Nearest periodic image of a displacement in a box with edge lengths `box`.
/// Ties at exactly half a box length round away from zero in both directions,
/// which keeps the mapping antisymmetric.
inline Vec3 minimum_image(Vec3 dr, const Vec3& box) {
    dr.x -= box.x * std::round(dr.x / box.x);
    dr.y -= box.y * std::round(dr.y / box.y);
    dr.z -= box.z * std::round(dr.z / box.z);
    return dr;
}

/// Wrap a coordinate into [0, length). fmod is exact, so the only adjustment
/// needed is the sign fixup; an addition that rounds up to `length` maps to 0.
inline double wrap_coordinate(double x, double length) {
    x = std::fmod(x, length);
    if (x < 0.0) x += length;
    if (x >= length) x = 0.0;
    return x;
}

} // namespace pgasmd

#endif
