#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace wakevec {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

// Lab-frame conventions shared by every module: the vertical axis is +y
// (up-positive) and both the propeller tilt and the deflector exit angle
// rotate in the x-y plane. Angles live in degrees in configs and are
// converted to radians exactly once at load.
struct FrameConvention {
    static constexpr Vec3 vertical_axis() { return {0.0, 1.0, 0.0}; }
};

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Q_z(theta) applied to a vector in the tilt plane.
inline Vec2 rotate2d(double theta_rad, const Vec2& v) {
    const double c = std::cos(theta_rad);
    const double s = std::sin(theta_rad);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Same rotation acting on a lab-frame 3-vector; z is untouched.
inline Vec3 rotate_tilt_plane(double theta_rad, const Vec3& v) {
    const Vec2 r = rotate2d(theta_rad, {v.x, v.y});
    return {r.x, r.y, v.z};
}

struct AngleOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Propeller thrust axis for tilt phi, measured from +e_y toward +x.
// Thrust reaction on the frame is T_p * axis; the jet leaves along -axis.
inline Vec3 disk_axis(double phi_rad) {
    if (phi_rad < 0.0 || phi_rad > kPi / 2.0 + 1e-12)
        throw AngleOutOfRange("disk_axis: tilt angle outside [0, 90] degrees");
    return {std::sin(phi_rad), std::cos(phi_rad), 0.0};
}

struct Box3 {
    Vec3 lo;
    Vec3 hi;

    bool contains(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
               p.z >= lo.z && p.z <= hi.z;
    }
    Box3 inflated(double d) const {
        return {{lo.x - d, lo.y - d, lo.z - d}, {hi.x + d, hi.y + d, hi.z + d}};
    }
    void absorb(const Vec3& p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
};

}  // namespace wakevec
