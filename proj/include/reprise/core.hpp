#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace reprise {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Motor = std::array<double, 4>;

constexpr int kSensorDim = 2;
constexpr int kMotorDim = 4;
constexpr int kContextDim = 3;

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

inline double norm(const Vec2& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1]); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace reprise
