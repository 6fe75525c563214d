#pragma once

#include <cmath>
#include <numbers>

namespace escape {

/// Continuous position in cell units. Cell (x, y) has its center at (x, y).
struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Unit vector for a heading in degrees: 0 = +x (east), 90 = +y (down on screen).
inline Vec2 heading(double deg) { return {std::cos(deg2rad(deg)), std::sin(deg2rad(deg))}; }

/// Wraps into [0, 360).
inline double normalize_degrees(double deg)
{
  double d = std::fmod(deg, 360.0);
  if (d < 0.0)
    d += 360.0;
  if (d >= 360.0)
    d = 0.0;
  return d;
}

}  // namespace escape
