/*
 * Copyright 2026 The Gapnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GAPNAV_GEOMETRY_H_
#define GAPNAV_GEOMETRY_H_

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gapnav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double Distance(Vec2 a, Vec2 b) { return Norm(a - b); }

inline constexpr double DegToRad(double deg) {
  return deg * (std::numbers::pi / 180.0);
}
inline constexpr double RadToDeg(double rad) {
  return rad * (180.0 / std::numbers::pi);
}

// Maps any finite angle into [0, 360). Angles already in range are returned
// unchanged, bit for bit.
double NormalizeDegrees(double deg);

// Signed difference `to - from` wrapped into (-180, 180].
double WrapDegrees(double deg);

// Unsigned angular distance in [0, 180].
double AngularDistanceDegrees(double a, double b);

// Unit vector at `deg` measured counter-clockwise from +x.
inline Vec2 UnitVector(double deg) {
  const double rad = DegToRad(deg);
  return {std::cos(rad), std::sin(rad)};
}

// Robot pose: position in meters, heading in degrees within [0, 360).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta_deg = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

inline Pose MakePose(double x, double y, double theta_deg) {
  return {x, y, NormalizeDegrees(theta_deg)};
}

// Axis-aligned closed box.
struct Box {
  Vec2 min;
  Vec2 max;
};

// Euclidean distance from `p` to the closed box; zero inside.
inline double DistanceToBox(Vec2 p, const Box& box) {
  const double dx = std::max({box.min.x - p.x, 0.0, p.x - box.max.x});
  const double dy = std::max({box.min.y - p.y, 0.0, p.y - box.max.y});
  return std::hypot(dx, dy);
}

}  // namespace gapnav

#endif  // GAPNAV_GEOMETRY_H_
