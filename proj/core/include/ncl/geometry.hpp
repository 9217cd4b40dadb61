#pragma once

#include <cmath>
#include <vector>

#include "ncl/planar_field.hpp"

namespace ncl {

inline DVec2 operator+(const DVec2& a, const DVec2& b) {
  return {a[0] + b[0], a[1] + b[1]};
}
inline DVec2 operator-(const DVec2& a, const DVec2& b) {
  return {a[0] - b[0], a[1] - b[1]};
}
inline DVec2 operator*(double s, const DVec2& a) { return {s * a[0], s * a[1]}; }
inline double dot(const DVec2& a, const DVec2& b) {
  return a[0] * b[0] + a[1] * b[1];
}
inline double norm2(const DVec2& a) { return dot(a, a); }
inline double norm(const DVec2& a) { return std::sqrt(norm2(a)); }
inline double dist(const DVec2& a, const DVec2& b) { return norm(a - b); }

inline double point_segment_dist2(const DVec2& p, const DVec2& a,
                                  const DVec2& b) {
  const DVec2 ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0) return norm2(p - a);
  double t = dot(p - a, ab) / len2;
  t = std::max(0.0, std::min(1.0, t));
  return norm2(p - (a + t * ab));
}

inline double point_segment_dist(const DVec2& p, const DVec2& a,
                                 const DVec2& b) {
  return std::sqrt(point_segment_dist2(p, a, b));
}

inline double point_polyline_dist2(const DVec2& p,
                                   const std::vector<DVec2>& poly,
                                   bool closed) {
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  if (poly.size() == 1) return norm2(p - poly[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    best = std::min(best, point_segment_dist2(p, poly[i], poly[i + 1]));
  if (closed)
    best = std::min(best, point_segment_dist2(p, poly.back(), poly.front()));
  return best;
}

inline double point_polyline_dist(const DVec2& p, const std::vector<DVec2>& poly,
                                  bool closed) {
  return std::sqrt(point_polyline_dist2(p, poly, closed));
}

}  // namespace ncl
