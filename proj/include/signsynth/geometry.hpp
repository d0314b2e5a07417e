#pragma once

#include <algorithm>
#include <string>

#include "signsynth/errors.hpp"

namespace signsynth {

// Axis-aligned box, pixel coordinates, top-left origin.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int x2() const { return x + w; }
  int y2() const { return y + h; }
  int max_side() const { return std::max(w, h); }
  long long area() const { return static_cast<long long>(w) * h; }

  bool valid() const { return w > 0 && h > 0; }

  bool inside(int frame_w, int frame_h) const {
    return x >= 0 && y >= 0 && x2() <= frame_w && y2() <= frame_h;
  }

  // Boxes must fit their frame; out-of-frame geometry is an error, never a
  // silent clamp.
  void require_inside(int frame_w, int frame_h) const {
    if (!valid())
      throw geometry_error("degenerate box " + to_string());
    if (!inside(frame_w, frame_h))
      throw geometry_error("box " + to_string() + " outside frame " + std::to_string(frame_w) + "x" + std::to_string(frame_h));
  }

  std::string to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(w) + "," + std::to_string(h) + ")";
  }

  bool operator==(const BBox& o) const { return x == o.x && y == o.y && w == o.w && h == o.h; }
};

inline long long intersection_area(const BBox& a, const BBox& b) {
  const int ix = std::max(0, std::min(a.x2(), b.x2()) - std::max(a.x, b.x));
  const int iy = std::max(0, std::min(a.y2(), b.y2()) - std::max(a.y, b.y));
  return static_cast<long long>(ix) * iy;
}

inline double iou(const BBox& a, const BBox& b) {
  const long long inter = intersection_area(a, b);
  if (inter == 0) return 0.0;
  const long long uni = a.area() + b.area() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace signsynth
