#pragma once

#include <cmath>
#include <stdexcept>

namespace covertsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Vec2 a, Vec2 b) { return std::sqrt(squared_distance(a, b)); }

// Square observation window. The reference receiver defaults to its center.
struct Region {
  double side_length = 100.0;
  Vec2 center{};

  Region() = default;
  explicit Region(double side, Vec2 c = {}) : side_length(side), center(c) {
    if (!(side_length > 0.0)) throw std::invalid_argument("Region side_length must be > 0");
  }

  double area() const { return side_length * side_length; }

  bool contains(Vec2 p) const {
    const double h = side_length / 2.0;
    return p.x >= center.x - h && p.x <= center.x + h && p.y >= center.y - h &&
           p.y <= center.y + h;
  }
};

}  // namespace covertsim
