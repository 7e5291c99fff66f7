#include "covertsim/ppp_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covertsim::ppp {

FieldRealization sample_field(double intensity, const Region& region, rng::Stream& stream) {
  if (!(intensity >= 0.0)) throw std::invalid_argument("sample_field: intensity must be >= 0");

  FieldRealization field;
  field.intensity = intensity;
  field.region = region;
  field.seed_tag = stream.tag();

  const std::uint64_t count = stream.poisson(intensity * region.area());
  field.points.reserve(count);
  const double side = region.side_length;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = region.center.x + side * (stream.uniform() - 0.5);
    const double y = region.center.y + side * (stream.uniform() - 0.5);
    field.points.push_back({x, y});
  }
  return field;
}

std::optional<double> nearest_interferer_distance(const FieldRealization& field, Vec2 query) {
  if (field.points.empty()) return std::nullopt;
  double best = squared_distance(field.points.front(), query);
  for (const Vec2& p : field.points) {
    const double d2 = squared_distance(p, query);
    if (d2 < best) best = d2;
  }
  return std::sqrt(best);
}

double nearest_distance_cdf(double d, double intensity) {
  if (!(d >= 0.0)) throw std::invalid_argument("nearest_distance_cdf: d must be >= 0");
  if (!(intensity >= 0.0))
    throw std::invalid_argument("nearest_distance_cdf: intensity must be >= 0");
  return -std::expm1(-std::numbers::pi * intensity * d * d);
}

}  // namespace covertsim::ppp
