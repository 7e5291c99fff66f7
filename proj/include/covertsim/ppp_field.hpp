#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covertsim/geometry.hpp"
#include "covertsim/rng.hpp"

namespace covertsim::ppp {

// One sampled set of interferer locations.
struct FieldRealization {
  std::vector<Vec2> points;
  double intensity = 0.0;      // nodes per square meter
  Region region{};
  std::uint64_t seed_tag = 0;  // substream that produced the points
};

// Homogeneous Poisson point process on the region: the point count is
// Poisson(intensity * area), positions i.i.d. uniform. Deterministic given
// the stream.
FieldRealization sample_field(double intensity, const Region& region, rng::Stream& stream);

// Minimum Euclidean distance from `query` to any point; empty when the field
// has no interferer.
std::optional<double> nearest_interferer_distance(const FieldRealization& field, Vec2 query);

// Nearest-neighbor distance distribution on the plane: P{r1 < d} = 1 - exp(-pi lambda d^2).
double nearest_distance_cdf(double d, double intensity);

}  // namespace covertsim::ppp
