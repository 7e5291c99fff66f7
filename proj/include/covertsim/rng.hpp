#pragma once

#include <cstdint>

namespace covertsim::rng {

// SplitMix64 finalizer. Used to expand seed material into engine state.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Well-known substream purposes. Every random draw in the project comes from
// a Stream(master_seed, purpose, index); the (purpose, index) pair names the
// substream, so a trial scheduled on any thread sees the same draws.
namespace purpose {
inline constexpr std::uint64_t field = 1;
inline constexpr std::uint64_t fading = 2;
inline constexpr std::uint64_t trace = 3;
inline constexpr std::uint64_t mask = 4;
inline constexpr std::uint64_t calibration = 5;
inline constexpr std::uint64_t detection = 6;
}  // namespace purpose

// xoshiro256++ with counter-derived substreams.
//
// Seeding scheme: the key is master advanced twice through SplitMix64, once
// keyed by `purpose` and once by `index`; the four state words are the next
// four SplitMix64 outputs from that key. Distinct (purpose, index) pairs give
// statistically independent streams of the same master seed, which is what
// makes parallel and serial Monte Carlo runs bit-identical.
class Stream {
 public:
  Stream(std::uint64_t master, std::uint64_t purpose, std::uint64_t index);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();
  // Uniform on (0, 1], safe as a log() argument.
  double uniform_pos();
  // Standard normal (Box-Muller; the paired value is cached).
  double normal();
  // Unit-mean exponential.
  double exponential();
  // Exact Poisson sample for any mean >= 0 (sequential search below
  // PTRS_THRESHOLD, Hormann's PTRS transformed rejection above it).
  std::uint64_t poisson(double mean);

  // Identifier of this substream; stable across runs.
  std::uint64_t tag() const { return tag_; }

 private:
  std::uint64_t state_[4];
  std::uint64_t tag_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace covertsim::rng
