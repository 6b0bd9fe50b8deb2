#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace dic {

/// Deterministic randomness source. Every protocol and game function takes an
/// Rng by reference so runs replay exactly from a seed. Not thread-safe; give
/// each thread its own instance (see fork()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Seeded from std::random_device; used when the operator gives no seed.
  static Rng from_entropy();
  static std::uint64_t entropy_seed();

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream, a pure function of (seed, stream).
  Rng fork(std::uint64_t stream) const;

  std::uint64_t next_u64();
  /// Uniform in [0, bound); bound must be non-zero.
  std::uint64_t below(std::uint64_t bound);
  void fill(std::span<std::uint8_t> out);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dic
