#pragma once

#include <array>
#include <cstdint>

namespace braidwalk {

/// splitmix64 (Steele, Lea, Flood). Advances `state` by 0x9E3779B97F4A7C15
/// and returns the mixed value.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED'C0FF'EE15'2024ULL;

/// xoshiro256** (Blackman, Vigna). The 256-bit state is filled with four
/// consecutive splitmix64 outputs starting from the seed, so every 64-bit
/// seed gives a valid nonzero state. Output is bit-exact across platforms.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed = kDefaultSeed);

  std::uint64_t operator()();
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  /// Top 53 bits scaled to [0, 1).
  double uniform();
  /// Uniform on [0, bound) by rejection on the top bits; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Seed of trial `index` under `master`: one splitmix64 output from state
/// master ^ (index * 0xD1B54A32D192ED03). Independent of how trials are
/// spread over workers.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

}  // namespace braidwalk
