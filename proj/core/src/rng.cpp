#include "braidwalk/rng.hpp"

#include <bit>

namespace braidwalk {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  // Smallest all-ones mask covering bound - 1; reject values beyond it.
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero((bound - 1) | 1);
  for (;;) {
    const std::uint64_t x = (*this)() & mask;
    if (x < bound) return x;
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (index * 0xD1B54A32D192ED03ULL);
  return splitmix64(state);
}

}  // namespace braidwalk
