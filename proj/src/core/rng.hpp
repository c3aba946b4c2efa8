#pragma once

#include <cstdint>
#include <random>

namespace monkey {

// Deterministic uniform double source. mt19937_64 is fully specified by the
// standard, and the explicit 53-bit mapping below sidesteps
// std::uniform_real_distribution, whose output is implementation-defined.
// The same seed therefore yields the same stream on every platform.
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace monkey
