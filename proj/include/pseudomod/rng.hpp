#pragma once

#include <cstdint>
#include <random>

#include "pseudomod/zmod.hpp"

namespace pseudomod {

/// Seeded generator; reductions are done by hand so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform-ish integer in [0, n).
  Int below(Int n) { return static_cast<Int>(eng_() % static_cast<std::uint64_t>(n)); }
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pseudomod
