#pragma once

#include <cstdint>
#include <random>

#include "infsimp/graded_map.hpp"

namespace infsimp {

// Deterministic source: std::mt19937_64 is fully specified by the standard;
// reductions are done by hand since std distributions are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi] (tiny modulo bias is irrelevant here).
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return static_cast<int>(next() % 100) < percent; }

 private:
  std::mt19937_64 engine_;
};

// Random integer entries in [-range, range] with the given density (percent).
SparseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range, int density,
                           const Ring& ring = Ring::rationals());
GradedMap random_map(Rng& rng, const Space& src, const Space& tgt, int degree, int range = 3, int density = 60,
                     const Ring& ring = Ring::rationals());

}  // namespace infsimp
