#include "infsimp/random.hpp"

namespace infsimp {

SparseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range, int density, const Ring& ring) {
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    SparseMatrix::Column col;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!rng.chance(density)) continue;
      long long v = rng.range(-range, range);
      if (v != 0) col.push_back({static_cast<std::uint32_t>(i), ring.make(v)});
    }
    if (!col.empty()) m.set_column(j, std::move(col));
  }
  return m;
}

GradedMap random_map(Rng& rng, const Space& src, const Space& tgt, int degree, int range, int density,
                     const Ring& ring) {
  GradedMap m(src, tgt, degree);
  for (int q = 0; q <= src.max_degree(); ++q) {
    int rows = tgt.dim(q + degree), cols = src.dim(q);
    if (rows == 0 || cols == 0) continue;
    m.set_block(q, random_matrix(rng, rows, cols, range, density, ring));
  }
  return m;
}

}  // namespace infsimp
