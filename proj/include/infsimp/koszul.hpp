#pragma once

#include <span>
#include <utility>
#include <vector>

namespace infsimp {

using Crossing = std::vector<std::pair<int, int>>;  // (left index, right index)

// (−1)^{Σ |a||b|} over the crossed pairs, as ±1.
int koszul_interchange_sign(std::span<const int> left_degrees, std::span<const int> right_degrees,
                            const Crossing& crossing);

// For (f_1⊗…⊗f_r)∘(g_1⊗…⊗g_s) with g grouped consecutively by the input
// arities of the f's: f_i passes every g in a group belonging to an earlier f.
Crossing interchange_crossing(std::span<const int> left_arities);

// A graded symbol inside a tensor layer: degree and input/output arity.
struct GradedSymbol {
  int degree = 0;
  int in = 1;
  int out = 1;
};
using Layer = std::vector<GradedSymbol>;

// Rewrites L∘R as one layer of factor composites L_i∘(R-group_i); returns the
// Koszul exponent and the merged layer. Requires Σ out(R) = Σ in(L).
std::pair<int, Layer> interchange(const Layer& left, const Layer& right);

// Exponent of a composite stack: applies interchange from the right, so
// layers[0] is outermost. Returns the accumulated exponent and final layer.
std::pair<int, Layer> collapse(const std::vector<Layer>& layers);

}  // namespace infsimp
