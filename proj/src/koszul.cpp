#include "infsimp/koszul.hpp"

#include "infsimp/errors.hpp"

namespace infsimp {

int koszul_interchange_sign(std::span<const int> left_degrees, std::span<const int> right_degrees,
                            const Crossing& crossing) {
  long e = 0;
  for (auto [i, j] : crossing) {
    if (i < 0 || j < 0 || i >= static_cast<int>(left_degrees.size()) || j >= static_cast<int>(right_degrees.size()))
      throw StructuralError("crossing index out of range");
    e += static_cast<long>(left_degrees[i]) * right_degrees[j];
  }
  return (e & 1) ? -1 : 1;
}

Crossing interchange_crossing(std::span<const int> left_arities) {
  Crossing c;
  int before = 0;
  for (int i = 0; i < static_cast<int>(left_arities.size()); ++i) {
    for (int j = 0; j < before; ++j) c.emplace_back(i, j);
    before += left_arities[i];
  }
  return c;
}

std::pair<int, Layer> interchange(const Layer& left, const Layer& right) {
  // Right symbols are grouped by output: each left factor consumes `in` outputs.
  std::vector<int> left_deg, right_deg, arities;
  for (const auto& s : left) left_deg.push_back(s.degree);
  for (const auto& s : right) right_deg.push_back(s.degree);
  Layer merged;
  std::size_t j = 0;
  for (const auto& l : left) {
    int need = l.in, deg = l.degree, in = 0, taken = 0;
    while (need > 0) {
      if (j == right.size()) throw StructuralError("layer arities do not match");
      need -= right[j].out;
      deg += right[j].degree;
      in += right[j].in;
      ++j, ++taken;
    }
    // Zero-output symbols (none occur here) would attach to the left neighbour.
    if (need != 0) throw StructuralError("right factor straddles two left factors");
    arities.push_back(taken);
    merged.push_back({deg, in, l.out});
  }
  if (j != right.size()) throw StructuralError("layer arities do not match");
  int s = koszul_interchange_sign(left_deg, right_deg, interchange_crossing(arities));
  return {s < 0 ? 1 : 0, merged};
}

std::pair<int, Layer> collapse(const std::vector<Layer>& layers) {
  if (layers.empty()) return {0, {}};
  int e = 0;
  Layer acc = layers.back();
  for (std::size_t i = layers.size() - 1; i-- > 0;) {
    auto [x, m] = interchange(layers[i], acc);
    e += x;
    acc = std::move(m);
  }
  return {e & 1, acc};
}

}  // namespace infsimp
