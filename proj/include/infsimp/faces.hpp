#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace infsimp {

using IndexTuple = std::vector<int>;
// A permutation of k symbols as the image sequence (σ(0), …, σ(k−1)), 0-based.
using Permutation = std::vector<int>;

bool strictly_increasing(const IndexTuple& t);
void require_index_tuple(const IndexTuple& t);

int inversion_count(const std::vector<int>& seq);
inline int permutation_parity(const Permutation& p) { return inversion_count(p) & 1; }
// All permutations of k symbols in lexicographic order.
std::vector<Permutation> all_permutations(int k);

// x_s − #{r > s : x_r < x_s}, applied to (t[σ(0)], …, t[σ(k−1)]).
std::vector<int> hat(const std::vector<int>& seq);
std::vector<int> hat_tuple(const Permutation& sigma, const IndexTuple& t);

// A term sign·left∘right: right acts first at level n, left at level n − |right|.
struct SignedSplit {
  int sign = 1;
  IndexTuple left, right;
  Permutation sigma;
  int m = 0;  // |left|
};

// Summation set of the structural relations: 1 ≤ m ≤ k−1, sign (−1)^{sign σ + 1}.
std::vector<SignedSplit> enum_relation_splits(const IndexTuple& t);
// Summation set of composition: 0 ≤ m ≤ k, sign (−1)^{sign σ}.
std::vector<SignedSplit> enum_composition_splits(const IndexTuple& t);

// Blocks a_1,b_1,…,a_s,b_s,a_{s+1} of (1,…,n+1); the permutation moves all
// b-blocks to the rear preserving order.
struct BlockPermutation {
  int n = 0;
  std::vector<int> ns, ts;
  std::vector<std::vector<int>> a, b;
  std::vector<int> image;  // σ(1),…,σ(n+1)
  int m() const;
};

BlockPermutation block_permutation(int n, const std::vector<int>& ns, const std::vector<int>& ts);
// |a_2||b_1| + |a_3|(|b_1|+|b_2|) + … + |a_{s+1}|(|b_1|+…+|b_s|).
int block_inversion_formula(const BlockPermutation& p);

enum class ExponentKind {
  epsilon,             // ns: Σ_i (n_i+1)(n_{i+1}+…+n_last)
  rho,                 // m, ns (m+2 entries), i: m + ε + n_1+…+n_{i−1}
  mu,                  // ns, ts
  gamma,               // ns
  theta,               // m, ns, ts
  block_sign,          // n, ns, ts
  block_sign_special,  // n, m, t
  ainf_relation,       // n, m, t: t(n−m+1)+n+1
  morphism_linear,     // n, m, t: t(n−m+1)+n+1
  homotopy_linear,     // n, m, t: t(n−m+1)+n
  alpha_morphism,      // n, m, t: t(n−m)+n+1
  alpha_homotopy,      // n, m, t: t(n−m)+n
};

struct ExponentParams {
  int n = 0, m = 0, t = 0, i = 0;
  std::vector<int> ns, ts;
};

ExponentKind parse_exponent_kind(std::string_view name);
std::string to_string(ExponentKind k);
// Exponent mod 2, i.e. 0 or 1.
int sign_exponent(ExponentKind kind, const ExponentParams& p);

// Compositions of `total` into `parts` nonnegative (or positive) integers,
// lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts, bool positive = false);

}  // namespace infsimp
