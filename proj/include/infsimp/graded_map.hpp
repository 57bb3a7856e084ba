#pragma once

#include <map>
#include <optional>
#include <vector>

#include "infsimp/complex.hpp"

namespace infsimp {

// Homogeneous map src -> tgt raising internal degree by `degree`.
// Blocks are keyed by source degree; an absent block is zero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(Space src, Space tgt, int degree) : src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree) {}

  static GradedMap identity(const Space& s);
  static GradedMap zero(const Space& src, const Space& tgt, int degree) { return {src, tgt, degree}; }
  // The differential of s, as a map of degree -1.
  static GradedMap differential(const Space& s);

  const Space& src() const { return src_; }
  const Space& tgt() const { return tgt_; }
  int degree() const { return degree_; }
  const std::map<int, SparseMatrix>& blocks() const { return blocks_; }
  const SparseMatrix* block(int q) const;

  void set_block(int q, SparseMatrix m);
  void add_block(int q, const SparseMatrix& m);
  bool is_zero() const { return blocks_.empty(); }

  GradedMap& operator+=(const GradedMap& o);
  GradedMap& operator-=(const GradedMap& o);
  GradedMap& operator*=(const Scalar& s);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  friend GradedMap operator*(const Scalar& s, GradedMap a) { return a *= s; }
  friend bool operator==(const GradedMap& a, const GradedMap& b);

  // Multiplies the block at source degree q by sign(q); used for q-dependent signs.
  template <class F>
  GradedMap with_degree_sign(F&& exponent_of_q) const {
    GradedMap r = *this;
    for (auto& [q, m] : r.blocks_)
      if (exponent_of_q(q) & 1) m *= Scalar(-1);
    return r;
  }

 private:
  void check_same_shape(const GradedMap& o, const char* op) const;

  Space src_, tgt_;
  int degree_ = 0;
  std::map<int, SparseMatrix> blocks_;
};

// a∘b.
GradedMap compose(const GradedMap& a, const GradedMap& b, Exec exec = Exec::parallel);

// f_1⊗…⊗f_r with the Koszul rule. All factors must share one source base and
// one target base; the empty product is the identity of arity 0 on src -> tgt.
GradedMap tensor(const std::vector<const GradedMap*>& factors, const ComplexPtr& src_base,
                 const ComplexPtr& tgt_base, Exec exec = Exec::parallel);
GradedMap tensor(const std::vector<GradedMap>& factors, Exec exec = Exec::parallel);

// d∘φ − (−1)^parity φ∘d. The one-argument form uses parity = internal degree.
GradedMap map_differential(const GradedMap& phi, int parity, Exec exec = Exec::parallel);
inline GradedMap map_differential(const GradedMap& phi) { return map_differential(phi, phi.degree()); }

struct EntryLocation {
  int source_degree = 0;
  std::uint32_t row = 0, col = 0;
  Scalar value;
};
std::optional<EntryLocation> first_nonzero(const GradedMap& m);

}  // namespace infsimp
