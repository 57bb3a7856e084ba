#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "infsimp/matrix.hpp"

namespace infsimp {

class TensorSpace;

// Finite-dimensional nonnegatively graded chain complex (A, d), d of degree -1.
// Basis elements are numbered globally, degree by degree.
class Complex {
 public:
  // dims[q] = dim A_q; d maps source degree q (>= 1) to a dims[q-1] x dims[q] block.
  static std::shared_ptr<const Complex> create(std::vector<int> dims, std::map<int, SparseMatrix> d,
                                               std::string name = {});

  const std::string& name() const { return name_; }
  int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int q) const { return q >= 0 && q <= max_degree() ? dims_[q] : 0; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_; }
  int offset(int q) const { return offsets_[q]; }
  int degree_of(std::uint32_t basis) const { return degree_of_[basis]; }
  const std::map<int, SparseMatrix>& differential() const { return d_; }

  // A^{⊗n}, cached.
  const TensorSpace& power(int n) const;

  bool same_structure(const Complex& o) const { return dims_ == o.dims_ && d_ == o.d_; }

  Complex(std::vector<int> dims, std::map<int, SparseMatrix> d, std::string name);

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  std::vector<int> degree_of_;
  int total_ = 0;
  std::map<int, SparseMatrix> d_;
  std::string name_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<TensorSpace>> powers_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

// Homogeneous basis of A^{⊗n}: words of basis ids grouped by total degree.
class TensorSpace {
 public:
  TensorSpace(const Complex& base, int arity);

  int arity() const { return arity_; }
  int max_degree() const { return static_cast<int>(words_.size()) - 1; }
  int dim(int q) const {
    if (arity_ == 0) return q == 0 ? 1 : 0;
    return q >= 0 && q <= max_degree() ? static_cast<int>(words_[q].size() / arity_) : 0;
  }
  std::span<const std::uint32_t> word(int q, std::size_t pos) const {
    return {words_[q].data() + pos * arity_, static_cast<std::size_t>(arity_)};
  }
  // (degree, position) of a word; the word must have this space's arity.
  std::pair<int, std::uint32_t> locate(std::span<const std::uint32_t> w) const;
  int degree_of(std::span<const std::uint32_t> w) const;

  // d = Σ 1⊗…⊗d⊗…⊗1 with Koszul signs; block q maps degree q to q-1.
  const std::map<int, SparseMatrix>& differential() const;

 private:
  const Complex& base_;
  int arity_;
  std::vector<std::vector<std::uint32_t>> words_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  mutable std::once_flag d_once_;
  mutable std::map<int, SparseMatrix> d_;
};

// A^{⊗arity}; the unit of source/target bookkeeping for graded maps.
struct Space {
  ComplexPtr base;
  int arity = 1;

  const TensorSpace& tensor() const { return base->power(arity); }
  int dim(int q) const { return tensor().dim(q); }
  int max_degree() const { return tensor().max_degree(); }
  bool operator==(const Space& o) const { return base == o.base && arity == o.arity; }
  std::string describe() const;
};

inline Space tensor_power(const ComplexPtr& a, int n) { return Space{a, n}; }

}  // namespace infsimp
