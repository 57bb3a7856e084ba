#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infsimp/scalar.hpp"

namespace infsimp {

enum class Exec { serial, parallel };

// Column-compressed exact matrix. Each column holds (row, value) pairs sorted
// by row with no explicit zeros.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Scalar value;
    bool operator==(const Entry&) const = default;
  };
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  std::span<const Entry> column(std::size_t j) const;
  // Takes entries in any order; duplicates are summed and zeros dropped.
  void set_column(std::size_t j, Column entries);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Scalar& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  SparseMatrix transposed() const;
  std::vector<std::vector<Scalar>> dense() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Column> data_;  // empty until a column is written
};

// a * b. The parallel kernel splits over columns of b; the serial one is the
// reference implementation used by the equivalence tests.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, Exec exec = Exec::parallel);

// Exact solve with leftmost pivots and free variables set to zero.
std::optional<std::vector<Scalar>> solve_linear(const SparseMatrix& a, const std::vector<Scalar>& b);
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& a);
std::size_t rank(const SparseMatrix& a);

}  // namespace infsimp
