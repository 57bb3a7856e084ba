#include "infsimp/matrix.hpp"

#include <algorithm>

#include "infsimp/errors.hpp"

namespace infsimp {
namespace {

void check_vector(const SparseMatrix& a, std::size_t len) {
  if (a.rows() != len)
    throw StructuralError("right-hand side has length " + std::to_string(len) + ", matrix has " +
                          std::to_string(a.rows()) + " rows");
}

struct Echelon {
  std::vector<std::vector<Scalar>> m;  // reduced row echelon form
  std::vector<std::size_t> pivots;     // pivot column of each nonzero row
};

// Gauss-Jordan with the leftmost available pivot in each column.
Echelon reduce(std::vector<std::vector<Scalar>> m, std::size_t cols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Scalar inv = m[row][c].inverse();
    for (std::size_t j = c; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (std::size_t j = c; j < m[r].size(); ++j)
        if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

SparseMatrix::Column product_column(const SparseMatrix& a, std::span<const SparseMatrix::Entry> bcol,
                                    std::vector<Scalar>& acc, std::vector<char>& hit,
                                    std::vector<std::uint32_t>& touched) {
  touched.clear();
  for (const auto& eb : bcol) {
    for (const auto& ea : a.column(eb.row)) {
      if (!hit[ea.row]) {
        hit[ea.row] = 1;
        touched.push_back(ea.row);
        acc[ea.row] = ea.value * eb.value;
      } else {
        acc[ea.row] += ea.value * eb.value;
      }
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseMatrix::Column out;
  out.reserve(touched.size());
  for (auto r : touched) {
    if (!acc[r].is_zero()) out.push_back({r, std::move(acc[r])});
    acc[r] = Scalar();
    hit[r] = 0;
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  m.data_.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), Scalar(1)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw StructuralError("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.add(i, j, rows[i][j]);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

std::span<const SparseMatrix::Entry> SparseMatrix::column(std::size_t j) const {
  if (j >= cols_) throw StructuralError("column index out of range");
  if (data_.empty()) return {};
  return data_[j];
}

void SparseMatrix::set_column(std::size_t j, Column entries) {
  if (j >= cols_) throw StructuralError("column index out of range");
  if (data_.empty()) data_.resize(cols_);
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
  Column out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (e.row >= rows_) throw StructuralError("row index out of range");
    if (!out.empty() && out.back().row == e.row) {
      out.back().value += e.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else if (!e.value.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  data_[j] = std::move(out);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw StructuralError("entry index out of range");
  if (v.is_zero()) return;
  if (data_.empty()) data_.resize(cols_);
  auto& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    it->value += v;
    if (it->value.is_zero()) col.erase(it);
  } else {
    col.insert(it, {static_cast<std::uint32_t>(r), v});
  }
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& e : column(c))
    if (e.row == r) return e.value;
  return Scalar();
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix sum of mismatched shapes");
  if (o.data_.empty()) return *this;
  if (data_.empty()) data_.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (o.data_[j].empty()) continue;
    Column merged;
    merged.reserve(data_[j].size() + o.data_[j].size());
    auto a = data_[j].begin(), ae = data_[j].end();
    auto b = o.data_[j].begin(), be = o.data_[j].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->row < b->row)) {
        merged.push_back(std::move(*a++));
      } else if (a == ae || b->row < a->row) {
        merged.push_back(*b++);
      } else {
        Scalar v = a->value + b->value;
        if (!v.is_zero()) merged.push_back({a->row, std::move(v)});
        ++a, ++b;
      }
    }
    data_[j] = std::move(merged);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  SparseMatrix neg = o;
  neg *= Scalar(-1);
  return *this += neg;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    data_.clear();
    return *this;
  }
  for (auto& col : data_)
    for (auto& e : col) e.value *= s;
  return *this;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    auto x = a.column(j), y = b.column(j);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  std::vector<Column> cols(rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : column(j)) cols[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  if (!cols.empty()) t.data_ = std::move(cols);
  return t;
}

std::vector<std::vector<Scalar>> SparseMatrix::dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : column(j)) d[e.row][j] = e.value;
  return d;
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw StructuralError("vector length does not match column count");
  std::vector<Scalar> y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& e : column(j)) y[e.row] += e.value * x[j];
  }
  return y;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, Exec exec) {
  if (a.cols() != b.rows())
    throw StructuralError("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  SparseMatrix c(a.rows(), b.cols());
  if (a.is_zero() || b.is_zero()) return c;
  std::vector<SparseMatrix::Column> cols(b.cols());
  const long n = static_cast<long>(b.cols());
  if (exec == Exec::serial) {
    std::vector<Scalar> acc(a.rows());
    std::vector<char> hit(a.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (long j = 0; j < n; ++j) cols[j] = product_column(a, b.column(j), acc, hit, touched);
  } else {
#pragma omp parallel if (n > 32)
    {
      std::vector<Scalar> acc(a.rows());
      std::vector<char> hit(a.rows(), 0);
      std::vector<std::uint32_t> touched;
#pragma omp for schedule(static)
      for (long j = 0; j < n; ++j) cols[j] = product_column(a, b.column(j), acc, hit, touched);
    }
  }
  for (long j = 0; j < n; ++j)
    if (!cols[j].empty()) c.set_column(j, std::move(cols[j]));
  return c;
}

std::optional<std::vector<Scalar>> solve_linear(const SparseMatrix& a, const std::vector<Scalar>& b) {
  check_vector(a, b.size());
  auto rows = a.dense();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
  Echelon e = reduce(std::move(rows), a.cols());
  for (std::size_t r = e.pivots.size(); r < e.m.size(); ++r)
    if (!e.m[r][a.cols()].is_zero()) return std::nullopt;
  std::vector<Scalar> x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m[r][a.cols()];
  return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& a) {
  Echelon e = reduce(a.dense(), a.cols());
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const SparseMatrix& a) { return reduce(a.dense(), a.cols()).pivots.size(); }

}  // namespace infsimp
