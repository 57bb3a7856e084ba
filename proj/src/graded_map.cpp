#include "infsimp/graded_map.hpp"

#include <algorithm>

#include "infsimp/errors.hpp"

namespace infsimp {

GradedMap GradedMap::identity(const Space& s) {
  GradedMap m(s, s, 0);
  for (int q = 0; q <= s.max_degree(); ++q)
    if (s.dim(q) > 0) m.set_block(q, SparseMatrix::identity(s.dim(q)));
  return m;
}

GradedMap GradedMap::differential(const Space& s) {
  GradedMap m(s, s, -1);
  for (const auto& [q, b] : s.tensor().differential()) m.set_block(q, b);
  return m;
}

const SparseMatrix* GradedMap::block(int q) const {
  auto it = blocks_.find(q);
  return it == blocks_.end() ? nullptr : &it->second;
}

void GradedMap::set_block(int q, SparseMatrix m) {
  const int rows = tgt_.dim(q + degree_), cols = src_.dim(q);
  if (static_cast<int>(m.rows()) != rows || static_cast<int>(m.cols()) != cols)
    throw StructuralError("block at source degree " + std::to_string(q) + " of " + src_.describe() + " -> " +
                          tgt_.describe() + " has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  if (m.is_zero()) blocks_.erase(q);
  else blocks_.insert_or_assign(q, std::move(m));
}

void GradedMap::add_block(int q, const SparseMatrix& m) {
  auto it = blocks_.find(q);
  if (it == blocks_.end()) {
    set_block(q, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) blocks_.erase(it);
}

void GradedMap::check_same_shape(const GradedMap& o, const char* op) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_) || degree_ != o.degree_)
    throw StructuralError(std::string(op) + " of maps with different source, target or degree: " + src_.describe() +
                          "->" + tgt_.describe() + " (" + std::to_string(degree_) + ") vs " + o.src_.describe() +
                          "->" + o.tgt_.describe() + " (" + std::to_string(o.degree_) + ")");
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  check_same_shape(o, "sum");
  for (const auto& [q, m] : o.blocks_) add_block(q, m);
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
  check_same_shape(o, "difference");
  for (const auto& [q, m] : o.blocks_) {
    SparseMatrix neg = m;
    neg *= Scalar(-1);
    add_block(q, neg);
  }
  return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& s) {
  if (s.is_zero()) blocks_.clear();
  for (auto& [q, m] : blocks_) m *= s;
  return *this;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
}

GradedMap compose(const GradedMap& a, const GradedMap& b, Exec exec) {
  if (!(a.src() == b.tgt()))
    throw StructuralError("composition " + a.src().describe() + " <- " + b.tgt().describe() + " mismatched");
  GradedMap r(b.src(), a.tgt(), a.degree() + b.degree());
  for (const auto& [q, mb] : b.blocks()) {
    const SparseMatrix* ma = a.block(q + b.degree());
    if (!ma) continue;
    r.set_block(q, multiply(*ma, mb, exec));
  }
  return r;
}

namespace {

struct FactorView {
  const GradedMap* map;
  const TensorSpace* src;
  const TensorSpace* tgt;
  int arity;
};

// One source column of the tensor product.
SparseMatrix::Column tensor_column(const std::vector<FactorView>& fs, std::span<const std::uint32_t> word,
                                   const TensorSpace& out_space, int out_arity) {
  const std::size_t r = fs.size();
  std::vector<std::span<const SparseMatrix::Entry>> cols(r);
  std::vector<int> out_deg(r);
  int exponent = 0, passed = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < r; ++i) {
    auto sub = word.subspan(at, fs[i].arity);
    at += fs[i].arity;
    auto [qi, pos] = fs[i].src->locate(sub);
    const SparseMatrix* b = fs[i].map->block(qi);
    if (!b) return {};
    cols[i] = b->column(pos);
    if (cols[i].empty()) return {};
    out_deg[i] = qi + fs[i].map->degree();
    exponent += fs[i].map->degree() * passed;
    passed += qi;
  }
  SparseMatrix::Column out;
  std::vector<std::size_t> idx(r, 0);
  std::vector<std::uint32_t> w(out_arity);
  const Scalar sign = sign_scalar(exponent);
  for (;;) {
    Scalar v = sign;
    std::size_t p = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const auto& e = cols[i][idx[i]];
      v *= e.value;
      auto tw = fs[i].tgt->word(out_deg[i], e.row);
      std::copy(tw.begin(), tw.end(), w.begin() + p);
      p += tw.size();
    }
    out.push_back({out_space.locate(w).second, std::move(v)});
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++idx[i] < cols[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (r == 0) return out;
  }
}

}  // namespace

GradedMap tensor(const std::vector<const GradedMap*>& factors, const ComplexPtr& src_base,
                 const ComplexPtr& tgt_base, Exec exec) {
  int in_arity = 0, out_arity = 0, degree = 0;
  std::vector<FactorView> fs;
  for (const GradedMap* f : factors) {
    if (f->src().base != src_base || f->tgt().base != tgt_base)
      throw StructuralError("tensor factors must share source and target bases");
    fs.push_back({f, &f->src().tensor(), &f->tgt().tensor(), f->src().arity});
    in_arity += f->src().arity;
    out_arity += f->tgt().arity;
    degree += f->degree();
  }
  Space src{src_base, in_arity}, tgt{tgt_base, out_arity};
  GradedMap r(src, tgt, degree);
  const TensorSpace& in = src.tensor();
  const TensorSpace& out = tgt.tensor();
  for (int q = 0; q <= in.max_degree(); ++q) {
    const long n = in.dim(q);
    if (n == 0 || tgt.dim(q + degree) == 0) continue;
    std::vector<SparseMatrix::Column> cols(n);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel && n > 64)
    for (long j = 0; j < n; ++j) cols[j] = tensor_column(fs, in.word(q, j), out, out_arity);
    SparseMatrix m(tgt.dim(q + degree), n);
    for (long j = 0; j < n; ++j)
      if (!cols[j].empty()) m.set_column(j, std::move(cols[j]));
    r.set_block(q, std::move(m));
  }
  return r;
}

GradedMap tensor(const std::vector<GradedMap>& factors, Exec exec) {
  if (factors.empty()) throw StructuralError("empty tensor product needs explicit bases");
  std::vector<const GradedMap*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  return tensor(ptrs, factors.front().src().base, factors.front().tgt().base, exec);
}

GradedMap map_differential(const GradedMap& phi, int parity, Exec exec) {
  const auto& dt = phi.tgt().tensor().differential();
  const auto& ds = phi.src().tensor().differential();
  GradedMap r(phi.src(), phi.tgt(), phi.degree() - 1);
  for (const auto& [q, m] : phi.blocks()) {
    auto it = dt.find(q + phi.degree());
    if (it != dt.end()) r.add_block(q, multiply(it->second, m, exec));
  }
  const Scalar s = (parity & 1) ? Scalar(1) : Scalar(-1);
  for (const auto& [q, d] : ds) {
    const SparseMatrix* m = phi.block(q - 1);
    if (!m) continue;
    SparseMatrix t = multiply(*m, d, exec);
    t *= s;
    r.add_block(q, t);
  }
  return r;
}

std::optional<EntryLocation> first_nonzero(const GradedMap& m) {
  for (const auto& [q, b] : m.blocks())
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto col = b.column(j);
      if (!col.empty())
        return EntryLocation{q, col.front().row, static_cast<std::uint32_t>(j), col.front().value};
    }
  return std::nullopt;
}

}  // namespace infsimp
