#include "infsimp/complex.hpp"

#include <limits>

#include "infsimp/errors.hpp"

namespace infsimp {

Complex::Complex(std::vector<int> dims, std::map<int, SparseMatrix> d, std::string name)
    : dims_(std::move(dims)), d_(std::move(d)), name_(std::move(name)) {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
  for (int q = 0; q < static_cast<int>(dims_.size()); ++q) {
    if (dims_[q] < 0) throw StructuralError("negative dimension in degree " + std::to_string(q));
    offsets_.push_back(total_);
    total_ += dims_[q];
    for (int i = 0; i < dims_[q]; ++i) degree_of_.push_back(q);
  }
}

ComplexPtr Complex::create(std::vector<int> dims, std::map<int, SparseMatrix> d, std::string name) {
  auto c = std::make_shared<Complex>(std::move(dims), std::map<int, SparseMatrix>{}, std::move(name));
  std::map<int, SparseMatrix> clean;
  for (auto& [q, m] : d) {
    if (static_cast<int>(m.rows()) != c->dim(q - 1) || static_cast<int>(m.cols()) != c->dim(q))
      throw StructuralError("differential block at degree " + std::to_string(q) + " has shape " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                            std::to_string(c->dim(q - 1)) + "x" + std::to_string(c->dim(q)));
    if (!m.is_zero()) clean.emplace(q, std::move(m));
  }
  for (auto& [q, m] : clean) {
    auto next = clean.find(q - 1);
    if (next != clean.end() && !multiply(next->second, m, Exec::serial).is_zero())
      throw StructuralError("d∘d != 0 starting in degree " + std::to_string(q));
  }
  c->d_ = std::move(clean);
  return c;
}

const TensorSpace& Complex::power(int n) const {
  if (n < 0) throw StructuralError("negative tensor arity");
  std::lock_guard lock(mu_);
  auto& slot = powers_[n];
  if (!slot) slot = std::make_unique<TensorSpace>(*this, n);
  return *slot;
}

TensorSpace::TensorSpace(const Complex& base, int arity) : base_(base), arity_(arity) {
  const int b = base.total_dim();
  long double span = 1;
  for (int i = 0; i < arity; ++i) span *= std::max(b, 1);
  if (span > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
    throw StructuralError("tensor power too large to index");
  if (arity == 0) {
    words_.resize(1);
    index_.emplace(0, 0);
    return;
  }
  if (b == 0) return;
  words_.resize(static_cast<std::size_t>(arity * base.max_degree() + 1));
  std::vector<std::uint32_t> w(arity, 0);
  // Odometer over all words; first letter varies slowest.
  for (;;) {
    int q = 0;
    std::uint64_t code = 0;
    for (int i = 0; i < arity; ++i) {
      q += base.degree_of(w[i]);
      code = code * b + w[i];
    }
    auto& bucket = words_[q];
    index_.emplace(code, static_cast<std::uint32_t>(bucket.size() / arity));
    bucket.insert(bucket.end(), w.begin(), w.end());
    int i = arity - 1;
    while (i >= 0 && ++w[i] == static_cast<std::uint32_t>(b)) w[i--] = 0;
    if (i < 0) break;
  }
  while (!words_.empty() && words_.back().empty()) words_.pop_back();
}

int TensorSpace::degree_of(std::span<const std::uint32_t> w) const {
  int q = 0;
  for (auto x : w) q += base_.degree_of(x);
  return q;
}

std::pair<int, std::uint32_t> TensorSpace::locate(std::span<const std::uint32_t> w) const {
  std::uint64_t code = 0;
  const std::uint64_t b = base_.total_dim();
  for (auto x : w) code = code * b + x;
  auto it = index_.find(code);
  if (it == index_.end() || static_cast<int>(w.size()) != arity_) throw StructuralError("word not in tensor basis");
  return {degree_of(w), it->second};
}

const std::map<int, SparseMatrix>& TensorSpace::differential() const {
  std::call_once(d_once_, [this] {
    if (arity_ == 1) {
      d_ = base_.differential();
      return;
    }
    const auto& bd = base_.differential();
    for (int q = 1; q <= max_degree(); ++q) {
      SparseMatrix m(dim(q - 1), dim(q));
      bool any = false;
      std::vector<std::uint32_t> out(arity_);
      for (int pos = 0; pos < dim(q); ++pos) {
        auto w = word(q, pos);
        SparseMatrix::Column col;
        int passed = 0;
        for (int i = 0; i < arity_; ++i) {
          int qi = base_.degree_of(w[i]);
          auto it = bd.find(qi);
          if (it != bd.end()) {
            Scalar sign = sign_scalar(passed);
            std::uint32_t local = w[i] - base_.offset(qi);
            std::copy(w.begin(), w.end(), out.begin());
            for (const auto& e : it->second.column(local)) {
              out[i] = base_.offset(qi - 1) + e.row;
              col.push_back({locate(out).second, sign * e.value});
            }
          }
          passed += qi;
        }
        if (!col.empty()) {
          m.set_column(pos, std::move(col));
          any = true;
        }
      }
      if (any && !m.is_zero()) d_.emplace(q, std::move(m));
    }
  });
  return d_;
}

std::string Space::describe() const {
  std::string n = base && !base->name().empty() ? base->name() : "A";
  return arity == 1 ? n : n + "^" + std::to_string(arity);
}

}  // namespace infsimp
