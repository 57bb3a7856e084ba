#include "infsimp/suspension.hpp"

#include <mutex>

#include "infsimp/errors.hpp"

namespace infsimp {

Suspension suspend(const ComplexPtr& a) {
  std::vector<int> dims{0};
  dims.insert(dims.end(), a->dims().begin(), a->dims().end());
  std::map<int, SparseMatrix> d;
  for (const auto& [q, m] : a->differential()) d.emplace(q + 1, m);
  auto sa = Complex::create(std::move(dims), std::move(d), "S" + (a->name().empty() ? std::string("A") : a->name()));
  Suspension s{a, sa, GradedMap({sa, 1}, {a, 1}, -1), GradedMap({a, 1}, {sa, 1}, 1)};
  for (int q = 0; q <= a->max_degree(); ++q) {
    if (a->dim(q) == 0) continue;
    s.eta.set_block(q + 1, SparseMatrix::identity(a->dim(q)));
    s.xi.set_block(q, SparseMatrix::identity(a->dim(q)));
  }
  return s;
}

namespace {
std::mutex cache_mu;
std::map<const Complex*, std::shared_ptr<const Suspension>> by_base, by_shifted;
}  // namespace

std::shared_ptr<const Suspension> suspension_of(const ComplexPtr& a) {
  std::lock_guard lock(cache_mu);
  auto it = by_base.find(a.get());
  if (it != by_base.end()) return it->second;
  auto s = std::make_shared<const Suspension>(suspend(a));
  by_base.emplace(a.get(), s);
  by_shifted.emplace(s->shifted.get(), s);
  return s;
}

std::shared_ptr<const Suspension> desuspension_of(const ComplexPtr& sa) {
  std::lock_guard lock(cache_mu);
  auto it = by_shifted.find(sa.get());
  if (it == by_shifted.end()) throw StructuralError("complex '" + sa->name() + "' is not a known suspension");
  return it->second;
}

GradedMap Suspension::eta_power(int n) const {
  std::vector<const GradedMap*> fs(n, &eta);
  return tensor(fs, shifted, base);
}

GradedMap Suspension::xi_power(int n) const {
  std::vector<const GradedMap*> fs(n, &xi);
  return tensor(fs, base, shifted);
}

}  // namespace infsimp
