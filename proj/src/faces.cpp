#include "infsimp/faces.hpp"

#include <algorithm>
#include <numeric>

#include "infsimp/errors.hpp"

namespace infsimp {

bool strictly_increasing(const IndexTuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] <= t[i - 1]) return false;
  return true;
}

void require_index_tuple(const IndexTuple& t) {
  if (!strictly_increasing(t) || (!t.empty() && t.front() < 0))
    throw StructuralError("index tuple must be strictly increasing and nonnegative");
}

int inversion_count(const std::vector<int>& seq) {
  int c = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++c;
  return c;
}

std::vector<Permutation> all_permutations(int k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> hat(const std::vector<int>& seq) {
  std::vector<int> h(seq.size());
  for (std::size_t s = 0; s < seq.size(); ++s) {
    int smaller = 0;
    for (std::size_t r = s + 1; r < seq.size(); ++r)
      if (seq[r] < seq[s]) ++smaller;
    h[s] = seq[s] - smaller;
  }
  return h;
}

std::vector<int> hat_tuple(const Permutation& sigma, const IndexTuple& t) {
  if (sigma.size() != t.size()) throw StructuralError("permutation size differs from tuple length");
  std::vector<int> seq(t.size());
  for (std::size_t p = 0; p < t.size(); ++p) seq[p] = t.at(sigma[p]);
  return hat(seq);
}

namespace {

std::vector<SignedSplit> splits(const IndexTuple& t, int m_lo, int m_hi, int sign_shift) {
  require_index_tuple(t);
  const int k = static_cast<int>(t.size());
  std::vector<SignedSplit> out;
  for (const auto& sigma : all_permutations(k)) {
    auto h = hat_tuple(sigma, t);
    int sign = ((permutation_parity(sigma) + sign_shift) & 1) ? -1 : 1;
    for (int m = m_lo; m <= m_hi; ++m) {
      IndexTuple left(h.begin(), h.begin() + m), right(h.begin() + m, h.end());
      if (strictly_increasing(left) && strictly_increasing(right))
        out.push_back({sign, std::move(left), std::move(right), sigma, m});
    }
  }
  return out;
}

}  // namespace

std::vector<SignedSplit> enum_relation_splits(const IndexTuple& t) {
  if (t.empty()) throw StructuralError("relation splits need a nonempty tuple");
  return splits(t, 1, static_cast<int>(t.size()) - 1, 1);
}

std::vector<SignedSplit> enum_composition_splits(const IndexTuple& t) {
  return splits(t, 0, static_cast<int>(t.size()), 0);
}

int BlockPermutation::m() const { return n - std::accumulate(ns.begin(), ns.end(), 0); }

BlockPermutation block_permutation(int n, const std::vector<int>& ns, const std::vector<int>& ts) {
  if (ns.size() != ts.size()) throw StructuralError("block permutation needs as many t's as n's");
  BlockPermutation p{n, ns, ts, {}, {}, {}};
  const int m = p.m();
  if (m < 0) throw StructuralError("block lengths exceed n");
  int tsum = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1 || ts[i] < 1) throw StructuralError("block lengths must be positive");
    tsum += ts[i];
  }
  if (tsum > m + 2) throw StructuralError("t-blocks exceed m+2");
  std::vector<int> all(n + 1);
  std::iota(all.begin(), all.end(), 1);
  if (ns.empty()) {
    p.a.push_back(all);
    p.image = all;
    return p;
  }
  int next = 1;
  auto take = [&](int len) {
    std::vector<int> blk;
    for (int i = 0; i < len; ++i) blk.push_back(next++);
    return blk;
  };
  for (std::size_t i = 0; i < ns.size(); ++i) {
    p.a.push_back(take(i == 0 ? ts[0] - 1 : ts[i]));
    p.b.push_back(take(ns[i]));
  }
  p.a.push_back(take(n + 2 - next));
  for (const auto& blk : p.a) p.image.insert(p.image.end(), blk.begin(), blk.end());
  for (const auto& blk : p.b) p.image.insert(p.image.end(), blk.begin(), blk.end());
  return p;
}

int block_inversion_formula(const BlockPermutation& p) {
  int total = 0, bsum = 0;
  for (std::size_t i = 1; i < p.a.size(); ++i) {
    bsum += static_cast<int>(p.b[i - 1].size());
    total += static_cast<int>(p.a[i].size()) * bsum;
  }
  return total;
}

namespace {

int tail_sum(const std::vector<int>& v, std::size_t from) {
  return std::accumulate(v.begin() + std::min(from, v.size()), v.end(), 0);
}

int epsilon_of(const std::vector<int>& ns) {
  long e = 0;
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) e += static_cast<long>(ns[i] + 1) * tail_sum(ns, i + 1);
  return static_cast<int>(e & 1);
}

int mu_core(const std::vector<int>& ns, const std::vector<int>& ts) {
  if (ns.size() != ts.size()) throw StructuralError("exponent needs equally many n's and t's");
  long e = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) e += static_cast<long>(ts[i] - 1) * tail_sum(ns, i);
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) e += static_cast<long>(ns[i] + 1) * tail_sum(ns, i + 1);
  return static_cast<int>(e & 1);
}

struct KindName {
  ExponentKind kind;
  const char* name;
};
constexpr KindName kKinds[] = {
    {ExponentKind::epsilon, "epsilon"},
    {ExponentKind::rho, "rho"},
    {ExponentKind::mu, "mu"},
    {ExponentKind::gamma, "gamma"},
    {ExponentKind::theta, "theta"},
    {ExponentKind::block_sign, "block_sign"},
    {ExponentKind::block_sign_special, "block_sign_special"},
    {ExponentKind::ainf_relation, "ainf_relation"},
    {ExponentKind::morphism_linear, "morphism_linear"},
    {ExponentKind::homotopy_linear, "homotopy_linear"},
    {ExponentKind::alpha_morphism, "alpha_morphism"},
    {ExponentKind::alpha_homotopy, "alpha_homotopy"},
};

}  // namespace

ExponentKind parse_exponent_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  throw StructuralError("unknown exponent kind '" + std::string(name) + "'");
}

std::string to_string(ExponentKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "?";
}

int sign_exponent(ExponentKind kind, const ExponentParams& p) {
  auto parity = [](long v) { return static_cast<int>(((v % 2) + 2) % 2); };
  switch (kind) {
    case ExponentKind::epsilon:
      return epsilon_of(p.ns);
    case ExponentKind::rho: {
      if (static_cast<int>(p.ns.size()) != p.m + 2 || p.i < 1 || p.i > p.m + 2)
        throw StructuralError("rho needs m+2 entries and 1 <= i <= m+2");
      long e = p.m + epsilon_of(p.ns);
      for (int s = 0; s + 1 < p.i; ++s) e += p.ns[s];
      return parity(e);
    }
    case ExponentKind::mu:
      return mu_core(p.ns, p.ts);
    case ExponentKind::theta:
      return parity(p.m + mu_core(p.ns, p.ts));
    case ExponentKind::gamma: {
      long e = 0;
      for (std::size_t i = 0; i + 1 < p.ns.size(); ++i) e += static_cast<long>(p.ns[i]) * tail_sum(p.ns, i + 1);
      return parity(e);
    }
    case ExponentKind::block_sign: {
      if (p.ns.size() != p.ts.size()) throw StructuralError("block sign needs equally many n's and t's");
      const int m = p.n - std::accumulate(p.ns.begin(), p.ns.end(), 0);
      long e = static_cast<long>(m) * p.n + m, prefix = 0, tsum = 0;
      for (std::size_t i = 0; i < p.ts.size(); ++i) {
        e += p.ts[i] * prefix;
        prefix += p.ns[i];
        tsum += p.ts[i];
      }
      e += tsum * (p.n - m);
      return parity(e);
    }
    case ExponentKind::block_sign_special:
      return parity(static_cast<long>(p.m) * p.n + p.m + static_cast<long>(p.t) * (p.n - p.m));
    case ExponentKind::ainf_relation:
    case ExponentKind::morphism_linear:
      return parity(static_cast<long>(p.t) * (p.n - p.m + 1) + p.n + 1);
    case ExponentKind::homotopy_linear:
      return parity(static_cast<long>(p.t) * (p.n - p.m + 1) + p.n);
    case ExponentKind::alpha_morphism:
      return parity(static_cast<long>(p.t) * (p.n - p.m) + p.n + 1);
    case ExponentKind::alpha_homotopy:
      return parity(static_cast<long>(p.t) * (p.n - p.m) + p.n);
  }
  throw StructuralError("unknown exponent kind");
}

std::vector<std::vector<int>> compositions(int total, int parts, bool positive) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0 && parts == 0) out.emplace_back();
    return out;
  }
  const int lo = positive ? 1 : 0;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 1) {
      if (left >= lo) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int v = lo; v <= left - lo * (slots - 1); ++v) {
      cur.push_back(v);
      self(self, left - v, slots - 1);
      cur.pop_back();
    }
  };
  if (total >= lo * parts) rec(rec, total, parts);
  return out;
}

}  // namespace infsimp
