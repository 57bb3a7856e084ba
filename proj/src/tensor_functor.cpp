#include "infsimp/tensor_functor.hpp"

#include <numeric>

#include "infsimp/errors.hpp"
#include "infsimp/faces.hpp"

namespace infsimp {

namespace {

int sign_of(int parity) { return (parity & 1) ? -1 : 1; }

void accumulate(GradedMap& acc, int sign, const GradedMap& term) {
  if (sign < 0) acc -= term;
  else acc += term;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw StructuralError(what);
}

IndexTuple run(int from, int len) {
  IndexTuple t(len);
  std::iota(t.begin(), t.end(), from);
  return t;
}

int gamma_of(const std::vector<int>& ns) {
  ExponentParams p;
  p.ns = ns;
  return sign_exponent(ExponentKind::gamma, p);
}

// Tensor word under construction.
struct Word {
  std::vector<const GradedMap*> factors;
  void repeat(const GradedMap* m, int times) { factors.insert(factors.end(), std::max(times, 0), m); }
};

// Ordered compositions of `total` into `parts` positive integers with sum in [lo, hi].
std::vector<std::vector<int>> bounded_positive(int parts, int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (int total = std::max(lo, parts); total <= hi; ++total)
    for (auto& c : compositions(total, parts, true)) out.push_back(std::move(c));
  return out;
}

}  // namespace

int RunDecomposition::k() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

std::optional<RunDecomposition> decompose_runs(int n, const IndexTuple& t) {
  if (t.empty() || t.front() == 0 || t.back() >= n) return std::nullopt;
  require_index_tuple(t);
  RunDecomposition r;
  r.n = n;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p > 0 && t[p] == t[p - 1] + 1) {
      ++r.lengths.back();
      continue;
    }
    r.gaps.push_back(p == 0 ? t[p] : t[p] - t[p - 1] - 1);
    r.starts.push_back(t[p]);
    r.lengths.push_back(1);
  }
  const int used = std::accumulate(r.gaps.begin(), r.gaps.end(), 0);
  r.gaps.push_back(n - used - static_cast<int>(t.size()) + 1);
  return r;
}

std::vector<Mutation> all_mutations() {
  return {Mutation::face_negate,         Mutation::face_q_exponent,     Mutation::morphism_negate,
          Mutation::morphism_q_exponent, Mutation::morphism_drop_gamma, Mutation::homotopy_negate,
          Mutation::homotopy_q_exponent, Mutation::homotopy_drop_gamma, Mutation::homotopy_drop_inner,
          Mutation::homotopy_negate_second};
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::face_negate: return "face-negate";
    case Mutation::face_q_exponent: return "face-q-exponent";
    case Mutation::morphism_negate: return "morphism-negate";
    case Mutation::morphism_q_exponent: return "morphism-q-exponent";
    case Mutation::morphism_drop_gamma: return "morphism-drop-gamma";
    case Mutation::homotopy_negate: return "homotopy-negate";
    case Mutation::homotopy_q_exponent: return "homotopy-q-exponent";
    case Mutation::homotopy_drop_gamma: return "homotopy-drop-gamma";
    case Mutation::homotopy_drop_inner: return "homotopy-drop-inner";
    case Mutation::homotopy_negate_second: return "homotopy-negate-second";
  }
  return "?";
}

namespace {

// (−1)^{k(q−1)+extra} on source degree q, with the q-exponent defect if asked.
GradedMap q_signed(const GradedMap& m, int k, int extra, bool q_defect) {
  const int shift = q_defect ? 0 : 1;
  return m.with_degree_sign([&](int q) { return k * (q - shift) + extra; });
}

template <class Job>
void for_cells(std::vector<CellKey>& keys, std::vector<GradedMap>& out, Exec exec, Job&& job) {
  out.resize(keys.size());
  const long count = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long i = 0; i < count; ++i) out[i] = job(keys[i]);
}

// Nonempty tuples inside [1, n−1].
std::vector<IndexTuple> interior_tuples(int n) {
  std::vector<IndexTuple> out;
  const int inner = n - 1;
  if (inner <= 0) return out;
  for (unsigned mask = 1; mask < (1u << inner); ++mask) {
    IndexTuple t;
    for (int b = 0; b < inner; ++b)
      if (mask & (1u << b)) t.push_back(b + 1);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

ModulePtr tensor_object(const AlgebraPtr& a, int max_level, const FunctorOptions& opt) {
  require(a && a->convention == Convention::standard, "the tensor module needs an algebra in the standard convention");
  require(max_level >= 0, "negative truncation");
  require(static_cast<int>(a->ops.size()) >= max_level - 1,
          "levels up to " + std::to_string(max_level) + " need pi_0..pi_" + std::to_string(max_level - 2) +
              "; only " + std::to_string(a->ops.size()) + " operations are stored");
  if (opt.validate) {
    AInfCheckOptions co;
    co.exec = opt.exec;
    auto rep = check_ainf(*a, co);
    if (!rep.ok()) throw FunctorRefusal("the algebra fails its A-infinity relations", rep);
  }
  auto x = std::make_shared<InftySimplicialModule>();
  for (int n = 0; n <= max_level; ++n) x->levels.push_back(Space{a->base, n});
  std::vector<CellKey> keys;
  for (int n = 0; n <= max_level; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (int j = 1; j <= n - k; ++j) keys.push_back({n, run(j, k)});
  const GradedMap id = GradedMap::identity(Space{a->base, 1});
  std::vector<GradedMap> maps;
  for_cells(keys, maps, opt.exec, [&](const CellKey& c) {
    const int n = c.level, k = static_cast<int>(c.tuple.size()), j = c.tuple.front();
    std::vector<const GradedMap*> fs(j - 1, &id);
    fs.push_back(&a->ops[k - 1]);
    fs.insert(fs.end(), n - k - j, &id);
    GradedMap m = q_signed(tensor(fs, a->base, a->base, Exec::serial), k, 0, opt.mutation == Mutation::face_q_exponent);
    if (opt.mutation == Mutation::face_negate) m *= Scalar(-1);
    return m;
  });
  for (std::size_t i = 0; i < keys.size(); ++i) x->set_face(keys[i].level, keys[i].tuple, std::move(maps[i]));
  return x;
}

InftyMorphism tensor_morphism(const AInfMorphism& f, const ModulePtr& src, const ModulePtr& tgt,
                              const FunctorOptions& opt) {
  require(f.convention() == Convention::standard, "the tensor image needs a morphism in the standard convention");
  require(src && tgt && src->truncation() == tgt->truncation(), "image endpoints with different truncations");
  const int top = src->truncation();
  require(src->levels.at(std::min(top, 1)).base == f.source->base || top == 0, "source image over another complex");
  require(tgt->levels.at(std::min(top, 1)).base == f.target->base || top == 0, "target image over another complex");
  require(static_cast<int>(f.comps.size()) >= std::max(top, 1),
          "levels up to " + std::to_string(top) + " need f_0..f_" + std::to_string(std::max(top, 1) - 1));
  if (opt.validate) {
    AInfCheckOptions co;
    co.exec = opt.exec;
    auto rep = check_ainf_morphism(f, co);
    if (!rep.ok()) throw FunctorRefusal("the morphism fails its A-infinity relations", rep);
  }
  InftyMorphism r{src, tgt, {}};
  std::vector<CellKey> keys;
  for (int n = 0; n <= top; ++n) {
    keys.push_back({n, {}});
    for (auto& t : interior_tuples(n)) keys.push_back({n, std::move(t)});
  }
  const auto& sb = f.source->base;
  const auto& tb = f.target->base;
  std::vector<GradedMap> maps;
  for_cells(keys, maps, opt.exec, [&](const CellKey& c) {
    const int n = c.level;
    if (c.tuple.empty()) return tensor(std::vector<const GradedMap*>(n, &f.comps[0]), sb, tb, Exec::serial);
    const auto runs = *decompose_runs(n, c.tuple);
    Word w;
    for (int i = 0; i < runs.s(); ++i) {
      w.repeat(&f.comps[0], runs.gaps[i] - 1);
      w.factors.push_back(&f.comps[runs.lengths[i]]);
    }
    w.repeat(&f.comps[0], runs.gaps.back() - 1);
    const int gamma = opt.mutation == Mutation::morphism_drop_gamma ? 0 : gamma_of(runs.lengths);
    GradedMap m = q_signed(tensor(w.factors, sb, tb, Exec::serial), runs.k(), gamma,
                           opt.mutation == Mutation::morphism_q_exponent);
    if (opt.mutation == Mutation::morphism_negate) m *= Scalar(-1);
    return m;
  });
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!maps[i].is_zero()) r.set_component(keys[i].level, keys[i].tuple, std::move(maps[i]));
  return r;
}

InftyHomotopy tensor_homotopy(const AInfHomotopy& h, const MorphismPtr& tf, const MorphismPtr& tg,
                              const FunctorOptions& opt) {
  require(h.convention() == Convention::standard, "the tensor image needs a homotopy in the standard convention");
  require(tf && tg && tf->source == tg->source && tf->target == tg->target,
          "homotopy images need morphism images with shared endpoints");
  const int top = tf->source->truncation();
  require(static_cast<int>(h.comps.size()) >= std::max(top, 1),
          "levels up to " + std::to_string(top) + " need h_0..h_" + std::to_string(std::max(top, 1) - 1));
  if (opt.validate) {
    AInfCheckOptions co;
    co.exec = opt.exec;
    auto rep = check_ainf_homotopy(h, co);
    if (!rep.ok()) throw FunctorRefusal("the homotopy fails its A-infinity relations", rep);
  }
  const auto& f = *h.f;
  const auto& g = *h.g;
  const auto& sb = f.source->base;
  const auto& tb = f.target->base;
  InftyHomotopy r{tf, tg, {}};
  std::vector<CellKey> keys;
  for (int n = 0; n <= top; ++n) {
    keys.push_back({n, {}});
    for (auto& t : interior_tuples(n)) keys.push_back({n, std::move(t)});
  }
  std::vector<GradedMap> maps;
  for_cells(keys, maps, opt.exec, [&](const CellKey& c) {
    const int n = c.level;
    const int k = static_cast<int>(c.tuple.size());
    GradedMap acc(Space{sb, n}, Space{tb, n - k}, k + 1);
    if (c.tuple.empty()) {
      for (int i = 1; i <= n; ++i) {
        Word w;
        w.repeat(&g.comps[0], i - 1);
        w.factors.push_back(&h.comps[0]);
        w.repeat(&f.comps[0], n - i);
        acc += tensor(w.factors, sb, tb, Exec::serial);
      }
      return acc;
    }
    const auto runs = *decompose_runs(n, c.tuple);
    const int s = runs.s();
    const auto& ns = runs.lengths;
    // g-side up to (not including) run i: gap copies and run components.
    auto g_prefix = [&](Word& w, int i) {
      for (int r2 = 0; r2 < i; ++r2) {
        w.repeat(&g.comps[0], runs.gaps[r2] - 1);
        w.factors.push_back(&g.comps[ns[r2]]);
      }
    };
    auto f_suffix = [&](Word& w, int from) {
      for (int r2 = from; r2 < s; ++r2) {
        w.repeat(&f.comps[0], runs.gaps[r2] - 1);
        w.factors.push_back(&f.comps[ns[r2]]);
      }
      w.repeat(&f.comps[0], runs.gaps.back() - 1);
    };
    int before = 0;  // n_1 + … + n_{i−1}
    for (int i = 0; i < s; ++i) {
      Word w;
      g_prefix(w, i);
      w.repeat(&g.comps[0], runs.gaps[i] - 1);
      w.factors.push_back(&h.comps[ns[i]]);
      f_suffix(w, i + 1);
      const int inner = opt.mutation == Mutation::homotopy_drop_inner ? 0 : before;
      accumulate(acc, sign_of(inner), tensor(w.factors, sb, tb, Exec::serial));
      before += ns[i];
    }
    before = 0;
    const int second = opt.mutation == Mutation::homotopy_negate_second ? 1 : 0;
    for (int i = 0; i <= s; ++i) {
      const int gap = runs.gaps[i] - 1;
      for (int j = 1; j <= gap; ++j) {
        Word w;
        g_prefix(w, i);
        w.repeat(&g.comps[0], j - 1);
        w.factors.push_back(&h.comps[0]);
        w.repeat(&f.comps[0], gap - j);
        if (i < s) {
          w.factors.push_back(&f.comps[ns[i]]);
          f_suffix(w, i + 1);
        }
        accumulate(acc, sign_of(before + second), tensor(w.factors, sb, tb, Exec::serial));
      }
      if (i < s) before += ns[i];
    }
    const int gamma = opt.mutation == Mutation::homotopy_drop_gamma ? 0 : gamma_of(ns);
    GradedMap m = q_signed(acc, k, gamma, opt.mutation == Mutation::homotopy_q_exponent);
    if (opt.mutation == Mutation::homotopy_negate) m *= Scalar(-1);
    return m;
  });
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!maps[i].is_zero()) r.set_component(keys[i].level, keys[i].tuple, std::move(maps[i]));
  return r;
}

VerificationReport verify_functoriality(const AInfMorphism& f, const AInfMorphism& g, int max_level, Exec exec) {
  FunctorOptions opt;
  opt.exec = exec;
  auto ta = tensor_object(f.source, max_level, opt);
  auto tb = tensor_object(f.target, max_level, opt);
  auto tc = tensor_object(g.target, max_level, opt);
  auto tf = tensor_morphism(f, ta, tb, opt);
  auto tg = tensor_morphism(g, tb, tc, opt);
  auto tgf = tensor_morphism(compose_ainf(g, f, exec), ta, tc, opt);
  auto rep = compare_morphisms(tgf, compose(tg, tf, exec), "T(gf)=T(g)T(f)");
  rep.subject = "functoriality";
  return rep;
}

VerificationReport verify_identity(const AlgebraPtr& a, int max_level, Exec exec) {
  FunctorOptions opt;
  opt.exec = exec;
  auto ta = tensor_object(a, max_level, opt);
  auto rep = compare_morphisms(tensor_morphism(identity_ainf(a), ta, ta, opt), identity_morphism(ta), "T(1)=1");
  rep.subject = "identity";
  return rep;
}

namespace {

// Factors f_0^{t_1−1}⊗X_1⊗…⊗f_0^{t_s−1}⊗X_s⊗f_0^{rest} where X_i = comps[n_i].
std::vector<const GradedMap*> block_word(const AInfMorphism& f, const std::vector<int>& ns,
                                         const std::vector<int>& ts, int rest) {
  Word w;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    w.repeat(&f.comps[0], ts[i] - 1);
    w.factors.push_back(&f.comps[ns[i]]);
  }
  w.repeat(&f.comps[0], rest);
  return w.factors;
}

GradedMap linear(const GradedMap& outer, int before, const GradedMap& mid, int after, const ComplexPtr& base,
                 Exec exec) {
  const GradedMap id = GradedMap::identity(Space{base, 1});
  std::vector<const GradedMap*> fs(before, &id);
  fs.push_back(&mid);
  fs.insert(fs.end(), after, &id);
  return compose(outer, tensor(fs, base, base, exec), exec);
}

ExponentParams mu_params(const std::vector<int>& ns, const std::vector<int>& ts, int m = 0) {
  ExponentParams p;
  p.m = m;
  p.ns = ns;
  p.ts = ts;
  return p;
}

// Visits (m, ns, ts) with 0 <= m <= n−1, ns ∈ N_{n−m}, ts ∈ T_{m+2}.
template <class F>
void for_blocks(int n, F&& visit) {
  for (int m = 0; m <= n - 1; ++m)
    for (int s = 1; s <= std::min(m + 2, n - m); ++s)
      for (const auto& ns : compositions(n - m, s, true))
        for (const auto& ts : bounded_positive(s, s, m + 2)) visit(m, ns, ts);
}

}  // namespace

GradedMap rewritten_morphism_rhs(const AInfMorphism& f, int n, Exec exec) {
  require(f.convention() == Convention::standard, "rewritten relations are stated in the standard convention");
  const auto& sb = f.source->base;
  const auto& tb = f.target->base;
  GradedMap acc(Space{sb, n + 2}, Space{tb, 1}, n);
  if (n < 0) return acc;
  const auto& pi = f.source->ops;
  const auto& pt = f.target->ops;
  acc += compose(f.comps[0], pi[n], exec);
  for (int m = 0; m <= n - 1; ++m)
    for (int t = 1; t <= m + 2; ++t)
      accumulate(acc, sign_of(t * (n - m) + n + 1), linear(f.comps[m + 1], t - 1, pi[n - m - 1], m + 2 - t, sb, exec));
  acc -= compose(pt[n], tensor(std::vector<const GradedMap*>(n + 2, &f.comps[0]), sb, tb, exec), exec);
  for_blocks(n, [&](int m, const std::vector<int>& ns, const std::vector<int>& ts) {
    const int used = std::accumulate(ts.begin(), ts.end(), 0);
    const int mu = sign_exponent(ExponentKind::mu, mu_params(ns, ts));
    accumulate(acc, -sign_of(mu), compose(pt[m], tensor(block_word(f, ns, ts, m + 2 - used), sb, tb, exec), exec));
  });
  return acc;
}

GradedMap rewritten_homotopy_rhs(const AInfHomotopy& h, int n, Exec exec) {
  require(h.convention() == Convention::standard, "rewritten relations are stated in the standard convention");
  const auto& f = *h.f;
  const auto& g = *h.g;
  const auto& sb = f.source->base;
  const auto& tb = f.target->base;
  GradedMap acc(Space{sb, n + 2}, Space{tb, 1}, n + 1);
  acc += f.comps[n + 1];
  acc -= g.comps[n + 1];
  if (n < 0) return acc;
  const auto& pi = f.source->ops;
  const auto& pt = f.target->ops;
  acc -= compose(h.comps[0], pi[n], exec);
  for (int m = 0; m <= n - 1; ++m)
    for (int t = 1; t <= m + 2; ++t)
      accumulate(acc, sign_of(t * (n - m) + n), linear(h.comps[m + 1], t - 1, pi[n - m - 1], m + 2 - t, sb, exec));
  for (int i = 1; i <= n + 2; ++i) {
    Word w;
    w.repeat(&g.comps[0], i - 1);
    w.factors.push_back(&h.comps[0]);
    w.repeat(&f.comps[0], n + 2 - i);
    accumulate(acc, sign_of(n), compose(pt[n], tensor(w.factors, sb, tb, exec), exec));
  }
  for_blocks(n, [&](int m, const std::vector<int>& ns, const std::vector<int>& ts) {
    const int s = static_cast<int>(ns.size());
    const int last = m + 3 - std::accumulate(ts.begin(), ts.end(), 0);  // t_{s+1}
    const int theta = sign_exponent(ExponentKind::theta, mu_params(ns, ts, m));
    auto gap = [&](int i) { return i < s ? ts[i] : last; };
    auto prefix = [&](Word& w, int i) {
      for (int r = 0; r < i; ++r) {
        w.repeat(&g.comps[0], ts[r] - 1);
        w.factors.push_back(&g.comps[ns[r]]);
      }
    };
    auto tail = [&](Word& w, int from) {
      for (int r = from; r < s; ++r) {
        w.repeat(&f.comps[0], ts[r] - 1);
        w.factors.push_back(&f.comps[ns[r]]);
      }
      w.repeat(&f.comps[0], last - 1);
    };
    int before = 0;
    for (int i = 0; i < s; ++i) {
      Word w;
      prefix(w, i);
      w.repeat(&g.comps[0], ts[i] - 1);
      w.factors.push_back(&h.comps[ns[i]]);
      tail(w, i + 1);
      accumulate(acc, sign_of(theta + before), compose(pt[m], tensor(w.factors, sb, tb, exec), exec));
      before += ns[i];
    }
    before = 0;
    for (int i = 0; i <= s; ++i) {
      for (int j = 1; j <= gap(i) - 1; ++j) {
        Word w;
        prefix(w, i);
        w.repeat(&g.comps[0], j - 1);
        w.factors.push_back(&h.comps[0]);
        w.repeat(&f.comps[0], gap(i) - 1 - j);
        if (i < s) {
          w.factors.push_back(&f.comps[ns[i]]);
          tail(w, i + 1);
        }
        accumulate(acc, sign_of(theta + before), compose(pt[m], tensor(w.factors, sb, tb, exec), exec));
      }
      if (i < s) before += ns[i];
    }
  });
  return acc;
}

namespace {

void add_composite(GradedMap& acc, int sign, const GradedMap* outer, const GradedMap* inner, Exec exec) {
  if (outer && inner) accumulate(acc, sign, compose(*outer, *inner, exec));
}

IndexTuple concat_blocks(const BlockPermutation& p) {
  IndexTuple t;
  for (const auto& b : p.b) t.insert(t.end(), b.begin(), b.end());
  return t;
}

// Visits the split terms of the module-side rewrite at level n+2:
// linear(m, t, sign) for f^{m+2}_{(1..m+1)}∂_{(t..t+n−m−1)} and
// product(m, tuple, sign) for ∂^{m+2}_{(1..m+1)}f_{(b_1..b_s)}.
template <class L, class P>
void module_terms(int n, L&& lin, P&& prod) {
  for (int m = 0; m <= n - 1; ++m)
    for (int t = 1; t <= m + 2; ++t) lin(m, t, permutation_parity(block_permutation(n, {n - m}, {t}).image));
  for_blocks(n, [&](int m, const std::vector<int>& ns, const std::vector<int>& ts) {
    const auto p = block_permutation(n, ns, ts);
    prod(m, concat_blocks(p), permutation_parity(p.image));
  });
}

}  // namespace

GradedMap rewritten_module_morphism_rhs(const InftyMorphism& tf, int n, Exec exec) {
  const int top = n + 2;
  const auto& src = *tf.source;
  const auto& tgt = *tf.target;
  const IndexTuple all = run(1, n + 1);
  GradedMap acc(src.levels.at(top), tgt.levels.at(1), n);
  add_composite(acc, 1, tf.components.find(1, {}), src.faces.find(top, all), exec);
  add_composite(acc, -1, tgt.faces.find(top, all), tf.components.find(top, {}), exec);
  module_terms(
      n,
      [&](int m, int t, int parity) {
        add_composite(acc, sign_of(parity), tf.components.find(m + 2, run(1, m + 1)),
                      src.faces.find(top, run(t, n - m)), exec);
      },
      [&](int m, const IndexTuple& b, int parity) {
        add_composite(acc, -sign_of(parity), tgt.faces.find(m + 2, run(1, m + 1)), tf.components.find(top, b), exec);
      });
  return acc;
}

GradedMap rewritten_module_homotopy_rhs(const InftyHomotopy& th, int n, Exec exec) {
  const int top = n + 2;
  const auto& src = *th.f->source;
  const auto& tgt = *th.f->target;
  const IndexTuple all = run(1, n + 1);
  GradedMap acc(src.levels.at(top), tgt.levels.at(1), n + 1);
  if (const auto* x = th.f->components.find(top, all)) acc += *x;
  if (const auto* x = th.g->components.find(top, all)) acc -= *x;
  add_composite(acc, -1, th.components.find(1, {}), src.faces.find(top, all), exec);
  add_composite(acc, -1, tgt.faces.find(top, all), th.components.find(top, {}), exec);
  module_terms(
      n,
      [&](int m, int t, int parity) {
        add_composite(acc, -sign_of(parity), th.components.find(m + 2, run(1, m + 1)),
                      src.faces.find(top, run(t, n - m)), exec);
      },
      [&](int m, const IndexTuple& b, int parity) {
        add_composite(acc, -sign_of(parity), tgt.faces.find(m + 2, run(1, m + 1)), th.components.find(top, b), exec);
      });
  return acc;
}

namespace {

RelationOutcome equality(const std::string& relation, int n, const GradedMap& a, const GradedMap& b) {
  return outcome_of(relation, nlohmann::json{{"n", n}}, a - b);
}

}  // namespace

VerificationReport verify_rewrites(const AInfMorphism& f, int max_n, Exec exec) {
  VerificationReport rep;
  rep.subject = "morphism-rewrites";
  const int top = std::min(max_n, morphism_top_relation(f));
  for (int n = -1; n <= top; ++n)
    rep.entries.push_back(equality("2.2=rewrite", n, morphism_rhs(f, n, exec), rewritten_morphism_rhs(f, n, exec)));
  const int levels = std::min(top + 2, static_cast<int>(f.comps.size()));
  if (levels < 2) return rep;
  FunctorOptions opt;
  opt.exec = exec;
  opt.validate = false;
  auto ta = tensor_object(f.source, levels, opt);
  auto tb = tensor_object(f.target, levels, opt);
  auto tf = tensor_morphism(f, ta, tb, opt);
  for (int n = 0; n + 2 <= levels; ++n)
    rep.entries.push_back(equality("1.2=rewrite", n, morphism_rhs(tf, n + 2, run(1, n + 1), exec),
                                   rewritten_module_morphism_rhs(tf, n, exec)));
  return rep;
}

VerificationReport verify_rewrites(const AInfHomotopy& h, int max_n, Exec exec) {
  VerificationReport rep;
  rep.subject = "homotopy-rewrites";
  const int top = std::min(max_n, homotopy_top_relation(h));
  for (int n = -1; n <= top; ++n)
    rep.entries.push_back(equality("2.4=rewrite", n, homotopy_rhs(h, n, exec), rewritten_homotopy_rhs(h, n, exec)));
  const int levels = std::min({top + 2, static_cast<int>(h.comps.size()), static_cast<int>(h.f->comps.size()),
                               static_cast<int>(h.g->comps.size())});
  if (levels < 2) return rep;
  FunctorOptions opt;
  opt.exec = exec;
  opt.validate = false;
  auto ta = tensor_object(h.f->source, levels, opt);
  auto tb = tensor_object(h.f->target, levels, opt);
  auto tf = std::make_shared<const InftyMorphism>(tensor_morphism(*h.f, ta, tb, opt));
  auto tg = std::make_shared<const InftyMorphism>(tensor_morphism(*h.g, ta, tb, opt));
  auto th = tensor_homotopy(h, tf, tg, opt);
  for (int n = 0; n + 2 <= levels; ++n)
    rep.entries.push_back(equality("1.4=rewrite", n, homotopy_rhs(th, n + 2, run(1, n + 1), exec),
                                   rewritten_module_homotopy_rhs(th, n, exec)));
  return rep;
}

VerificationReport verify_transported_equivalence(const HomotopyEquivalence& e, int max_level,
                                                  const CheckOptions& opt) {
  VerificationReport rep;
  rep.subject = "transported-equivalence";
  const auto& a = e.phi->source;
  const auto& b = e.phi->target;
  require(e.psi->source == b && e.psi->target == a, "psi must run opposite to phi");
  AInfCheckOptions co;
  co.exec = opt.exec;
  for (const auto* x : {e.phi.get(), e.psi.get()}) rep.append(check_ainf_morphism(*x, co));
  rep.append(check_ainf_homotopy(e.h, co));
  rep.append(check_ainf_homotopy(e.h2, co));
  // The homotopies must run between the composites and the identities.
  const std::pair<const AInfHomotopy*, std::pair<const AInfMorphism*, const AInfMorphism*>> legs[] = {
      {&e.h, {e.phi.get(), e.psi.get()}}, {&e.h2, {e.psi.get(), e.phi.get()}}};
  for (const auto& [hh, pair] : legs) {
    const auto& [first, second] = pair;
    auto composite = compose_ainf(*second, *first, opt.exec);
    rep.append(compare_ainf_morphisms(*hh->f, composite, "2.3"));
    rep.append(compare_ainf_morphisms(*hh->g, identity_ainf(first->source), "2.3"));
  }
  if (!rep.ok()) return rep;

  FunctorOptions fo;
  fo.exec = opt.exec;
  fo.validate = false;
  auto ta = tensor_object(a, max_level, fo);
  auto tb = tensor_object(b, max_level, fo);
  auto tphi = std::make_shared<const InftyMorphism>(tensor_morphism(*e.phi, ta, tb, fo));
  auto tpsi = std::make_shared<const InftyMorphism>(tensor_morphism(*e.psi, tb, ta, fo));
  for (const auto& [hh, pair] : legs) {
    const auto& [first, second] = pair;
    const auto& tfirst = first == e.phi.get() ? tphi : tpsi;
    const auto& tsecond = first == e.phi.get() ? tpsi : tphi;
    auto comp = std::make_shared<const InftyMorphism>(compose(*tsecond, *tfirst, opt.exec));
    auto id = std::make_shared<const InftyMorphism>(identity_morphism(tfirst->source));
    auto image_f = std::make_shared<const InftyMorphism>(tensor_morphism(*hh->f, tfirst->source, tfirst->source, fo));
    auto image_g = std::make_shared<const InftyMorphism>(tensor_morphism(*hh->g, tfirst->source, tfirst->source, fo));
    rep.append(compare_morphisms(*image_f, *comp, "1.3"));
    rep.append(compare_morphisms(*image_g, *id, "1.3"));
    auto th = tensor_homotopy(*hh, image_f, image_g, fo);
    InftyHomotopy transported{comp, id, th.components};
    rep.append(check_homotopy(transported, opt));
  }
  return rep;
}

}  // namespace infsimp
