#include "infsimp/simplicial.hpp"

#include "infsimp/errors.hpp"

namespace infsimp {

const GradedMap* ComponentFamily::find(int level, const IndexTuple& t) const {
  auto it = comps_.find(CellKey{level, t});
  return it == comps_.end() ? nullptr : &it->second;
}

void ComponentFamily::set(int level, IndexTuple t, GradedMap m) {
  CellKey key{level, std::move(t)};
  if (m.is_zero()) comps_.erase(key);
  else comps_.insert_or_assign(std::move(key), std::move(m));
}

namespace {

std::string cell_name(int n, const IndexTuple& t) {
  std::string s = "n=" + std::to_string(n) + " (";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

void check_cell(int levels_src, int levels_tgt, int n, const IndexTuple& t, bool allow_empty) {
  require_index_tuple(t);
  const int k = static_cast<int>(t.size());
  if (n < 0 || n >= levels_src) throw StructuralError("level out of range at " + cell_name(n, t));
  if ((!allow_empty && k == 0) || k > n) throw StructuralError("tuple length out of range at " + cell_name(n, t));
  if (!t.empty() && t.back() > n) throw StructuralError("index exceeds level at " + cell_name(n, t));
  if (n - k >= levels_tgt) throw StructuralError("target level missing at " + cell_name(n, t));
}

void check_shape(const GradedMap& m, const Space& src, const Space& tgt, int degree, int n, const IndexTuple& t) {
  if (!(m.src() == src) || !(m.tgt() == tgt) || m.degree() != degree)
    throw StructuralError("component at " + cell_name(n, t) + " has source " + m.src().describe() + ", target " +
                          m.tgt().describe() + ", degree " + std::to_string(m.degree()) + "; expected " +
                          src.describe() + ", " + tgt.describe() + ", " + std::to_string(degree));
}

const GradedMap* lookup(const ComponentFamily& fam, int n, const IndexTuple& t, std::size_t* absent) {
  const GradedMap* m = fam.find(n, t);
  if (!m && absent) ++*absent;
  return m;
}

void add_term(GradedMap& acc, int sign, const GradedMap* left, const GradedMap* right, Exec exec) {
  if (!left || !right) return;
  GradedMap term = compose(*left, *right, exec);
  if (sign < 0) acc -= term;
  else acc += term;
}

nlohmann::json cell_params(int n, const IndexTuple& t) { return {{"n", n}, {"tuple", t}}; }

template <class F>
VerificationReport run_cells(const std::string& subject, const std::string& relation, const std::vector<CellKey>& cs,
                             const CheckOptions& opt, F&& residual_of) {
  VerificationReport rep;
  rep.subject = subject;
  std::vector<RelationOutcome> out(cs.size());
  std::vector<std::size_t> absent(cs.size(), 0);
  const Exec inner = Exec::serial;
  const long count = static_cast<long>(cs.size());
  if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      out[i] = outcome_of(relation, cell_params(cs[i].level, cs[i].tuple),
                          residual_of(cs[i], inner, &absent[i]), opt.max_degree);
  } else {
    for (long i = 0; i < count; ++i)
      out[i] = outcome_of(relation, cell_params(cs[i].level, cs[i].tuple),
                          residual_of(cs[i], Exec::serial, &absent[i]), opt.max_degree);
  }
  rep.entries = std::move(out);
  for (auto a : absent) rep.absent_components += a;
  return rep;
}

int level_cap(int truncation, const CheckOptions& opt) {
  return opt.max_level < 0 ? truncation : std::min(opt.max_level, truncation);
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return true;
  return a && b && a->levels == b->levels && a->faces == b->faces;
}

}  // namespace

void InftySimplicialModule::set_face(int n, IndexTuple t, GradedMap m) {
  check_cell(static_cast<int>(levels.size()), static_cast<int>(levels.size()), n, t, false);
  const int k = static_cast<int>(t.size());
  check_shape(m, levels[n], levels[n - k], k - 1, n, t);
  faces.set(n, std::move(t), std::move(m));
}

void InftyMorphism::set_component(int n, IndexTuple t, GradedMap m) {
  check_cell(static_cast<int>(source->levels.size()), static_cast<int>(target->levels.size()), n, t, true);
  const int k = static_cast<int>(t.size());
  check_shape(m, source->levels[n], target->levels[n - k], k, n, t);
  components.set(n, std::move(t), std::move(m));
}

void InftyHomotopy::set_component(int n, IndexTuple t, GradedMap m) {
  check_cell(static_cast<int>(f->source->levels.size()), static_cast<int>(f->target->levels.size()), n, t, true);
  const int k = static_cast<int>(t.size());
  check_shape(m, f->source->levels[n], f->target->levels[n - k], k + 1, n, t);
  components.set(n, std::move(t), std::move(m));
}

std::vector<CellKey> cells(int max_level, int kmin) {
  std::vector<CellKey> out;
  for (int n = 0; n <= max_level; ++n) {
    for (int k = kmin; k <= n; ++k) {
      IndexTuple t;
      auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(t.size()) == k) {
          out.push_back({n, t});
          return;
        }
        for (int v = from; v <= n; ++v) {
          t.push_back(v);
          self(self, v + 1);
          t.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  return out;
}

GradedMap faces_rhs(const InftySimplicialModule& x, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  const int k = static_cast<int>(t.size());
  GradedMap acc(x.levels[n], x.levels[n - k], k - 2);
  for (const auto& sp : enum_relation_splits(t)) {
    const int mid = n - static_cast<int>(sp.right.size());
    add_term(acc, sp.sign, lookup(x.faces, mid, sp.left, absent), lookup(x.faces, n, sp.right, absent), exec);
  }
  return acc;
}

GradedMap faces_residual(const InftySimplicialModule& x, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  const int k = static_cast<int>(t.size());
  GradedMap r = faces_rhs(x, n, t, exec, absent);
  r *= Scalar(-1);
  if (const GradedMap* face = x.faces.find(n, t)) r += map_differential(*face, face->degree() - k, exec);
  return r;
}

GradedMap morphism_rhs(const InftyMorphism& f, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  const int k = static_cast<int>(t.size());
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  GradedMap acc(src.levels[n], tgt.levels[n - k], k - 1);
  if (k == 0) return acc;
  const GradedMap* f0_top = lookup(f.components, n, {}, absent);
  const GradedMap* f0_low = lookup(f.components, n - k, {}, absent);
  add_term(acc, -1, lookup(tgt.faces, n, t, absent), f0_top, exec);
  add_term(acc, 1, f0_low, lookup(src.faces, n, t, absent), exec);
  for (const auto& sp : enum_relation_splits(t)) {
    const int mid = n - static_cast<int>(sp.right.size());
    add_term(acc, sp.sign, lookup(tgt.faces, mid, sp.left, absent), lookup(f.components, n, sp.right, absent), exec);
    add_term(acc, -sp.sign, lookup(f.components, mid, sp.left, absent), lookup(src.faces, n, sp.right, absent),
             exec);
  }
  return acc;
}

GradedMap morphism_residual(const InftyMorphism& f, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  GradedMap r = morphism_rhs(f, n, t, exec, absent);
  r *= Scalar(-1);
  if (const GradedMap* c = f.components.find(n, t)) r += map_differential(*c, 0, exec);
  return r;
}

GradedMap homotopy_rhs(const InftyHomotopy& h, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  const int k = static_cast<int>(t.size());
  const auto& src = *h.f->source;
  const auto& tgt = *h.f->target;
  GradedMap acc(src.levels[n], tgt.levels[n - k], k);
  if (const GradedMap* fc = h.f->components.find(n, t)) acc += *fc;
  if (const GradedMap* gc = h.g->components.find(n, t)) acc -= *gc;
  if (k == 0) return acc;
  add_term(acc, -1, lookup(tgt.faces, n, t, absent), lookup(h.components, n, {}, absent), exec);
  add_term(acc, -1, lookup(h.components, n - k, {}, absent), lookup(src.faces, n, t, absent), exec);
  for (const auto& sp : enum_relation_splits(t)) {
    const int mid = n - static_cast<int>(sp.right.size());
    add_term(acc, sp.sign, lookup(tgt.faces, mid, sp.left, absent), lookup(h.components, n, sp.right, absent), exec);
    add_term(acc, sp.sign, lookup(h.components, mid, sp.left, absent), lookup(src.faces, n, sp.right, absent), exec);
  }
  return acc;
}

GradedMap homotopy_residual(const InftyHomotopy& h, int n, const IndexTuple& t, Exec exec, std::size_t* absent) {
  GradedMap r = homotopy_rhs(h, n, t, exec, absent);
  r *= Scalar(-1);
  if (const GradedMap* c = h.components.find(n, t)) r += map_differential(*c, 1, exec);
  return r;
}

VerificationReport check_faces(const InftySimplicialModule& x, const CheckOptions& opt) {
  auto cs = cells(level_cap(x.truncation(), opt), 1);
  return run_cells("faces", "1.1", cs, opt, [&](const CellKey& c, Exec e, std::size_t* a) {
    return faces_residual(x, c.level, c.tuple, e, a);
  });
}

VerificationReport check_morphism(const InftyMorphism& f, const CheckOptions& opt) {
  if (f.source->truncation() != f.target->truncation())
    throw StructuralError("morphism endpoints have different truncations");
  auto cs = cells(level_cap(f.source->truncation(), opt), 0);
  return run_cells("morphism", "1.2", cs, opt, [&](const CellKey& c, Exec e, std::size_t* a) {
    return morphism_residual(f, c.level, c.tuple, e, a);
  });
}

VerificationReport check_homotopy(const InftyHomotopy& h, const CheckOptions& opt) {
  if (!same_module(h.f->source, h.g->source) || !same_module(h.f->target, h.g->target))
    throw StructuralError("homotopy between morphisms with different endpoints");
  auto cs = cells(level_cap(h.f->source->truncation(), opt), 0);
  return run_cells("homotopy", "1.4", cs, opt, [&](const CellKey& c, Exec e, std::size_t* a) {
    return homotopy_residual(h, c.level, c.tuple, e, a);
  });
}

GradedMap composition_component(const InftyMorphism& g, const InftyMorphism& f, int n, const IndexTuple& t,
                                Exec exec) {
  const int k = static_cast<int>(t.size());
  GradedMap acc(f.source->levels[n], g.target->levels[n - k], k);
  for (const auto& sp : enum_composition_splits(t)) {
    const int mid = n - static_cast<int>(sp.right.size());
    add_term(acc, sp.sign, g.components.find(mid, sp.left), f.components.find(n, sp.right), exec);
  }
  return acc;
}

InftyMorphism compose(const InftyMorphism& g, const InftyMorphism& f, Exec exec) {
  if (!same_module(f.target, g.source)) throw StructuralError("composition of morphisms with mismatched endpoints");
  InftyMorphism r{f.source, g.target, {}};
  auto cs = cells(f.source->truncation(), 0);
  std::vector<GradedMap> comps(cs.size());
  const long count = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long i = 0; i < count; ++i) comps[i] = composition_component(g, f, cs[i].level, cs[i].tuple, Exec::serial);
  for (long i = 0; i < count; ++i) r.components.set(cs[i].level, cs[i].tuple, std::move(comps[i]));
  return r;
}

InftyMorphism identity_morphism(const ModulePtr& x) {
  InftyMorphism r{x, x, {}};
  for (int n = 0; n <= x->truncation(); ++n) r.components.set(n, {}, GradedMap::identity(x->levels[n]));
  return r;
}

VerificationReport compare_morphisms(const InftyMorphism& a, const InftyMorphism& b, const std::string& relation) {
  VerificationReport rep;
  rep.subject = relation;
  auto cs = cells(std::min(a.source->truncation(), b.source->truncation()), 0);
  for (const auto& c : cs) {
    const GradedMap* x = a.components.find(c.level, c.tuple);
    const GradedMap* y = b.components.find(c.level, c.tuple);
    const int k = static_cast<int>(c.tuple.size());
    GradedMap diff(a.source->levels[c.level], a.target->levels[c.level - k], k);
    if (x) diff += *x;
    if (y) {
      GradedMap yy = *y;
      if (!(yy.src() == diff.src()) || !(yy.tgt() == diff.tgt())) throw StructuralError("compared morphisms differ in shape");
      diff -= yy;
    }
    rep.entries.push_back(outcome_of(relation, cell_params(c.level, c.tuple), diff));
  }
  return rep;
}

InftySimplicialModule from_simplicial(const std::vector<ComplexPtr>& levels,
                                      const std::vector<std::vector<GradedMap>>& faces) {
  InftySimplicialModule x;
  for (const auto& c : levels) x.levels.push_back(Space{c, 1});
  const int top = static_cast<int>(levels.size()) - 1;
  auto face = [&](int n, int i) -> const GradedMap& {
    if (n >= static_cast<int>(faces.size()) || static_cast<int>(faces[n].size()) != n + 1)
      throw StructuralError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " faces");
    return faces[n][i];
  };
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      const GradedMap& f = face(n, i);
      check_shape(f, x.levels[n], x.levels[n - 1], 0, n, {i});
      if (!map_differential(f).is_zero())
        throw StructuralError("face " + std::to_string(i) + " at level " + std::to_string(n) + " is not a chain map");
    }
  for (int n = 2; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!(compose(face(n - 1, i), face(n, j)) == compose(face(n - 1, j - 1), face(n, i))))
          throw StructuralError("simplicial identity fails for (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                                ") at n=" + std::to_string(n));
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) x.set_face(n, {i}, face(n, i).with_degree_sign([](int m) { return m - 1; }));
  return x;
}

GradedMap strict_face(const InftySimplicialModule& x, int n, int i) {
  const GradedMap* f = x.faces.find(n, {i});
  if (!f) return GradedMap(x.levels[n], x.levels[n - 1], 0);
  return f->with_degree_sign([](int m) { return m - 1; });
}

}  // namespace infsimp
