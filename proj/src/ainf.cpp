#include "infsimp/ainf.hpp"

#include "infsimp/errors.hpp"
#include "infsimp/faces.hpp"

namespace infsimp {

namespace {

bool suspended(Convention c) { return c == Convention::suspended; }

void expect_shape(const GradedMap& m, const Space& src, const Space& tgt, int degree, const std::string& what) {
  if (!(m.src() == src) || !(m.tgt() == tgt) || m.degree() != degree)
    throw StructuralError(what + " has source " + m.src().describe() + ", target " + m.tgt().describe() +
                          ", degree " + std::to_string(m.degree()) + "; expected " + src.describe() + ", " +
                          tgt.describe() + ", " + std::to_string(degree));
}

int sign_of(int parity) { return parity ? -1 : 1; }

ExponentParams linear(int n, int m, int t) {
  ExponentParams p;
  p.n = n, p.m = m, p.t = t;
  return p;
}

ExponentParams parts(const std::vector<int>& ns, int m = 0, int i = 0) {
  ExponentParams p;
  p.m = m, p.i = i, p.ns = ns;
  return p;
}

void accumulate(GradedMap& acc, int sign, const GradedMap& term) {
  if (sign < 0) acc -= term;
  else acc += term;
}

// outer∘(1^{before}⊗mid⊗1^{after}) with the unit on `base`.
GradedMap linear_term(const GradedMap& outer, int before, const GradedMap& mid, int after, const ComplexPtr& base,
                      Exec exec) {
  const GradedMap id = GradedMap::identity(Space{base, 1});
  std::vector<const GradedMap*> fs(before, &id);
  fs.push_back(&mid);
  fs.insert(fs.end(), after, &id);
  return compose(outer, tensor(fs, base, base, exec), exec);
}

GradedMap product_term(const GradedMap& outer, const std::vector<const GradedMap*>& inner, const ComplexPtr& src,
                       const ComplexPtr& tgt, Exec exec) {
  return compose(outer, tensor(inner, src, tgt, exec), exec);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw StructuralError(what);
}

// Relation entries for n = −1 … top, with everything above `cap` skipped.
template <class F>
VerificationReport run_relations(const std::string& subject, const std::string& relation, int top, int cap,
                                 Convention conv, const AInfCheckOptions& opt, F&& residual_of) {
  VerificationReport rep;
  rep.subject = subject;
  const int last = std::max(top, -2) + 1;
  std::vector<RelationOutcome> out(last + 2);
  const long count = last + 2;
  auto params = [&](int n) {
    nlohmann::json p{{"n", n}};
    if (suspended(conv)) p["convention"] = "suspended";
    return p;
  };
#pragma omp parallel for schedule(dynamic) if (opt.exec == Exec::parallel)
  for (long i = 0; i < count; ++i) {
    const int n = static_cast<int>(i) - 1;
    if (n > top || n > cap) {
      out[i] = RelationOutcome{relation, params(n), Status::skipped, std::nullopt,
                               n > top ? "references operations beyond the stored truncation"
                                       : "above the requested arity cutoff"};
      continue;
    }
    out[i] = outcome_of(relation, params(n), residual_of(n, Exec::serial), opt.max_degree);
  }
  rep.entries = std::move(out);
  return rep;
}

int arity_cap(const AInfCheckOptions& opt, int offset) {
  return opt.max_arity < 0 ? 1 << 20 : opt.max_arity - offset;
}

}  // namespace

void AInfAlgebra::validate() const {
  if (!base) throw StructuralError("algebra without a base complex");
  for (std::size_t n = 0; n < ops.size(); ++n) {
    const int deg = suspended(convention) ? -1 : static_cast<int>(n);
    expect_shape(ops[n], Space{base, static_cast<int>(n) + 2}, Space{base, 1}, deg, "pi_" + std::to_string(n));
  }
}

void AInfMorphism::validate() const {
  require(source && target, "morphism without endpoints");
  require(source->convention == target->convention, "morphism endpoints use different conventions");
  for (std::size_t n = 0; n < comps.size(); ++n) {
    const int deg = suspended(convention()) ? 0 : static_cast<int>(n);
    expect_shape(comps[n], Space{source->base, static_cast<int>(n) + 1}, Space{target->base, 1}, deg,
                 "f_" + std::to_string(n));
  }
}

void AInfHomotopy::validate() const {
  require(f && g, "homotopy without endpoints");
  require(f->source->base == g->source->base && f->target->base == g->target->base,
          "homotopy between morphisms with different endpoints");
  for (std::size_t n = 0; n < comps.size(); ++n) {
    const int deg = suspended(convention()) ? 1 : static_cast<int>(n) + 1;
    expect_shape(comps[n], Space{f->source->base, static_cast<int>(n) + 1}, Space{f->target->base, 1}, deg,
                 "h_" + std::to_string(n));
  }
}

int algebra_top_relation(const AInfAlgebra& a) { return static_cast<int>(a.ops.size()) - 2; }

int morphism_top_relation(const AInfMorphism& f) {
  const int stored = static_cast<int>(f.comps.size()) - 2;
  const int ops = std::min(f.source->ops.size(), f.target->ops.size());
  return std::min(stored, ops - 1);
}

int homotopy_top_relation(const AInfHomotopy& h) {
  int top = static_cast<int>(h.comps.size()) - 2;
  top = std::min({top, static_cast<int>(h.f->comps.size()) - 2, static_cast<int>(h.g->comps.size()) - 2});
  const int ops = std::min(h.f->source->ops.size(), h.f->target->ops.size());
  return std::min(top, ops - 1);
}

GradedMap algebra_rhs(const AInfAlgebra& a, int n, Exec exec) {
  require(n >= -1 && n <= algebra_top_relation(a), "relation index out of the stored range");
  const bool sf = suspended(a.convention);
  GradedMap acc(Space{a.base, n + 3}, Space{a.base, 1}, sf ? -2 : n);
  for (int m = 0; m <= n; ++m)
    for (int t = 1; t <= m + 2; ++t) {
      const int sign = sf ? -1 : sign_of(sign_exponent(ExponentKind::ainf_relation, linear(n, m, t)));
      accumulate(acc, sign, linear_term(a.ops[m], t - 1, a.ops[n - m], m - t + 2, a.base, exec));
    }
  return acc;
}

GradedMap algebra_residual(const AInfAlgebra& a, int n, Exec exec) {
  return map_differential(a.ops[n + 1], a.ops[n + 1].degree(), exec) - algebra_rhs(a, n, exec);
}

GradedMap morphism_rhs(const AInfMorphism& f, int n, Exec exec) {
  require(n >= -1 && n <= morphism_top_relation(f), "relation index out of the stored range");
  const bool sf = suspended(f.convention());
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  GradedMap acc(Space{src.base, n + 2}, Space{tgt.base, 1}, sf ? -1 : n);
  for (int m = 0; m <= n; ++m)
    for (int t = 1; t <= m + 1; ++t) {
      const int sign = sf ? 1 : sign_of(sign_exponent(ExponentKind::morphism_linear, linear(n, m, t)));
      accumulate(acc, sign, linear_term(f.comps[m], t - 1, src.ops[n - m], m - t + 1, src.base, exec));
    }
  for (int m = 0; m <= n; ++m)
    for (const auto& ns : compositions(n - m, m + 2)) {
      std::vector<const GradedMap*> inner;
      for (int v : ns) inner.push_back(&f.comps[v]);
      const int sign = sf ? -1 : -sign_of(sign_exponent(ExponentKind::epsilon, parts(ns)));
      accumulate(acc, sign, product_term(tgt.ops[m], inner, src.base, tgt.base, exec));
    }
  return acc;
}

GradedMap morphism_residual(const AInfMorphism& f, int n, Exec exec) {
  const GradedMap& top = f.comps[n + 1];
  return map_differential(top, top.degree(), exec) - morphism_rhs(f, n, exec);
}

GradedMap homotopy_rhs(const AInfHomotopy& h, int n, Exec exec) {
  require(n >= -1 && n <= homotopy_top_relation(h), "relation index out of the stored range");
  const bool sf = suspended(h.convention());
  const auto& src = *h.f->source;
  const auto& tgt = *h.f->target;
  GradedMap acc = h.f->comps[n + 1] - h.g->comps[n + 1];
  for (int m = 0; m <= n; ++m)
    for (int t = 1; t <= m + 1; ++t) {
      const int sign = sf ? -1 : sign_of(sign_exponent(ExponentKind::homotopy_linear, linear(n, m, t)));
      accumulate(acc, sign, linear_term(h.comps[m], t - 1, src.ops[n - m], m - t + 1, src.base, exec));
    }
  for (int m = 0; m <= n; ++m)
    for (const auto& ns : compositions(n - m, m + 2))
      for (int i = 1; i <= m + 2; ++i) {
        std::vector<const GradedMap*> inner;
        for (int s = 1; s <= m + 2; ++s) {
          const auto& fam = s < i ? h.g->comps : s == i ? h.comps : h.f->comps;
          inner.push_back(&fam[ns[s - 1]]);
        }
        const int sign = sf ? -1 : sign_of(sign_exponent(ExponentKind::rho, parts(ns, m, i)));
        accumulate(acc, sign, product_term(tgt.ops[m], inner, src.base, tgt.base, exec));
      }
  return acc;
}

GradedMap homotopy_residual(const AInfHomotopy& h, int n, Exec exec) {
  const GradedMap& top = h.comps[n + 1];
  return map_differential(top, top.degree(), exec) - homotopy_rhs(h, n, exec);
}

VerificationReport check_ainf(const AInfAlgebra& a, const AInfCheckOptions& opt) {
  a.validate();
  return run_relations("ainf", "2.1", algebra_top_relation(a), arity_cap(opt, 3), a.convention, opt,
                       [&](int n, Exec e) { return algebra_residual(a, n, e); });
}

VerificationReport check_ainf_morphism(const AInfMorphism& f, const AInfCheckOptions& opt) {
  f.validate();
  return run_relations("ainf-morphism", "2.2", morphism_top_relation(f), arity_cap(opt, 2), f.convention(), opt,
                       [&](int n, Exec e) { return morphism_residual(f, n, e); });
}

VerificationReport check_ainf_homotopy(const AInfHomotopy& h, const AInfCheckOptions& opt) {
  h.validate();
  return run_relations("ainf-homotopy", "2.4", homotopy_top_relation(h), arity_cap(opt, 2), h.convention(), opt,
                       [&](int n, Exec e) { return homotopy_residual(h, n, e); });
}

GradedMap composition_component(const AInfMorphism& g, const AInfMorphism& f, int n, Exec exec) {
  require(n >= 0 && n < static_cast<int>(std::min(f.comps.size(), g.comps.size())),
          "composite component out of the stored range");
  const bool sf = suspended(f.convention());
  GradedMap acc(Space{f.source->base, n + 1}, Space{g.target->base, 1}, sf ? 0 : n);
  for (int m = 0; m <= n; ++m)
    for (const auto& ns : compositions(n - m, m + 1)) {
      std::vector<const GradedMap*> inner;
      for (int v : ns) inner.push_back(&f.comps[v]);
      const int sign = sf ? 1 : sign_of(sign_exponent(ExponentKind::epsilon, parts(ns)));
      accumulate(acc, sign, product_term(g.comps[m], inner, f.source->base, f.target->base, exec));
    }
  return acc;
}

AInfMorphism compose_ainf(const AInfMorphism& g, const AInfMorphism& f, Exec exec) {
  require(f.target->base == g.source->base, "composition of morphisms with mismatched endpoints");
  AInfMorphism r{f.source, g.target, {}};
  const int count = static_cast<int>(std::min(f.comps.size(), g.comps.size()));
  r.comps.resize(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int n = 0; n < count; ++n) r.comps[n] = composition_component(g, f, n, Exec::serial);
  return r;
}

AInfMorphism identity_ainf(const AlgebraPtr& a) {
  AInfMorphism r{a, a, {}};
  const bool sf = suspended(a->convention);
  for (int n = 0; n + 1 <= a->arity_cutoff(); ++n)
    r.comps.push_back(n == 0 ? GradedMap::identity(Space{a->base, 1})
                             : GradedMap(Space{a->base, n + 1}, Space{a->base, 1}, sf ? 0 : n));
  return r;
}

VerificationReport compare_ainf_morphisms(const AInfMorphism& a, const AInfMorphism& b, const std::string& relation) {
  VerificationReport rep;
  rep.subject = relation;
  const std::size_t count = std::min(a.comps.size(), b.comps.size());
  for (std::size_t n = 0; n < count; ++n)
    rep.entries.push_back(outcome_of(relation, {{"n", n}}, a.comps[n] - b.comps[n]));
  return rep;
}

namespace {

// (−1)^{N(N−1)/2} ξ^{⊗N} inverts η^{⊗N}.
GradedMap eta_inverse(const Suspension& s, int arity) {
  GradedMap x = s.xi_power(arity);
  if ((arity * (arity - 1) / 2) & 1) x *= Scalar(-1);
  return x;
}

GradedMap conjugate_up(const GradedMap& m, const Suspension& src, const Suspension& tgt, int arity) {
  return compose(tgt.xi, compose(m, src.eta_power(arity)));
}

GradedMap conjugate_down(const GradedMap& m, const Suspension& src, const Suspension& tgt, int arity) {
  return compose(tgt.eta, compose(m, eta_inverse(src, arity)));
}

}  // namespace

AInfAlgebra suspend_structure(const AInfAlgebra& a) {
  require(a.convention == Convention::standard, "structure is already suspended");
  auto s = suspension_of(a.base);
  AInfAlgebra r{s->shifted, {}, Convention::suspended};
  for (std::size_t n = 0; n < a.ops.size(); ++n)
    r.ops.push_back(conjugate_up(a.ops[n], *s, *s, static_cast<int>(n) + 2));
  return r;
}

AInfAlgebra desuspend_structure(const AInfAlgebra& sa) {
  require(sa.convention == Convention::suspended, "structure is not suspended");
  auto s = desuspension_of(sa.base);
  AInfAlgebra r{s->base, {}, Convention::standard};
  for (std::size_t n = 0; n < sa.ops.size(); ++n)
    r.ops.push_back(conjugate_down(sa.ops[n], *s, *s, static_cast<int>(n) + 2));
  return r;
}

AInfMorphism suspend_morphism(const AInfMorphism& f, const AlgebraPtr& ssrc, const AlgebraPtr& stgt) {
  auto s = suspension_of(f.source->base);
  auto t = suspension_of(f.target->base);
  require(ssrc->base == s->shifted && stgt->base == t->shifted, "endpoints are not the suspended algebras");
  AInfMorphism r{ssrc, stgt, {}};
  for (std::size_t n = 0; n < f.comps.size(); ++n)
    r.comps.push_back(conjugate_up(f.comps[n], *s, *t, static_cast<int>(n) + 1));
  return r;
}

AInfMorphism desuspend_morphism(const AInfMorphism& sf, const AlgebraPtr& src, const AlgebraPtr& tgt) {
  auto s = desuspension_of(sf.source->base);
  auto t = desuspension_of(sf.target->base);
  require(src->base == s->base && tgt->base == t->base, "endpoints are not the desuspended algebras");
  AInfMorphism r{src, tgt, {}};
  for (std::size_t n = 0; n < sf.comps.size(); ++n)
    r.comps.push_back(conjugate_down(sf.comps[n], *s, *t, static_cast<int>(n) + 1));
  return r;
}

AInfHomotopy suspend_homotopy(const AInfHomotopy& h, const AInfMorphismPtr& sf, const AInfMorphismPtr& sg) {
  auto s = suspension_of(h.f->source->base);
  auto t = suspension_of(h.f->target->base);
  AInfHomotopy r{sf, sg, {}};
  for (std::size_t n = 0; n < h.comps.size(); ++n)
    r.comps.push_back(conjugate_up(h.comps[n], *s, *t, static_cast<int>(n) + 1));
  return r;
}

}  // namespace infsimp
