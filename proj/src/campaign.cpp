#include "infsimp/campaign.hpp"

#include <algorithm>

namespace infsimp {

namespace {

GeneratorSpec gen_spec(const CorpusSpec& c, std::uint64_t seed) {
  GeneratorSpec s;
  s.seed = seed;
  s.ring = c.ring;
  s.dims = c.dims;
  s.arity_cutoff = c.arity_cutoff;
  return s;
}

int levels_of(const AInfAlgebra& a, int max_level) { return std::min(max_level, static_cast<int>(a.ops.size()) + 1); }
int levels_of(const AInfMorphism& f, int max_level) {
  return std::min({levels_of(*f.source, max_level), levels_of(*f.target, max_level), static_cast<int>(f.comps.size())});
}
int levels_of(const AInfHomotopy& h, int max_level) {
  return std::min({levels_of(*h.f, max_level), levels_of(*h.g, max_level), static_cast<int>(h.comps.size())});
}

// T-images built once per (object, level count).
class ImageCache {
 public:
  explicit ImageCache(FunctorOptions fo) : fo_(fo) {}
  ModulePtr module(const AlgebraPtr& a, int levels) {
    auto& slot = modules_[{a.get(), levels}];
    if (!slot) slot = tensor_object(a, levels, fo_);
    return slot;
  }
  MorphismPtr morphism(const AInfMorphismPtr& f, int levels) {
    auto& slot = morphisms_[{f.get(), levels}];
    if (!slot)
      slot = std::make_shared<const InftyMorphism>(
          tensor_morphism(*f, module(f->source, levels), module(f->target, levels), fo_));
    return slot;
  }
  HomotopyPtr homotopy(const AInfHomotopyPtr& h, int levels) {
    auto& slot = homotopies_[{h.get(), levels}];
    if (!slot)
      slot = std::make_shared<const InftyHomotopy>(
          tensor_homotopy(*h, morphism(h->f, levels), morphism(h->g, levels), fo_));
    return slot;
  }

 private:
  FunctorOptions fo_;
  std::map<std::pair<const void*, int>, ModulePtr> modules_;
  std::map<std::pair<const void*, int>, MorphismPtr> morphisms_;
  std::map<std::pair<const void*, int>, HomotopyPtr> homotopies_;
};

std::string image_name(const std::string& name, int levels, int default_levels) {
  std::string n = "T(" + name + ")";
  return levels == default_levels ? n : n + "@" + std::to_string(levels);
}

}  // namespace

VerificationReport tagged(VerificationReport r, const std::string& object) {
  for (auto& e : r.entries) {
    if (!e.params.is_object()) e.params = nlohmann::json::object();
    e.params["object"] = object;
  }
  return r;
}

Instance build_corpus(const CorpusSpec& spec) {
  if (spec.extended < 3) throw StructuralError("the corpus needs at least three extended algebras");
  Instance inst;
  inst.ring = spec.ring;
  for (const auto& name : strict_dga_names())
    inst.algebras[name] = std::make_shared<const AInfAlgebra>(make_strict_dga(name, spec.arity_cutoff, spec.ring));

  std::vector<ConeAlgebra> e;
  for (int i = 0; i < spec.extended; ++i) {
    e.push_back(generate_cone_algebra(gen_spec(spec, spec.seed + i)));
    inst.algebras["E" + std::to_string(i + 1)] = e.back().algebra;
  }
  auto morphism = [&](int from, int to, std::uint64_t seed) {
    return std::make_shared<const AInfMorphism>(
        extend_morphism(gen_spec(spec, seed), e[from].algebra, e[to].algebra, &e[to].cone.contraction));
  };
  auto homotopy = [&](const AInfMorphismPtr& f, const AInfMorphismPtr& g, int target, std::uint64_t seed) {
    return std::make_shared<const AInfHomotopy>(extend_homotopy(gen_spec(spec, seed), f, g, &e[target].cone.contraction));
  };
  const std::uint64_t base = spec.seed + 1000;
  inst.morphisms["f"] = morphism(0, 1, base + 1);
  inst.morphisms["f2"] = morphism(0, 1, base + 2);
  inst.morphisms["g"] = morphism(1, 2, base + 3);
  inst.homotopies["h"] = homotopy(inst.morphisms["f"], inst.morphisms["f2"], 1, base + 4);
  inst.morphisms["g2"] = morphism(1, 2, base + 9);
  inst.homotopies["hg"] = homotopy(inst.morphisms["g"], inst.morphisms["g2"], 2, base + 10);

  const int x = spec.extended - 2, y = spec.extended - 1;
  const std::string ex = "E" + std::to_string(x + 1), ey = "E" + std::to_string(y + 1);
  auto phi = morphism(x, y, base + 5);
  auto psi = morphism(y, x, base + 6);
  auto psiphi = std::make_shared<const AInfMorphism>(compose_ainf(*psi, *phi, Exec::serial));
  auto phipsi = std::make_shared<const AInfMorphism>(compose_ainf(*phi, *psi, Exec::serial));
  auto idx = std::make_shared<const AInfMorphism>(identity_ainf(e[x].algebra));
  auto idy = std::make_shared<const AInfMorphism>(identity_ainf(e[y].algebra));
  inst.morphisms["phi"] = phi;
  inst.morphisms["psi"] = psi;
  inst.morphisms["psi.phi"] = psiphi;
  inst.morphisms["phi.psi"] = phipsi;
  inst.morphisms["1." + ex] = idx;
  inst.morphisms["1." + ey] = idy;
  inst.homotopies["k"] = homotopy(psiphi, idx, x, base + 7);
  inst.homotopies["k2"] = homotopy(phipsi, idy, y, base + 8);

  inst.metadata = {{"generator", "corpus"},
                   {"seed", spec.seed},
                   {"dims", spec.dims},
                   {"arity_cutoff", spec.arity_cutoff},
                   {"equivalences", nlohmann::json::array({{{"phi", "phi"}, {"psi", "psi"}, {"h", "k"}, {"h2", "k2"}}})}};
  return inst;
}

std::vector<std::pair<std::string, HomotopyEquivalence>> equivalences(const Instance& inst) {
  std::vector<std::pair<std::string, HomotopyEquivalence>> out;
  if (!inst.metadata.contains("equivalences")) return out;
  const auto& list = inst.metadata["equivalences"];
  if (!list.is_array()) throw InputError("/metadata/equivalences", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "/metadata/equivalences/" + std::to_string(i);
    auto get = [&](const char* key) -> std::string {
      if (!list[i].is_object() || !list[i].contains(key) || !list[i][key].is_string())
        throw InputError(p + "/" + key, "expected a name");
      return list[i][key].get<std::string>();
    };
    auto morphism = [&](const char* key) {
      auto it = inst.morphisms.find(get(key));
      if (it == inst.morphisms.end()) throw InputError(p + "/" + key, "unknown morphism");
      return it->second;
    };
    auto homotopy = [&](const char* key) {
      auto it = inst.homotopies.find(get(key));
      if (it == inst.homotopies.end()) throw InputError(p + "/" + key, "unknown homotopy");
      return *it->second;
    };
    HomotopyEquivalence e{morphism("phi"), morphism("psi"), homotopy("h"), homotopy("h2")};
    out.emplace_back(get("phi") + "/" + get("psi"), std::move(e));
  }
  return out;
}

VerificationReport check_structures(const Instance& inst, const CampaignOptions& opt) {
  VerificationReport rep;
  rep.subject = "structures";
  AInfCheckOptions co{opt.max_arity, opt.max_degree, opt.exec};
  for (const auto& [n, a] : inst.algebras) rep.append(tagged(check_ainf(*a, co), n));
  for (const auto& [n, f] : inst.morphisms) rep.append(tagged(check_ainf_morphism(*f, co), n));
  for (const auto& [n, h] : inst.homotopies) rep.append(tagged(check_ainf_homotopy(*h, co), n));
  return rep;
}

VerificationReport check_theorems(const Instance& inst, const CampaignOptions& opt) {
  VerificationReport rep;
  rep.subject = "theorems";
  FunctorOptions fo;
  fo.exec = opt.exec;
  fo.mutation = opt.mutation;
  fo.validate = false;
  ImageCache cache(fo);
  CheckOptions co;
  co.max_degree = opt.max_degree;
  co.exec = opt.exec;
  for (const auto& [n, a] : inst.algebras) {
    const int l = levels_of(*a, opt.max_level);
    rep.append(tagged(check_faces(*cache.module(a, l), co), "T(" + n + ")"));
    rep.append(tagged(verify_identity(a, l, opt.exec), "T(1." + n + ")"));
  }
  for (const auto& [n, f] : inst.morphisms) {
    const int l = levels_of(*f, opt.max_level);
    rep.append(tagged(check_morphism(*cache.morphism(f, l), co), "T(" + n + ")"));
    rep.append(tagged(verify_rewrites(*f, std::min(l - 2, 4), opt.exec), n));
  }
  for (const auto& [nf, f] : inst.morphisms)
    for (const auto& [ng, g] : inst.morphisms) {
      if (f->target != g->source) continue;
      const int l = std::min(levels_of(*f, opt.max_level), levels_of(*g, opt.max_level));
      rep.append(tagged(verify_functoriality(*f, *g, l, opt.exec), "T(" + ng + " o " + nf + ")"));
    }
  for (const auto& [n, h] : inst.homotopies) {
    const int l = levels_of(*h, opt.max_level);
    rep.append(tagged(check_homotopy(*cache.homotopy(h, l), co), "T(" + n + ")"));
    rep.append(tagged(verify_rewrites(*h, std::min(l - 2, 4), opt.exec), n));
  }
  for (const auto& [n, e] : equivalences(inst)) {
    const int l = std::min({levels_of(*e.phi, opt.max_level), levels_of(*e.psi, opt.max_level),
                            levels_of(e.h, opt.max_level), levels_of(e.h2, opt.max_level)});
    rep.append(tagged(verify_transported_equivalence(e, l, co), n));
  }
  return rep;
}

VerificationReport check_suspension(const Instance& inst, int max_n, Exec exec) {
  VerificationReport rep;
  rep.subject = "suspension";
  std::map<const void*, AlgebraPtr> sa;
  std::map<const void*, AInfMorphismPtr> sf;
  auto algebra = [&](const AlgebraPtr& a) {
    auto& slot = sa[a.get()];
    if (!slot) slot = std::make_shared<const AInfAlgebra>(suspend_structure(*a));
    return slot;
  };
  auto morphism = [&](const AInfMorphismPtr& f) {
    auto& slot = sf[f.get()];
    if (!slot) slot = std::make_shared<const AInfMorphism>(suspend_morphism(*f, algebra(f->source), algebra(f->target)));
    return slot;
  };
  auto compare = [&](const VerificationReport& base, const VerificationReport& susp, const std::string& relation,
                     const std::string& object) {
    for (const auto& b : base.entries) {
      const int n = b.params.value("n", -2);
      if (n > max_n) continue;
      auto it = std::find_if(susp.entries.begin(), susp.entries.end(),
                             [&](const RelationOutcome& s) { return s.params.value("n", -2) == n; });
      RelationOutcome o;
      o.relation = relation + "~S";
      o.params = {{"object", object}, {"n", n}, {"base", to_string(b.status)}};
      if (it == susp.entries.end()) {
        o.status = Status::fail;
        o.note = "no suspended counterpart";
      } else {
        o.params["suspended"] = to_string(it->status);
        if (b.status == Status::skipped && it->status == Status::skipped)
          o.status = Status::skipped;
        else
          o.status = b.status == it->status ? Status::pass : Status::fail;
      }
      rep.entries.push_back(std::move(o));
    }
  };
  AInfCheckOptions co;
  co.exec = exec;
  co.max_arity = max_n + 3;
  for (const auto& [n, a] : inst.algebras) compare(check_ainf(*a, co), check_ainf(*algebra(a), co), "2.1", n);
  co.max_arity = max_n + 2;
  for (const auto& [n, f] : inst.morphisms)
    compare(check_ainf_morphism(*f, co), check_ainf_morphism(*morphism(f), co), "2.2", n);
  for (const auto& [n, h] : inst.homotopies) {
    const auto sh = suspend_homotopy(*h, morphism(h->f), morphism(h->g));
    compare(check_ainf_homotopy(*h, co), check_ainf_homotopy(sh, co), "2.4", n);
  }
  return rep;
}

Instance apply_functor(const Instance& inst, int max_level, const FunctorOptions& opt) {
  ImageCache cache(opt);
  Instance out;
  out.ring = inst.ring;
  out.metadata = {{"generator", "functor"}, {"max_level", max_level}};
  std::map<const void*, std::string> algebra_names;
  std::map<const void*, int> algebra_levels;
  for (const auto& [n, a] : inst.algebras) {
    const int l = levels_of(*a, max_level);
    out.modules[image_name(n, l, l)] = cache.module(a, l);
    algebra_names[a.get()] = n;
    algebra_levels[a.get()] = l;
  }
  auto module_name = [&](const AlgebraPtr& a, int l) {
    auto it = algebra_names.find(a.get());
    if (it == algebra_names.end()) return std::string{};  // serialized under a generated name
    const std::string name = image_name(it->second, l, algebra_levels[a.get()]);
    out.modules[name] = cache.module(a, l);
    return name;
  };
  for (const auto& [n, f] : inst.morphisms) {
    const int l = levels_of(*f, max_level);
    module_name(f->source, l);
    module_name(f->target, l);
    out.module_morphisms[image_name(n, l, levels_of(*f, max_level))] = cache.morphism(f, l);
  }
  for (const auto& [n, h] : inst.homotopies) {
    const int l = levels_of(*h, max_level);
    module_name(h->f->source, l);
    module_name(h->f->target, l);
    // endpoints at the homotopy's level count, named after their morphisms when listed
    for (const auto& m : {h->f, h->g})
      for (const auto& [mn, mp] : inst.morphisms)
        if (mp == m) out.module_morphisms[image_name(mn, l, levels_of(*m, max_level))] = cache.morphism(m, l);
    out.module_homotopies["T(" + n + ")"] = cache.homotopy(h, l);
  }
  return out;
}

}  // namespace infsimp
