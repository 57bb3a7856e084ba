#include <catch_amalgamated.hpp>

#include "infsimp/generate.hpp"
#include "infsimp/tensor_functor.hpp"

using namespace infsimp;

namespace {

GeneratorSpec spec(std::uint64_t seed, int cutoff = 5, std::vector<int> dims = {1, 1}) {
  GeneratorSpec s;
  s.seed = seed;
  s.dims = std::move(dims);
  s.arity_cutoff = cutoff;
  return s;
}

bool all_pass(const VerificationReport& r) { return r.ok() && r.count(Status::pass) > 0; }

std::string first_failure(const VerificationReport& r) {
  for (const auto& e : r.entries)
    if (e.status == Status::fail) return e.relation + " " + e.params.dump();
  return "none";
}

struct Pair {
  ConeAlgebra a, b;
  AInfMorphismPtr f, g;
  AInfHomotopy h;
};

Pair make_pair(std::uint64_t seed, int cutoff = 5) {
  Pair p{generate_cone_algebra(spec(seed, cutoff)), generate_cone_algebra(spec(seed + 1, cutoff)), {}, {}, {}};
  p.f = std::make_shared<const AInfMorphism>(
      extend_morphism(spec(seed + 2, cutoff), p.a.algebra, p.b.algebra, &p.b.cone.contraction));
  p.g = std::make_shared<const AInfMorphism>(
      extend_morphism(spec(seed + 3, cutoff), p.a.algebra, p.b.algebra, &p.b.cone.contraction));
  p.h = extend_homotopy(spec(seed + 4, cutoff), p.f, p.g, &p.b.cone.contraction);
  return p;
}

struct Images {
  ModulePtr ta, tb;
  MorphismPtr tf, tg;
  InftyHomotopy th;
};

Images images(const Pair& p, int levels, const FunctorOptions& o = {}) {
  Images im;
  im.ta = tensor_object(p.a.algebra, levels, o);
  im.tb = tensor_object(p.b.algebra, levels, o);
  im.tf = std::make_shared<const InftyMorphism>(tensor_morphism(*p.f, im.ta, im.tb, o));
  im.tg = std::make_shared<const InftyMorphism>(tensor_morphism(*p.g, im.ta, im.tb, o));
  im.th = tensor_homotopy(p.h, im.tf, im.tg, o);
  return im;
}

GradedMap signed_word(std::vector<const GradedMap*> fs, const ComplexPtr& s, const ComplexPtr& t, int k, int extra) {
  return tensor(fs, s, t).with_degree_sign([&](int q) { return k * (q - 1) + extra; });
}

// Operations of the right shapes with no relation imposed.
AlgebraPtr random_algebra(Rng& rng, const ComplexPtr& a, int cutoff) {
  auto r = std::make_shared<AInfAlgebra>(AInfAlgebra{a, {}, Convention::standard});
  for (int n = 0; n + 2 <= cutoff; ++n) r->ops.push_back(random_map(rng, Space{a, n + 2}, Space{a, 1}, n, 2, 60));
  return r;
}

AInfMorphismPtr random_morphism(Rng& rng, const AlgebraPtr& s, const AlgebraPtr& t, int count) {
  auto f = std::make_shared<AInfMorphism>(AInfMorphism{s, t, {}});
  for (int n = 0; n < count; ++n) f->comps.push_back(random_map(rng, Space{s->base, n + 1}, Space{t->base, 1}, n, 2, 60));
  return f;
}

// Stored component, or the zero map shaped like `expected`.
GradedMap stored(const ComponentFamily& fam, int n, const IndexTuple& t, const GradedMap& expected) {
  const GradedMap* m = fam.find(n, t);
  return m ? *m : GradedMap(expected.src(), expected.tgt(), expected.degree());
}

}  // namespace

TEST_CASE("run decomposition", "[functor]") {
  auto r = decompose_runs(15, {2, 3, 6, 7, 8});
  REQUIRE(r.has_value());
  REQUIRE(r->lengths == std::vector<int>{2, 3});
  REQUIRE(r->starts == std::vector<int>{2, 6});
  REQUIRE(r->gaps == std::vector<int>{2, 2, 7});
  REQUIRE(r->k() == 5);
  REQUIRE_FALSE(decompose_runs(4, {0, 2}).has_value());
  REQUIRE_FALSE(decompose_runs(4, {1, 4}).has_value());
  REQUIRE_FALSE(decompose_runs(4, {}).has_value());
  REQUIRE(decompose_runs(5, {1, 2, 3, 4})->gaps == std::vector<int>{1, 1});
  REQUIRE(decompose_runs(7, {1, 3, 5})->gaps == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("tensor module", "[functor]") {
  SECTION("strict algebra") {
    auto a = std::make_shared<const AInfAlgebra>(make_strict_dga("upper-triangular", 5));
    auto t = tensor_object(a, 4);
    REQUIRE(t->faces.find(2, {0}) == nullptr);
    REQUIRE(t->faces.find(2, {2}) == nullptr);
    REQUIRE(*t->faces.find(2, {1}) == a->ops[0].with_degree_sign([](int q) { return q - 1; }));
    for (const auto& [key, m] : t->faces.entries())
      if (key.tuple.size() >= 2) REQUIRE(m.is_zero());
    REQUIRE(all_pass(check_faces(*t)));
  }
  SECTION("tensor of two strict algebras") {
    auto a = std::make_shared<const AInfAlgebra>(make_strict_dga("tensor", 4));
    REQUIRE(all_pass(check_faces(*tensor_object(a, 4))));
  }
  SECTION("face layout") {
    auto g = generate_cone_algebra(spec(3));
    auto t = tensor_object(g.algebra, 5);
    const auto& a = g.algebra;
    const GradedMap id = GradedMap::identity(Space{a->base, 1});
    const auto e23 = signed_word({&id, &a->ops[1], &id}, a->base, a->base, 2, 0);
    REQUIRE(stored(t->faces, 5, {2, 3}, e23) == e23);
    REQUIRE(t->faces.find(5, {1, 3}) == nullptr);
    REQUIRE(t->faces.find(5, {4, 5}) == nullptr);  // j = 4 > n − k
    REQUIRE(t->faces.find(5, {0, 1}) == nullptr);
  }
  SECTION("extended algebras") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto g = generate_cone_algebra(spec(seed));
      auto rep = check_faces(*tensor_object(g.algebra, 5));
      INFO(first_failure(rep));
      REQUIRE(all_pass(rep));
    }
  }
  SECTION("refusals") {
    auto a = std::make_shared<AInfAlgebra>(make_strict_dga("upper-triangular", 3));
    REQUIRE_THROWS_AS(tensor_object(a, 5), StructuralError);
    SparseMatrix b = *a->ops[0].block(0);
    b.add(1, 6, Scalar(1));
    a->ops[0].set_block(0, b);
    try {
      (void)tensor_object(a, 3);
      FAIL("accepted an invalid algebra");
    } catch (const FunctorRefusal& e) {
      REQUIRE_FALSE(e.report().ok());
    }
    FunctorOptions o;
    o.validate = false;
    REQUIRE_FALSE(check_faces(*tensor_object(a, 3, o)).ok());
  }
}

TEST_CASE("morphism and homotopy images", "[functor]") {
  auto p = make_pair(10);
  auto im = images(p, 5);
  const auto& f = *p.f;
  const auto& g = *p.g;
  const auto& sb = p.a.algebra->base;
  const auto& tb = p.b.algebra->base;
  SECTION("layout") {
    REQUIRE(*im.tf->components.find(3, {}) == tensor({&f.comps[0], &f.comps[0], &f.comps[0]}, sb, tb));
    REQUIRE(im.tf->components.find(4, {0, 2}) == nullptr);
    REQUIRE(im.tf->components.find(4, {1, 4}) == nullptr);
    // runs (1,2),(4): gaps 1, 1, 1; γ = 2·1
    const auto e124 = signed_word({&f.comps[2], &f.comps[1]}, sb, tb, 3, 2);
    REQUIRE(stored(im.tf->components, 5, {1, 2, 4}, e124) == e124);
    // runs (2),(4): gaps 2, 1, 1
    const auto e24 = signed_word({&f.comps[0], &f.comps[1], &f.comps[1]}, sb, tb, 2, 1);
    REQUIRE_FALSE(e24.is_zero());
    REQUIRE(stored(im.tf->components, 5, {2, 4}, e24) == e24);
    GradedMap h3 = tensor({&p.h.comps[0], &f.comps[0], &f.comps[0]}, sb, tb) +
                   tensor({&g.comps[0], &p.h.comps[0], &f.comps[0]}, sb, tb) +
                   tensor({&g.comps[0], &g.comps[0], &p.h.comps[0]}, sb, tb);
    REQUIRE(*im.th.components.find(3, {}) == h3);
    // runs (2),(4) at level 5: g0⊗h1⊗f1 − g0⊗g1⊗h1 + h0⊗f1⊗f1
    GradedMap h24 = tensor({&g.comps[0], &p.h.comps[1], &f.comps[1]}, sb, tb) -
                    tensor({&g.comps[0], &g.comps[1], &p.h.comps[1]}, sb, tb) +
                    tensor({&p.h.comps[0], &f.comps[1], &f.comps[1]}, sb, tb);
    const auto eh = h24.with_degree_sign([](int q) { return 2 * (q - 1) + 1; });
    REQUIRE_FALSE(eh.is_zero());
    REQUIRE(stored(im.th.components, 5, {2, 4}, eh) == eh);
  }
  SECTION("relations hold") {
    auto rf = check_morphism(*im.tf);
    INFO(first_failure(rf));
    REQUIRE(all_pass(rf));
    REQUIRE(all_pass(check_morphism(*im.tg)));
    auto rh = check_homotopy(im.th);
    INFO(first_failure(rh));
    REQUIRE(all_pass(rh));
  }
  SECTION("serial and parallel agree") {
    FunctorOptions o;
    o.exec = Exec::serial;
    auto s = images(p, 5, o);
    REQUIRE(s.ta->faces == im.ta->faces);
    REQUIRE(s.tf->components == im.tf->components);
    REQUIRE(s.th.components == im.th.components);
  }
  SECTION("zero homotopy") {
    GeneratorSpec s = spec(1);
    s.diversify = false;
    auto z = extend_homotopy(s, p.f, p.f, &p.b.cone.contraction);
    auto th = tensor_homotopy(z, im.tf, im.tf);
    REQUIRE(th.components.entries().empty());
    REQUIRE(check_homotopy(th).ok());
  }
  SECTION("every sign defect is caught") {
    for (auto m : all_mutations()) {
      INFO(to_string(m));
      FunctorOptions o;
      o.mutation = m;
      auto mm = images(p, 4, o);
      const bool ok = check_faces(*mm.ta).ok() && check_faces(*mm.tb).ok() && check_morphism(*mm.tf).ok() &&
                      check_morphism(*mm.tg).ok() && check_homotopy(mm.th).ok();
      REQUIRE_FALSE(ok);
    }
  }
}

TEST_CASE("functoriality", "[functor]") {
  auto p = make_pair(40);
  auto c = generate_cone_algebra(spec(44));
  auto k = extend_morphism(spec(45), p.b.algebra, c.algebra, &c.cone.contraction);
  auto rep = verify_functoriality(*p.f, k, 5);
  INFO(first_failure(rep));
  REQUIRE(all_pass(rep));
  REQUIRE(all_pass(verify_functoriality(*p.f, identity_ainf(p.b.algebra), 4)));
  REQUIRE(all_pass(verify_identity(p.a.algebra, 5)));
  auto strict = std::make_shared<const AInfAlgebra>(make_strict_dga("exterior", 5));
  REQUIRE(all_pass(verify_identity(strict, 5)));
  auto ts = tensor_object(strict, 4);
  auto ti = tensor_morphism(identity_ainf(strict), ts, ts);
  for (const auto& [key, m] : ti.components.entries()) REQUIRE(key.tuple.empty());
}

TEST_CASE("rewritten relations", "[functor]") {
  SECTION("generated instances") {
    auto p = make_pair(30);
    auto rep = verify_rewrites(*p.f, 3);
    INFO(first_failure(rep));
    REQUIRE(all_pass(rep));
    auto rh = verify_rewrites(p.h, 3);
    INFO(first_failure(rh));
    REQUIRE(all_pass(rh));
  }
  SECTION("arbitrary families") {
    Rng rng(6);
    auto base = Complex::create({1, 2, 1}, {}, "R");
    auto a = random_algebra(rng, base, 6);
    auto b = random_algebra(rng, base, 6);
    auto f = random_morphism(rng, a, b, 6);
    auto g = random_morphism(rng, a, b, 6);
    AInfHomotopy h{f, g, {}};
    for (int n = 0; n < 6; ++n) h.comps.push_back(random_map(rng, Space{base, n + 1}, Space{base, 1}, n + 1, 2, 60));
    auto rep = verify_rewrites(*f, 4);
    INFO(first_failure(rep));
    REQUIRE(all_pass(rep));
    auto rh = verify_rewrites(h, 4);
    INFO(first_failure(rh));
    REQUIRE(all_pass(rh));
  }
  SECTION("strict source and target") {
    // π_{>=1} = 0: d(f_1) = f_0π_0 − π_0(f_0⊗f_0)
    auto a = std::make_shared<const AInfAlgebra>(make_strict_dga("upper-triangular", 4));
    Rng rng(2);
    auto f = random_morphism(rng, a, a, 4);
    const auto& b = a->base;
    REQUIRE(rewritten_morphism_rhs(*f, 0) ==
            compose(f->comps[0], a->ops[0]) - compose(a->ops[0], tensor({&f->comps[0], &f->comps[0]}, b, b)));
    REQUIRE(rewritten_morphism_rhs(*f, 0) == morphism_rhs(*f, 0));
  }
}

TEST_CASE("transported homotopy equivalence", "[functor]") {
  auto a = generate_cone_algebra(spec(50));
  auto b = generate_cone_algebra(spec(51));
  HomotopyEquivalence e;
  e.phi = std::make_shared<const AInfMorphism>(extend_morphism(spec(52), a.algebra, b.algebra, &b.cone.contraction));
  e.psi = std::make_shared<const AInfMorphism>(extend_morphism(spec(53), b.algebra, a.algebra, &a.cone.contraction));
  auto psiphi = std::make_shared<const AInfMorphism>(compose_ainf(*e.psi, *e.phi));
  auto phipsi = std::make_shared<const AInfMorphism>(compose_ainf(*e.phi, *e.psi));
  auto ida = std::make_shared<const AInfMorphism>(identity_ainf(a.algebra));
  auto idb = std::make_shared<const AInfMorphism>(identity_ainf(b.algebra));
  e.h = extend_homotopy(spec(54), psiphi, ida, &a.cone.contraction);
  e.h2 = extend_homotopy(spec(55), phipsi, idb, &b.cone.contraction);
  auto rep = verify_transported_equivalence(e, 4);
  INFO(first_failure(rep));
  REQUIRE(all_pass(rep));

  SECTION("a wrong witness is rejected") {
    HomotopyEquivalence bad = e;
    bad.h2 = extend_homotopy(spec(56), phipsi, phipsi, &b.cone.contraction);
    REQUIRE_FALSE(verify_transported_equivalence(bad, 4).ok());
  }
}
