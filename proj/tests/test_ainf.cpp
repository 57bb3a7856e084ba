#include <catch_amalgamated.hpp>

#include "infsimp/ainf.hpp"
#include "infsimp/errors.hpp"
#include "infsimp/generate.hpp"
#include "infsimp/symbolic.hpp"

using namespace infsimp;

namespace {

GeneratorSpec small_spec(std::uint64_t seed, int cutoff = 5) {
  GeneratorSpec s;
  s.seed = seed;
  s.dims = {1, 1};
  s.arity_cutoff = cutoff;
  return s;
}

// Arbitrary operations of the right degrees; no relation is expected to hold.
AInfAlgebra random_algebra(Rng& rng, const ComplexPtr& a, int cutoff) {
  AInfAlgebra r{a, {}, Convention::standard};
  for (int n = 0; n + 2 <= cutoff; ++n) r.ops.push_back(random_map(rng, Space{a, n + 2}, Space{a, 1}, n, 2, 60));
  return r;
}

AInfMorphism random_morphism(Rng& rng, const AlgebraPtr& s, const AlgebraPtr& t, int count, int shift = 0) {
  AInfMorphism f{s, t, {}};
  for (int n = 0; n < count; ++n) f.comps.push_back(random_map(rng, Space{s->base, n + 1}, Space{t->base, 1}, n + shift, 2, 60));
  return f;
}

bool all_pass(const VerificationReport& r) { return r.ok() && r.count(Status::pass) > 0; }

}  // namespace

TEST_CASE("strict algebras", "[ainf]") {
  for (const auto& name : strict_dga_names()) {
    INFO(name);
    auto a = make_strict_dga(name, 5);
    auto rep = check_ainf(a);
    REQUIRE(all_pass(rep));
    REQUIRE(rep.count(Status::skipped) == 1);
  }
  SECTION("n = -1 is d(pi_0) = 0 and n = 0 is associativity") {
    auto a = make_strict_dga("upper-triangular", 3);
    REQUIRE(algebra_residual(a, -1).is_zero());
    REQUIRE(algebra_residual(a, 0).is_zero());
  }
  SECTION("a non-associative product fails at n = 0") {
    auto a = make_strict_dga("upper-triangular", 4);
    SparseMatrix b = *a.ops[0].block(0);
    b.add(1, 6, Scalar(1));  // e11·e00 = e01
    a.ops[0].set_block(0, b);
    auto rep = check_ainf(a);
    REQUIRE_FALSE(rep.ok());
    REQUIRE(rep.entries[1].status == Status::fail);
    REQUIRE(rep.entries[1].params["n"] == 0);
    REQUIRE(rep.entries[1].residual.has_value());
  }
  SECTION("exterior square vanishes") {
    auto a = make_strict_dga("exterior", 2);
    const auto* b = a.ops[0].block(2);
    REQUIRE((b == nullptr || b->is_zero()));
  }
  SECTION("shape validation") {
    auto a = make_strict_dga("exterior", 3);
    a.ops[1] = GradedMap(Space{a.base, 3}, Space{a.base, 1}, 0);
    REQUIRE_THROWS_AS(check_ainf(a), StructuralError);
  }
}

TEST_CASE("cones", "[generate]") {
  SECTION("rank-1 degree-0 module") {
    auto c = Complex::create({1}, {});
    auto k = cone_of_identity(c, "K");
    REQUIRE(k.complex->dims() == std::vector<int>{1, 1});
    REQUIRE(k.complex->differential().at(1) == SparseMatrix::identity(1));
  }
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    Rng rng(seed);
    auto c = random_complex(rng, {2, 3, 2}, Ring::rationals(), 2, 60, "C");
    auto k = cone_of_identity(c, "K");
    const Space sp{k.complex, 1};
    auto dk = GradedMap::differential(sp);
    REQUIRE(compose(dk, k.contraction) + compose(k.contraction, dk) == GradedMap::identity(sp));
    // acyclic: rank d_{q+1} = dim ker d_q in every degree
    for (int q = 0; q <= k.complex->max_degree(); ++q) {
      auto it = k.complex->differential().find(q);
      const std::size_t ker = it == k.complex->differential().end()
                                  ? static_cast<std::size_t>(k.complex->dim(q))
                                  : kernel_basis(it->second).size();
      auto up = k.complex->differential().find(q + 1);
      REQUIRE(ker == (up == k.complex->differential().end() ? 0 : rank(up->second)));
    }
  }
}

TEST_CASE("extended algebras", "[generate][ainf]") {
  bool pi1 = false, pi2 = false;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = generate_cone_algebra(small_spec(seed));
    REQUIRE(all_pass(check_ainf(*g.algebra)));
    REQUIRE(g.telemetry.nonzero.size() == 4);
    pi1 = pi1 || g.telemetry.nonzero[1];
    pi2 = pi2 || g.telemetry.nonzero[2];
    REQUIRE(g.telemetry.linear_solves == 0);
  }
  REQUIRE(pi1);
  REQUIRE(pi2);

  SECTION("determinism") {
    auto a = generate_cone_algebra(small_spec(9));
    auto b = generate_cone_algebra(small_spec(9));
    REQUIRE(a.cone.complex->same_structure(*b.cone.complex));
    for (std::size_t n = 0; n < a.algebra->ops.size(); ++n)
      REQUIRE(a.algebra->ops[n].blocks() == b.algebra->ops[n].blocks());
  }
  SECTION("zero product extends by zero") {
    auto k = cone_of_identity(Complex::create({1, 1}, {}), "K");
    GeneratorSpec s = small_spec(3);
    s.diversify = false;
    AInfAlgebra a{k.complex, {GradedMap(Space{k.complex, 2}, Space{k.complex, 1}, 0)}, Convention::standard};
    for (int n = 0; n + 3 <= s.arity_cutoff; ++n) {
      a.ops.emplace_back(Space{k.complex, n + 3}, Space{k.complex, 1}, n + 1);
      a.ops.back() = solve_with_contraction(algebra_rhs(a, n), k.contraction);
      REQUIRE(a.ops.back().is_zero());
    }
  }
  SECTION("linear-solver path on a contractible base without a contraction") {
    auto base = make_strict_dga("acyclic-exterior", 2).base;
    Telemetry tel;
    auto a = extend_ainf(small_spec(5, 4), base, nullptr, &tel);
    REQUIRE(tel.linear_solves == 2);
    REQUIRE(all_pass(check_ainf(a)));
  }
  SECTION("hom equation solver agrees with the contraction") {
    auto g = generate_cone_algebra(small_spec(2, 4));
    GradedMap rhs = algebra_rhs(*g.algebra, 1);
    auto sol = solve_hom_equation(rhs, 2);
    REQUIRE(sol.has_value());
    REQUIRE(map_differential(*sol) == rhs);
  }
  SECTION("over Z/7") {
    GeneratorSpec s = small_spec(11);
    s.ring = Ring::prime(7);
    auto g = generate_cone_algebra(s);
    REQUIRE(all_pass(check_ainf(*g.algebra)));
  }
}

TEST_CASE("morphisms and homotopies", "[generate][ainf]") {
  auto a = generate_cone_algebra(small_spec(21)).algebra;
  auto bc = generate_cone_algebra(small_spec(22));
  auto b = bc.algebra;
  Telemetry tel;
  auto f = std::make_shared<const AInfMorphism>(extend_morphism(small_spec(23), a, b, &bc.cone.contraction, {}, &tel));
  REQUIRE(all_pass(check_ainf_morphism(*f)));
  REQUIRE(tel.nonzero.size() == 5);
  auto g = std::make_shared<const AInfMorphism>(extend_morphism(small_spec(24), a, b, &bc.cone.contraction));
  REQUIRE(all_pass(check_ainf_morphism(*g)));
  auto h = extend_homotopy(small_spec(25), f, g, &bc.cone.contraction);
  REQUIRE(all_pass(check_ainf_homotopy(h)));

  SECTION("identity chain map extends to the identity") {
    GeneratorSpec s = small_spec(1);
    s.diversify = false;
    auto id = extend_morphism(s, b, b, &bc.cone.contraction, GradedMap::identity(Space{b->base, 1}));
    REQUIRE(all_pass(check_ainf_morphism(id)));
    REQUIRE(all_pass(compare_ainf_morphisms(id, identity_ainf(b), "2.3")));
  }
  SECTION("f = g gives h = 0") {
    GeneratorSpec s = small_spec(1);
    s.diversify = false;
    auto z = extend_homotopy(s, f, f, &bc.cone.contraction);
    for (const auto& c : z.comps) REQUIRE(c.is_zero());
  }
  SECTION("two extensions of one f_0") {
    auto g2 = std::make_shared<const AInfMorphism>(
        extend_morphism(small_spec(77), a, b, &bc.cone.contraction, f->comps[0]));
    REQUIRE(all_pass(check_ainf_morphism(*g2)));
    REQUIRE(all_pass(check_ainf_homotopy(extend_homotopy(small_spec(78), f, g2, &bc.cone.contraction))));
  }
  SECTION("perturbed component fails") {
    AInfMorphism bad = *f;
    Rng rng(8);
    bad.comps[1] += random_map(rng, bad.comps[1].src(), bad.comps[1].tgt(), 1, 2, 60);
    REQUIRE_FALSE(check_ainf_morphism(bad).ok());
  }
  SECTION("composition") {
    auto cc = generate_cone_algebra(small_spec(31));
    auto k = std::make_shared<const AInfMorphism>(extend_morphism(small_spec(32), b, cc.algebra, &cc.cone.contraction));
    auto kf = compose_ainf(*k, *f);
    REQUIRE(all_pass(check_ainf_morphism(kf)));
    REQUIRE(all_pass(compare_ainf_morphisms(compose_ainf(*k, *f, Exec::serial), kf, "2.3")));
    REQUIRE(all_pass(compare_ainf_morphisms(compose_ainf(identity_ainf(b), *f), *f, "2.3")));
    REQUIRE(all_pass(compare_ainf_morphisms(compose_ainf(*f, identity_ainf(a)), *f, "2.3")));
  }
}

TEST_CASE("composition is associative for arbitrary families", "[ainf]") {
  Rng rng(4);
  auto base = Complex::create({1, 2, 1}, {}, "B");
  auto x = std::make_shared<const AInfAlgebra>(random_algebra(rng, base, 4));
  auto f = random_morphism(rng, x, x, 4);
  auto g = random_morphism(rng, x, x, 4);
  auto h = random_morphism(rng, x, x, 4);
  REQUIRE(all_pass(compare_ainf_morphisms(compose_ainf(compose_ainf(h, g), f), compose_ainf(h, compose_ainf(g, f)), "2.3")));
}

TEST_CASE("suspension", "[ainf][suspension]") {
  auto g = generate_cone_algebra(small_spec(41, 5));
  const auto& a = *g.algebra;
  auto sa = std::make_shared<const AInfAlgebra>(suspend_structure(a));
  REQUIRE(all_pass(check_ainf(*sa)));
  SECTION("round trip") {
    auto back = desuspend_structure(*sa);
    for (std::size_t n = 0; n < a.ops.size(); ++n) REQUIRE(back.ops[n] == a.ops[n]);
  }
  SECTION("strict algebra: d(pi(0)) = 0") {
    auto s = suspend_structure(make_strict_dga("tensor", 3));
    REQUIRE(algebra_residual(s, -1).is_zero());
  }
  SECTION("residuals correspond under eta for arbitrary families") {
    Rng rng(3);
    auto base = Complex::create({1, 2, 1}, {{1, SparseMatrix::from_dense({{Scalar(1), Scalar(0)}})}}, "R");
    auto x = std::make_shared<const AInfAlgebra>(random_algebra(rng, base, 5));
    auto y = std::make_shared<const AInfAlgebra>(random_algebra(rng, base, 5));
    auto sx = std::make_shared<const AInfAlgebra>(suspend_structure(*x));
    auto sy = std::make_shared<const AInfAlgebra>(suspend_structure(*y));
    auto s = suspension_of(base);
    for (int n = -1; n <= 2; ++n) {
      REQUIRE(compose(s->eta, algebra_residual(*sx, n)) == compose(algebra_residual(*x, n), s->eta_power(n + 3)));
    }
    auto f = std::make_shared<const AInfMorphism>(random_morphism(rng, x, y, 5));
    auto gg = std::make_shared<const AInfMorphism>(random_morphism(rng, x, y, 5));
    auto sf = std::make_shared<const AInfMorphism>(suspend_morphism(*f, sx, sy));
    auto sg = std::make_shared<const AInfMorphism>(suspend_morphism(*gg, sx, sy));
    for (int n = -1; n <= 3; ++n)
      REQUIRE(compose(s->eta, morphism_residual(*sf, n)) == compose(morphism_residual(*f, n), s->eta_power(n + 2)));
    AInfHomotopy h{f, gg, {}};
    for (int n = 0; n < 5; ++n) h.comps.push_back(random_map(rng, Space{base, n + 1}, Space{base, 1}, n + 1, 2, 60));
    auto sh = suspend_homotopy(h, sf, sg);
    for (int n = -1; n <= 3; ++n)
      REQUIRE(compose(s->eta, homotopy_residual(sh, n)) == compose(homotopy_residual(h, n), s->eta_power(n + 2)));
    // composition: η(gf)(n) = (gf)_n η^{⊗(n+1)}
    auto sgf = compose_ainf(*sg, *sf);
    auto gf = compose_ainf(*gg, *f);
    for (int n = 0; n < 5; ++n)
      REQUIRE(compose(s->eta, sgf.comps[n]) == compose(gf.comps[n], s->eta_power(n + 1)));
  }
  SECTION("checks agree on generated morphisms and homotopies") {
    auto bc = generate_cone_algebra(small_spec(42));
    auto f = std::make_shared<const AInfMorphism>(extend_morphism(small_spec(43), g.algebra, bc.algebra, &bc.cone.contraction));
    auto gg = std::make_shared<const AInfMorphism>(extend_morphism(small_spec(44), g.algebra, bc.algebra, &bc.cone.contraction));
    auto h = extend_homotopy(small_spec(45), f, gg, &bc.cone.contraction);
    auto sb = std::make_shared<const AInfAlgebra>(suspend_structure(*bc.algebra));
    auto sf = std::make_shared<const AInfMorphism>(suspend_morphism(*f, sa, sb));
    auto sg = std::make_shared<const AInfMorphism>(suspend_morphism(*gg, sa, sb));
    REQUIRE(all_pass(check_ainf_morphism(*sf)));
    REQUIRE(all_pass(check_ainf_homotopy(suspend_homotopy(h, sf, sg))));
    auto back = desuspend_morphism(*sf, g.algebra, bc.algebra);
    for (std::size_t n = 0; n < f->comps.size(); ++n) REQUIRE(back.comps[n] == f->comps[n]);
  }
}

TEST_CASE("symbolic A-infinity sums evaluate to the checker sums", "[ainf][symbolic]") {
  Rng rng(12);
  auto base = Complex::create({1, 2, 1}, {{1, SparseMatrix::from_dense({{Scalar(1), Scalar(1)}})}}, "E");
  auto x = std::make_shared<const AInfAlgebra>(random_algebra(rng, base, 5));
  auto y = std::make_shared<const AInfAlgebra>(random_algebra(rng, base, 5));
  auto f = std::make_shared<const AInfMorphism>(random_morphism(rng, x, y, 5));
  auto g = std::make_shared<const AInfMorphism>(random_morphism(rng, x, y, 5));
  AInfHomotopy h{f, g, {}};
  for (int n = 0; n < 5; ++n) h.comps.push_back(random_map(rng, Space{base, n + 1}, Space{base, 1}, n + 1, 2, 60));
  const Space unit{base, 1};
  for (int n = -1; n <= 2; ++n) {
    auto pi_only = [&](const std::string& s, int i) -> const GradedMap* { return s == "π" ? &x->ops[i] : nullptr; };
    REQUIRE(evaluate_ainf(expand_relation_symbolic(Relation::ainf, n), pi_only, unit,
                          GradedMap(Space{base, n + 3}, unit, n)) == algebra_rhs(*x, n));
  }
  for (int n = -1; n <= 3; ++n) {
    // The inner π of a linear term acts on the source, the outer π of a product term on the target.
    auto resolve = [&](const std::string& s, int i) -> const GradedMap* {
      if (s == "f") return &f->comps[i];
      if (s == "g") return &g->comps[i];
      if (s == "h") return &h.comps[i];
      return nullptr;
    };
    auto linear_pi = [&](const std::string& s, int i) -> const GradedMap* { return s == "π" ? &x->ops[i] : resolve(s, i); };
    auto product_pi = [&](const std::string& s, int i) -> const GradedMap* { return s == "π" ? &y->ops[i] : resolve(s, i); };
    // Split each expansion by whether the outer symbol is π.
    auto split_eval = [&](Relation r, GradedMap zero) {
      FormalTermSum outer_pi, rest;
      const FormalTermSum all = expand_relation_symbolic(r, n);
      for (const auto& t : all.terms())
        (t.layers[0][0].symbol == "π" ? outer_pi : rest).add(t);
      return evaluate_ainf(rest, linear_pi, unit, zero) + evaluate_ainf(outer_pi, product_pi, unit, zero);
    };
    REQUIRE(split_eval(Relation::ainf_morphism, GradedMap(Space{base, n + 2}, unit, n)) == morphism_rhs(*f, n));
    REQUIRE(split_eval(Relation::ainf_homotopy, GradedMap(Space{base, n + 2}, unit, n + 1)) == homotopy_rhs(h, n));
    if (n >= 0)
      REQUIRE(evaluate_ainf(expand_relation_symbolic(Relation::ainf_composition, n), resolve, unit,
                            GradedMap(Space{base, n + 1}, unit, n)) == composition_component(*g, *f, n));
  }
}
