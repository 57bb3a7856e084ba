#include <catch_amalgamated.hpp>

#include "infsimp/errors.hpp"
#include "infsimp/random.hpp"
#include "infsimp/simplicial.hpp"

using namespace infsimp;

namespace {

// Nerve of Δ¹ tensored with the acyclic two-term complex: level n has basis
// the nondecreasing 0/1 words of length n+1 (indexed by their number of zeros)
// in degrees 0 and 1, with d = identity. ∂_i deletes entry i.
struct Nerve {
  std::vector<ComplexPtr> levels;
  std::vector<std::vector<GradedMap>> faces;
};

SparseMatrix delete_entry(int n, int i) {
  std::vector<std::vector<long long>> m(n + 1, std::vector<long long>(n + 2, 0));
  for (int z = 0; z <= n + 1; ++z) m[i < z ? z - 1 : z][z] = 1;
  std::vector<std::vector<Scalar>> s;
  for (auto& row : m) {
    s.emplace_back();
    for (auto v : row) s.back().emplace_back(v);
  }
  return SparseMatrix::from_dense(s);
}

Nerve nerve(int top) {
  Nerve r;
  for (int n = 0; n <= top; ++n) {
    std::map<int, SparseMatrix> d;
    d.emplace(1, SparseMatrix::identity(n + 2));
    r.levels.push_back(Complex::create({n + 2, n + 2}, std::move(d), "N" + std::to_string(n)));
  }
  r.faces.resize(top + 1);
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      GradedMap f(Space{r.levels[n], 1}, Space{r.levels[n - 1], 1}, 0);
      f.set_block(0, delete_entry(n, i));
      f.set_block(1, delete_entry(n, i));
      r.faces[n].push_back(std::move(f));
    }
  return r;
}

InftyMorphism random_morphism(Rng& rng, const ModulePtr& x, const ModulePtr& y) {
  InftyMorphism f{x, y, {}};
  for (const auto& c : cells(x->truncation(), 0)) {
    const int k = static_cast<int>(c.tuple.size());
    f.set_component(c.level, c.tuple, random_map(rng, x->levels[c.level], y->levels[c.level - k], k, 2, 50));
  }
  return f;
}

}  // namespace

TEST_CASE("strict modules embed", "[simplicial]") {
  auto nv = nerve(4);
  auto x = from_simplicial(nv.levels, nv.faces);
  REQUIRE(x.truncation() == 4);
  auto rep = check_faces(x);
  REQUIRE(rep.ok());
  REQUIRE(rep.count(Status::pass) == rep.entries.size());
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) REQUIRE(strict_face(x, n, i) == nv.faces[n][i]);

  SECTION("twist on odd degree") {
    const GradedMap* f = x.faces.find(2, {1});
    REQUIRE(f);
    SparseMatrix neg = *nv.faces[2][1].block(0);
    neg *= Scalar(-1);
    REQUIRE(*f->block(0) == neg);
    REQUIRE(*f->block(1) == *nv.faces[2][1].block(1));
  }
}

TEST_CASE("zero faces are valid", "[simplicial]") {
  auto nv = nerve(3);
  for (auto& lv : nv.faces)
    for (auto& f : lv) f = GradedMap(f.src(), f.tgt(), 0);
  auto x = from_simplicial(nv.levels, nv.faces);
  REQUIRE(check_faces(x).ok());
  REQUIRE(x.faces.entries().empty());
}

TEST_CASE("strict input validation", "[simplicial]") {
  auto nv = nerve(3);
  SECTION("swapped faces") {
    std::swap(nv.faces[2][0], nv.faces[2][1]);
    REQUIRE_THROWS_WITH(from_simplicial(nv.levels, nv.faces), Catch::Matchers::ContainsSubstring("simplicial identity"));
  }
  SECTION("missing face") {
    nv.faces[2].pop_back();
    REQUIRE_THROWS_AS(from_simplicial(nv.levels, nv.faces), StructuralError);
  }
  SECTION("not a chain map") {
    GradedMap f = nv.faces[1][0];
    f.set_block(1, SparseMatrix(1 + 1, 1 + 2));
    nv.faces[1][0] = f;
    REQUIRE_THROWS_WITH(from_simplicial(nv.levels, nv.faces), Catch::Matchers::ContainsSubstring("chain map"));
  }
  SECTION("wrong face shift") {
    auto x = from_simplicial(nv.levels, nv.faces);
    REQUIRE_THROWS_AS(x.set_face(2, {0, 1}, GradedMap(x.levels[2], x.levels[0], 0)), StructuralError);
    REQUIRE_THROWS_AS(x.set_face(2, {1, 0}, GradedMap(x.levels[2], x.levels[0], 1)), StructuralError);
  }
}

TEST_CASE("mutated face is located", "[simplicial]") {
  auto nv = nerve(3);
  auto x = from_simplicial(nv.levels, nv.faces);
  GradedMap f = *x.faces.find(1, {0});
  f *= Scalar(-1);
  x.faces.set(1, {0}, f);
  auto rep = check_faces(x, {.max_level = 2});
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.status == Status::fail && e.params["n"] == 2 && e.params["tuple"] == nlohmann::json::array({0, 2})) {
      found = true;
      REQUIRE(e.residual.has_value());
    }
  REQUIRE(found);
  REQUIRE_FALSE(faces_residual(x, 2, {0, 2}).is_zero());
  REQUIRE(faces_residual(x, 2, {1, 2}).is_zero());
}

TEST_CASE("identity and composition", "[simplicial]") {
  auto nv = nerve(4);
  auto x = std::make_shared<const InftySimplicialModule>(from_simplicial(nv.levels, nv.faces));
  auto id = identity_morphism(x);
  REQUIRE(check_morphism(id).ok());
  REQUIRE(compare_morphisms(compose(id, id), id, "1.3").ok());

  Rng rng(17);
  auto f = random_morphism(rng, x, x);
  auto g = random_morphism(rng, x, x);
  auto h = random_morphism(rng, x, x);
  SECTION("unit laws") {
    REQUIRE(compare_morphisms(compose(id, f), f, "1.3").ok());
    REQUIRE(compare_morphisms(compose(f, id), f, "1.3").ok());
  }
  SECTION("associativity for arbitrary families") {
    auto lhs = compose(compose(h, g), f);
    auto rhs = compose(h, compose(g, f));
    REQUIRE(compare_morphisms(lhs, rhs, "1.3").ok());
  }
  SECTION("parallel composite equals serial") {
    REQUIRE(compare_morphisms(compose(g, f, Exec::parallel), compose(g, f, Exec::serial), "1.3").ok());
  }
  SECTION("random family is not a morphism") { REQUIRE_FALSE(check_morphism(f).ok()); }
}

TEST_CASE("k = 1 morphism relation is the chain-map condition", "[simplicial]") {
  auto nv = nerve(3);
  auto x = std::make_shared<const InftySimplicialModule>(from_simplicial(nv.levels, nv.faces));
  // Scaling every f_() by 2 keeps a morphism; a degree-dependent scaling on one level does not.
  InftyMorphism f{x, x, {}};
  for (int n = 0; n <= 3; ++n) f.set_component(n, {}, Scalar(2) * GradedMap::identity(x->levels[n]));
  REQUIRE(check_morphism(f).ok());
  GradedMap bad = GradedMap::identity(x->levels[1]);
  SparseMatrix b = *bad.block(0);
  b *= Scalar(3);
  bad.set_block(0, b);
  f.set_component(1, {}, bad);
  auto rep = check_morphism(f);
  REQUIRE_FALSE(rep.ok());
  REQUIRE_FALSE(morphism_residual(f, 2, {0}).is_zero());
}

TEST_CASE("homotopy checks", "[simplicial]") {
  auto nv = nerve(3);
  auto x = std::make_shared<const InftySimplicialModule>(from_simplicial(nv.levels, nv.faces));
  auto id = std::make_shared<const InftyMorphism>(identity_morphism(x));
  InftyHomotopy zero{id, id, {}};
  REQUIRE(check_homotopy(zero).ok());

  // h_() = contraction s on every level; then f_() − g_() = d(h_()) is realized by f = id, g = 0,
  // and the strict faces commute with s up to the embedding sign.
  InftyMorphism z{x, x, {}};
  auto zp = std::make_shared<const InftyMorphism>(z);
  InftyHomotopy h{id, zp, {}};
  for (int n = 0; n <= 3; ++n) {
    GradedMap s(x->levels[n], x->levels[n], 1);
    s.set_block(0, SparseMatrix::identity(n + 2));
    h.set_component(n, {}, s);
  }
  auto rep = check_homotopy(h, {.max_level = 0});
  REQUIRE(rep.ok());
  REQUIRE_FALSE(check_homotopy(InftyHomotopy{id, zp, {}}).ok());
}

TEST_CASE("cells enumeration", "[simplicial]") {
  auto cs = cells(2, 0);
  // k <= n: n=0: (); n=1: (), 2 singles; n=2: (), 3 singles, 3 pairs
  REQUIRE(cs.size() == 1 + 3 + 7);
  REQUIRE(cells(2, 1).size() == 2 + 6);
}
