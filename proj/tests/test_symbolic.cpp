#include <catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>

#include "infsimp/random.hpp"
#include "infsimp/simplicial.hpp"
#include "infsimp/symbolic.hpp"

using namespace infsimp;

namespace {

nlohmann::json golden() {
  std::ifstream in(std::string(INFSIMP_DATA_DIR) + "/golden_expansions.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Faces, morphism and homotopy with arbitrary random components on levels 0..top.
struct RandomFamilies {
  ModulePtr x;
  MorphismPtr f, g;
  InftyHomotopy h;
};

RandomFamilies random_families(std::uint64_t seed, int top) {
  Rng rng(seed);
  std::vector<Space> levels;
  for (int n = 0; n <= top; ++n) {
    std::map<int, SparseMatrix> d;
    d.emplace(1, SparseMatrix::from_dense({{Scalar(1), Scalar(0)}}));
    levels.push_back(Space{Complex::create({1, 2}, std::move(d), "L" + std::to_string(n)), 1});
  }
  auto mod = std::make_shared<InftySimplicialModule>();
  mod->levels = levels;
  for (const auto& c : cells(top, 1)) {
    const int k = static_cast<int>(c.tuple.size());
    mod->set_face(c.level, c.tuple, random_map(rng, levels[c.level], levels[c.level - k], k - 1, 2, 70));
  }
  ModulePtr x = mod;
  auto morph = [&] {
    auto m = std::make_shared<InftyMorphism>(InftyMorphism{x, x, {}});
    for (const auto& c : cells(top, 0)) {
      const int k = static_cast<int>(c.tuple.size());
      m->set_component(c.level, c.tuple, random_map(rng, levels[c.level], levels[c.level - k], k, 2, 70));
    }
    return MorphismPtr(m);
  };
  RandomFamilies r{x, morph(), morph(), {}};
  r.h = InftyHomotopy{r.f, r.g, {}};
  for (const auto& c : cells(top, 0)) {
    const int k = static_cast<int>(c.tuple.size());
    r.h.set_component(c.level, c.tuple, random_map(rng, levels[c.level], levels[c.level - k], k + 1, 2, 70));
  }
  return r;
}

// Increasing tuples in [0, n] whose consecutive gaps are at least k.
std::vector<std::vector<int>> generic_bindings(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cells(n, k)) {
    if (c.level != n || static_cast<int>(c.tuple.size()) != k) continue;
    bool ok = true;
    for (int s = 1; s < k; ++s) ok = ok && c.tuple[s] - c.tuple[s - 1] >= k;
    if (ok) out.push_back(c.tuple);
  }
  return out;
}

}  // namespace

TEST_CASE("golden expansions", "[symbolic]") {
  auto data = golden();
  REQUIRE(data["cases"].size() >= 27);
  for (const auto& c : data["cases"]) {
    const Relation r = parse_relation(c["relation"]);
    const int k = c["k"];
    INFO(c["relation"].get<std::string>() << " at " << k);
    auto sum = expand_relation_symbolic(r, k);
    auto produced = sorted(sum.signed_terms(variable_names(r, k)));
    auto display = sorted(c["display"].get<std::vector<std::string>>());
    auto expected = c.contains("expected") ? sorted(c["expected"].get<std::vector<std::string>>()) : display;
    CHECK(produced == expected);
    CHECK(relation_lhs(r, k) == c["lhs"].get<std::string>());
    if (c.contains("expected")) CHECK(display != expected);
  }
}

TEST_CASE("rendering", "[symbolic]") {
  SECTION("canonical string for two-element faces") {
    auto s = expand_relation_symbolic(Relation::faces, 2);
    REQUIRE(s.to_string(variable_names(Relation::faces, 2)) == "∂_{(j−1)}∂_{(i)} − ∂_{(i)}∂_{(j)}");
  }
  SECTION("empty sum") {
    REQUIRE(expand_relation_symbolic(Relation::faces, 1).to_string({"i"}) == "0");
    REQUIRE(expand_relation_symbolic(Relation::ainf, -1).empty());
  }
  SECTION("coefficients merge") {
    FormalTermSum s;
    Factor a{"f", false, {}, 2};
    s.add({1, {{a}}});
    s.add({1, {{a}}});
    s.add({-3, {{Factor{"g", false, {}, 0}}}});
    s.canonicalize();
    REQUIRE(s.to_string({}) == "−3·g_0 + 2·f_2");
    s.add({-2, {{a}}});
    s.canonicalize();
    REQUIRE(s.signed_terms({}) == std::vector<std::string>{"−3·g_0"});
  }
  SECTION("indices") {
    REQUIRE(render_index({1, -1}, {"i", "j"}) == "j−1");
    REQUIRE(render_index({0, 2}, {"i"}) == "i+2");
    REQUIRE(render_factor({"π", false, {}, 12}, {}) == "π_{12}");
  }
  SECTION("relation ids") {
    for (auto id : {"1.1", "1.2", "1.3", "1.4", "2.1", "2.2", "2.3", "2.4"}) REQUIRE(relation_id(parse_relation(id)) == id);
    REQUIRE_THROWS(parse_relation("3.1"));
    REQUIRE_THROWS(expand_relation_symbolic(Relation::faces, 0));
    REQUIRE_THROWS(expand_relation_symbolic(Relation::ainf_composition, -1));
  }
}

TEST_CASE("term counts", "[symbolic]") {
  // |relation splits| for k: Σ_{m=1}^{k−1} C(k,m) = 2^k − 2 when no collisions occur.
  for (int k = 1; k <= 5; ++k) {
    REQUIRE(expand_relation_symbolic(Relation::faces, k).terms().size() == (1u << k) - 2);
    REQUIRE(expand_relation_symbolic(Relation::composition, k).terms().size() == (1u << k));
  }
  // (2.1) at n: Σ_{m=0}^{n} (m+2) terms.
  for (int n = 0; n <= 5; ++n)
    REQUIRE(expand_relation_symbolic(Relation::ainf, n).terms().size() ==
            static_cast<std::size_t>((n + 1) * (n + 4) / 2));
}

TEST_CASE("symbolic and numeric sums agree", "[symbolic]") {
  const int top = 6;
  auto fam = random_families(2024, top);
  auto x = fam.x;
  auto resolver = [&](const InftySimplicialModule& mod, const InftyMorphism* f, const InftyMorphism* g,
                      const InftyHomotopy* h) {
    return [&mod, f, g, h](const std::string& sym, int level, const IndexTuple& t) -> const GradedMap* {
      if (sym == "∂") return mod.faces.find(level, t);
      if (sym == "f" && f) return f->components.find(level, t);
      if (sym == "g" && g) return g->components.find(level, t);
      if (sym == "h" && h) return h->components.find(level, t);
      return nullptr;
    };
  };
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= top; ++n)
      for (const auto& vals : generic_bindings(n, k)) {
        const IndexTuple t = vals;
        GradedMap zero(x->levels[n], x->levels[n - k], k - 2);
        auto sym = evaluate_simplicial(expand_relation_symbolic(Relation::faces, k), vals, n,
                                       resolver(*x, nullptr, nullptr, nullptr), zero);
        REQUIRE(sym == faces_rhs(*x, n, t, Exec::serial));
      }
  for (int k = 0; k <= 3; ++k)
    for (int n = k; n <= top; ++n)
      for (const auto& vals : generic_bindings(n, k)) {
        const IndexTuple t = vals;
        auto res = resolver(*x, fam.f.get(), fam.g.get(), &fam.h);
        GradedMap zm(x->levels[n], x->levels[n - k], k - 1);
        REQUIRE(evaluate_simplicial(expand_relation_symbolic(Relation::morphism, k), vals, n, res, zm) ==
                morphism_rhs(*fam.f, n, t, Exec::serial));
        GradedMap zc(x->levels[n], x->levels[n - k], k);
        auto comp_res = [&](const std::string& sym, int level, const IndexTuple& tt) -> const GradedMap* {
          if (sym == "g") return fam.g->components.find(level, tt);
          if (sym == "f") return fam.f->components.find(level, tt);
          return nullptr;
        };
        REQUIRE(evaluate_simplicial(expand_relation_symbolic(Relation::composition, k), vals, n, comp_res, zc) ==
                composition_component(*fam.g, *fam.f, n, t, Exec::serial));
        GradedMap zh(x->levels[n], x->levels[n - k], k);
        REQUIRE(evaluate_simplicial(expand_relation_symbolic(Relation::homotopy, k), vals, n, res, zh) ==
                homotopy_rhs(fam.h, n, t, Exec::serial));
      }
}
