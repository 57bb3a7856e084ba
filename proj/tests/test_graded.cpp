#include <catch_amalgamated.hpp>

#include "infsimp/errors.hpp"
#include "infsimp/koszul.hpp"
#include "infsimp/random.hpp"
#include "infsimp/suspension.hpp"

using namespace infsimp;

namespace {

ComplexPtr two_term() {
  return Complex::create({1, 1}, {{1, SparseMatrix::identity(1)}}, "C");
}

ComplexPtr mixed() {
  // dims (1,2,1,1); d: A_1 -> A_0 = (1 1), A_3 -> A_2 = (1), A_2 -> A_1 zero.
  std::map<int, SparseMatrix> d;
  d.emplace(1, SparseMatrix::from_dense({{1, 1}}));
  d.emplace(3, SparseMatrix::identity(1));
  return Complex::create({1, 2, 1, 1}, std::move(d), "M");
}

}  // namespace

TEST_CASE("tensor_power", "[graded]") {
  SECTION("degree-0 module squared") {
    auto a = Complex::create({2}, {});
    Space s = tensor_power(a, 2);
    REQUIRE(s.dim(0) == 4);
    REQUIRE(s.max_degree() == 0);
    REQUIRE(s.tensor().differential().empty());
  }
  SECTION("two-term complex squared, Leibniz sum by hand") {
    Space s = tensor_power(two_term(), 2);
    REQUIRE(s.dim(0) == 1);
    REQUIRE(s.dim(1) == 2);
    REQUIRE(s.dim(2) == 1);
    const auto& d = s.tensor().differential();
    // words: a0a1, a1a0 in degree 1; d(a1a1) = a0a1 − a1a0, d(a0a1) = d(a1a0) = a0a0
    REQUIRE(d.at(2) == SparseMatrix::from_dense({{1}, {-1}}));
    REQUIRE(d.at(1) == SparseMatrix::from_dense({{1, 1}}));
    REQUIRE(multiply(d.at(1), d.at(2)).is_zero());
  }
  SECTION("arity zero") {
    Space s = tensor_power(two_term(), 0);
    REQUIRE(s.dim(0) == 1);
    REQUIRE(s.max_degree() == 0);
  }
  SECTION("d squared vanishes on higher powers") {
    auto a = mixed();
    for (int n = 1; n <= 4; ++n) {
      auto d = GradedMap::differential(tensor_power(a, n));
      REQUIRE(compose(d, d).is_zero());
    }
  }
  SECTION("non-complex rejected") {
    std::map<int, SparseMatrix> d;
    d.emplace(1, SparseMatrix::identity(1));
    d.emplace(2, SparseMatrix::identity(1));
    REQUIRE_THROWS_AS(Complex::create({1, 1, 1}, std::move(d)), StructuralError);
  }
}

TEST_CASE("koszul_interchange_sign", "[graded][koszul]") {
  std::vector<int> left{0}, right{-1};
  REQUIRE(koszul_interchange_sign(left, right, {{0, 0}}) == 1);

  // π(n−m) of degree −1 passing η^{⊗(m−t+2)}
  for (int k = 0; k <= 5; ++k) {
    std::vector<int> l{-1}, r(k, -1);
    Crossing c;
    for (int j = 0; j < k; ++j) c.emplace_back(0, j);
    REQUIRE(koszul_interchange_sign(l, r, c) == ((k % 2) ? -1 : 1));
  }
  // f-block of degree n_{m+1} passing η^{⊗(n_{m+2}+1)} after the shift: (n+1)·n'
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      std::vector<int> l{-(a + 1)}, r(b, -1);
      Crossing c;
      for (int j = 0; j < b; ++j) c.emplace_back(0, j);
      REQUIRE(koszul_interchange_sign(l, r, c) == (((a + 1) * b) % 2 ? -1 : 1));
    }
  REQUIRE_THROWS_AS(koszul_interchange_sign(left, right, {{1, 0}}), StructuralError);
}

TEST_CASE("map_differential", "[graded]") {
  auto a = mixed();
  Space s{a, 1};
  SECTION("d of d vanishes") {
    auto d = GradedMap::differential(s);
    REQUIRE(map_differential(d).is_zero());
  }
  SECTION("chain map is a cycle") {
    REQUIRE(map_differential(GradedMap::identity(s)).is_zero());
    REQUIRE(map_differential(GradedMap::identity(Space{a, 3})).is_zero());
  }
  SECTION("square zero on random maps") {
    Rng rng(17);
    for (int deg = -1; deg <= 3; ++deg)
      for (int n = 1; n <= 3; ++n) {
        auto phi = random_map(rng, Space{a, n}, s, deg);
        REQUIRE(map_differential(map_differential(phi)).is_zero());
      }
  }
  SECTION("stated conventions for f and h") {
    // d(φ) = dφ + (−1)^n φd for degree n maps, and the odd/even cases.
    Rng rng(2);
    auto phi = random_map(rng, Space{a, 2}, s, 1);
    auto d1 = GradedMap::differential(s), d2 = GradedMap::differential(Space{a, 2});
    REQUIRE(map_differential(phi) == compose(d1, phi) + compose(phi, d2));
    auto psi = random_map(rng, Space{a, 2}, s, 2);
    REQUIRE(map_differential(psi) == compose(d1, psi) - compose(psi, d2));
  }
}

TEST_CASE("tensor of maps composes with the Koszul sign", "[graded][koszul]") {
  auto a = mixed();
  Space s{a, 1};
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int df1 = rng.range(0, 3), df2 = rng.range(0, 3), dg1 = rng.range(0, 3), dg2 = rng.range(0, 3);
    auto f1 = random_map(rng, s, s, df1), f2 = random_map(rng, s, s, df2);
    auto g1 = random_map(rng, s, s, dg1), g2 = random_map(rng, s, s, dg2);
    auto lhs = compose(tensor({f1, f2}), tensor({g1, g2}));
    auto rhs = tensor({compose(f1, g1), compose(f2, g2)});
    if ((df2 * dg1) % 2) rhs *= Scalar(-1);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("tensor kernel: parallel equals serial", "[graded][kernels]") {
  auto a = mixed();
  Space s{a, 1};
  Rng rng(4);
  auto f = random_map(rng, Space{a, 2}, s, 1), g = random_map(rng, s, s, 2);
  std::vector<const GradedMap*> fs{&g, &f, &g, &f};
  REQUIRE(tensor(fs, a, a, Exec::serial) == tensor(fs, a, a, Exec::parallel));
}

TEST_CASE("suspension", "[graded][suspension]") {
  auto a = mixed();
  Suspension su = suspend(a);
  REQUIRE(su.shifted->dim(0) == 0);
  REQUIRE(su.shifted->dim(1) == 1);
  REQUIRE(compose(su.eta, su.xi) == GradedMap::identity({a, 1}));
  REQUIRE(compose(su.xi, su.eta) == GradedMap::identity({su.shifted, 1}));
  REQUIRE(compose(GradedMap::differential({a, 1}), su.eta) ==
          compose(su.eta, GradedMap::differential({su.shifted, 1})));

  auto point = suspend(Complex::create({1}, {}));
  REQUIRE(point.shifted->dim(1) == 1);
  REQUIRE(point.shifted->dim(0) == 0);

  SECTION("conjugation round trip") {
    Rng rng(8);
    for (int n = 0; n <= 2; ++n) {
      int arity = n + 2;
      auto pi = random_map(rng, Space{a, arity}, Space{a, 1}, n);
      auto susp = compose(su.xi, compose(pi, su.eta_power(arity)));
      REQUIRE(susp.degree() == -1);
      auto back = compose(su.eta, compose(susp, su.xi_power(arity)));
      if ((arity * (arity - 1) / 2) % 2) back *= Scalar(-1);
      REQUIRE(back == pi);
    }
  }
}
