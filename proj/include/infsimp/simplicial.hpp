#pragma once

#include <compare>
#include <map>
#include <memory>

#include "infsimp/faces.hpp"
#include "infsimp/report.hpp"

namespace infsimp {

struct CellKey {
  int level = 0;
  IndexTuple tuple;
  auto operator<=>(const CellKey&) const = default;
};

// Sparse family of components indexed by (level n, increasing tuple).
// An absent entry is the zero map.
class ComponentFamily {
 public:
  const GradedMap* find(int level, const IndexTuple& t) const;
  void set(int level, IndexTuple t, GradedMap m);
  const std::map<CellKey, GradedMap>& entries() const { return comps_; }
  bool operator==(const ComponentFamily&) const = default;

 private:
  std::map<CellKey, GradedMap> comps_;
};

// Bigraded differential module X_{n,•} = levels[n], n = 0..N, with faces
// ∂_{(i_1…i_k)}: X_{n,•} -> X_{n−k,•+k−1}.
struct InftySimplicialModule {
  std::vector<Space> levels;
  ComponentFamily faces;

  int truncation() const { return static_cast<int>(levels.size()) - 1; }
  // Validates level, tuple range and shift before storing.
  void set_face(int n, IndexTuple t, GradedMap m);
};
using ModulePtr = std::shared_ptr<const InftySimplicialModule>;

// Components f_{(i_1…i_k)}: X_{n,•} -> Y_{n−k,•+k}, k = 0 allowed.
struct InftyMorphism {
  ModulePtr source, target;
  ComponentFamily components;
  void set_component(int n, IndexTuple t, GradedMap m);
};
using MorphismPtr = std::shared_ptr<const InftyMorphism>;

// Components h_{(i_1…i_k)}: X_{n,•} -> Y_{n−k,•+k+1} between f and g.
struct InftyHomotopy {
  MorphismPtr f, g;
  ComponentFamily components;
  void set_component(int n, IndexTuple t, GradedMap m);
};

struct CheckOptions {
  int max_level = -1;   // < 0: the module's truncation
  int max_degree = -1;  // < 0: every internal degree
  Exec exec = Exec::parallel;
};

// Every (n, tuple) cell with 0 <= n <= N and entries in [0, n]; k in [kmin, n].
std::vector<CellKey> cells(int max_level, int kmin);

// Right-hand sides of the structural relations at one cell, and the matching
// residual d(component) − rhs. The Hom-differential uses the total degree
// (internal shift minus k).
GradedMap faces_rhs(const InftySimplicialModule& x, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                    std::size_t* absent = nullptr);
GradedMap faces_residual(const InftySimplicialModule& x, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                         std::size_t* absent = nullptr);
GradedMap morphism_rhs(const InftyMorphism& f, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                       std::size_t* absent = nullptr);
GradedMap morphism_residual(const InftyMorphism& f, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                            std::size_t* absent = nullptr);
GradedMap homotopy_rhs(const InftyHomotopy& h, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                       std::size_t* absent = nullptr);
GradedMap homotopy_residual(const InftyHomotopy& h, int n, const IndexTuple& t, Exec exec = Exec::parallel,
                            std::size_t* absent = nullptr);

VerificationReport check_faces(const InftySimplicialModule& x, const CheckOptions& opt = {});
VerificationReport check_morphism(const InftyMorphism& f, const CheckOptions& opt = {});
VerificationReport check_homotopy(const InftyHomotopy& h, const CheckOptions& opt = {});

// Component of g∘f at one cell, and the whole composite.
GradedMap composition_component(const InftyMorphism& g, const InftyMorphism& f, int n, const IndexTuple& t,
                                Exec exec = Exec::parallel);
InftyMorphism compose(const InftyMorphism& g, const InftyMorphism& f, Exec exec = Exec::parallel);
InftyMorphism identity_morphism(const ModulePtr& x);

// Componentwise equality of two morphisms; every differing cell is a failure.
VerificationReport compare_morphisms(const InftyMorphism& a, const InftyMorphism& b, const std::string& relation);

// Strict simplicial data: complexes X_n and faces ∂_i: X_n -> X_{n−1}
// (faces[n][i], i = 0..n) that are chain maps with ∂_i∂_j = ∂_{j−1}∂_i.
// Embedded as ∂_{(i)} = (−1)^{m−1}∂_i on X_{n,m}, higher faces zero.
InftySimplicialModule from_simplicial(const std::vector<ComplexPtr>& levels,
                                      const std::vector<std::vector<GradedMap>>& faces);
// Inverse of the sign twist: the strict ∂_i at level n.
GradedMap strict_face(const InftySimplicialModule& x, int n, int i);

}  // namespace infsimp
