#pragma once

#include <memory>

#include "infsimp/report.hpp"
#include "infsimp/suspension.hpp"

namespace infsimp {

// standard: π_n of degree n on A; suspended: π(n) of degree −1 on SA, with
// the sign-free relations.
enum class Convention { standard, suspended };

// ops[n] = π_n: A^{⊗(n+2)} -> A. Stored arities n+2 <= ops.size()+1.
struct AInfAlgebra {
  ComplexPtr base;
  std::vector<GradedMap> ops;
  Convention convention = Convention::standard;

  int arity_cutoff() const { return static_cast<int>(ops.size()) + 1; }
  void validate() const;
};
using AlgebraPtr = std::shared_ptr<const AInfAlgebra>;

// comps[n] = f_n: A^{⊗(n+1)} -> A' of degree n (0 when suspended).
struct AInfMorphism {
  AlgebraPtr source, target;
  std::vector<GradedMap> comps;

  Convention convention() const { return source->convention; }
  void validate() const;
};
using AInfMorphismPtr = std::shared_ptr<const AInfMorphism>;

// comps[n] = h_n: A^{⊗(n+1)} -> A' of degree n+1 (1 when suspended).
struct AInfHomotopy {
  AInfMorphismPtr f, g;
  std::vector<GradedMap> comps;

  Convention convention() const { return f->convention(); }
  void validate() const;
};

struct AInfCheckOptions {
  int max_arity = -1;   // < 0: everything stored
  int max_degree = -1;  // < 0: every internal degree
  Exec exec = Exec::parallel;
};

// Right-hand sides and residuals d(x) − rhs of the relation at n >= −1
// (the one for d(π_{n+1}), d(f_{n+1}), d(h_{n+1})). Every referenced
// operation must be stored.
GradedMap algebra_rhs(const AInfAlgebra& a, int n, Exec exec = Exec::parallel);
GradedMap algebra_residual(const AInfAlgebra& a, int n, Exec exec = Exec::parallel);
GradedMap morphism_rhs(const AInfMorphism& f, int n, Exec exec = Exec::parallel);
GradedMap morphism_residual(const AInfMorphism& f, int n, Exec exec = Exec::parallel);
GradedMap homotopy_rhs(const AInfHomotopy& h, int n, Exec exec = Exec::parallel);
GradedMap homotopy_residual(const AInfHomotopy& h, int n, Exec exec = Exec::parallel);

// Highest n whose relation only references stored operations.
int algebra_top_relation(const AInfAlgebra& a);
int morphism_top_relation(const AInfMorphism& f);
int homotopy_top_relation(const AInfHomotopy& h);

VerificationReport check_ainf(const AInfAlgebra& a, const AInfCheckOptions& opt = {});
VerificationReport check_ainf_morphism(const AInfMorphism& f, const AInfCheckOptions& opt = {});
VerificationReport check_ainf_homotopy(const AInfHomotopy& h, const AInfCheckOptions& opt = {});

// (gf)_n; the composite is truncated to the shorter of f and g.
GradedMap composition_component(const AInfMorphism& g, const AInfMorphism& f, int n, Exec exec = Exec::parallel);
AInfMorphism compose_ainf(const AInfMorphism& g, const AInfMorphism& f, Exec exec = Exec::parallel);
AInfMorphism identity_ainf(const AlgebraPtr& a);
VerificationReport compare_ainf_morphisms(const AInfMorphism& a, const AInfMorphism& b, const std::string& relation);

// π(n) = ξπ_nη^{⊗(n+2)}, f(n) = ξf_nη^{⊗(n+1)}, h(n) = ξh_nη^{⊗(n+1)} and back.
AInfAlgebra suspend_structure(const AInfAlgebra& a);
AInfAlgebra desuspend_structure(const AInfAlgebra& sa);
// Endpoints must be the suspensions (resp. desuspensions) of f's endpoints.
AInfMorphism suspend_morphism(const AInfMorphism& f, const AlgebraPtr& ssrc, const AlgebraPtr& stgt);
AInfMorphism desuspend_morphism(const AInfMorphism& sf, const AlgebraPtr& src, const AlgebraPtr& tgt);
AInfHomotopy suspend_homotopy(const AInfHomotopy& h, const AInfMorphismPtr& sf, const AInfMorphismPtr& sg);

}  // namespace infsimp
