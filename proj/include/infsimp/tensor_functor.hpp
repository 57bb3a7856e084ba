#pragma once

#include <optional>

#include "infsimp/ainf.hpp"
#include "infsimp/errors.hpp"
#include "infsimp/simplicial.hpp"

namespace infsimp {

// A tuple 1 <= i_1 < … < i_k <= n−1 split into maximal runs of consecutive
// integers: run r starts at starts[r] and has lengths[r] entries; gaps[0] is
// the first start, gaps[r] = starts[r] − (end of run r−1) − 1, and the last
// gap is n − Σ gaps[0..s−1] − k + 1.
struct RunDecomposition {
  int n = 0;
  std::vector<int> starts, lengths, gaps;
  int s() const { return static_cast<int>(lengths.size()); }
  int k() const;
};

// nullopt for the empty tuple and for tuples touching 0 or n.
std::optional<RunDecomposition> decompose_runs(int n, const IndexTuple& t);

// Deliberate sign defects, used to show that the checks can fail.
enum class Mutation {
  none,
  face_negate,             // −(−1)^{k(q−1)}
  face_q_exponent,         // (−1)^{kq}
  morphism_negate,         // −(−1)^{k(q−1)+γ}
  morphism_q_exponent,     // (−1)^{kq+γ}
  morphism_drop_gamma,     // (−1)^{k(q−1)}
  homotopy_negate,         // both sums negated
  homotopy_q_exponent,     // (−1)^{kq+γ}
  homotopy_drop_gamma,     // (−1)^{k(q−1)}
  homotopy_drop_inner,     // first sum without (−1)^{n_1+…+n_{i−1}}
  homotopy_negate_second,  // second sum negated
};
std::vector<Mutation> all_mutations();  // every value except none
std::string to_string(Mutation m);

struct FunctorOptions {
  Exec exec = Exec::parallel;
  Mutation mutation = Mutation::none;
  bool validate = true;  // refuse inputs failing their A∞ relations
};

// Refusal with the failing check attached.
class FunctorRefusal : public StructuralError {
 public:
  FunctorRefusal(const std::string& what, VerificationReport report)
      : StructuralError(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

// Levels 0..max_level. Needs π_0..π_{max_level−2}.
ModulePtr tensor_object(const AlgebraPtr& a, int max_level, const FunctorOptions& opt = {});
// src, tgt: the images of f's endpoints. Needs f_0..f_{max_level−1}.
InftyMorphism tensor_morphism(const AInfMorphism& f, const ModulePtr& src, const ModulePtr& tgt,
                              const FunctorOptions& opt = {});
// tf, tg: the images of h's endpoints.
InftyHomotopy tensor_homotopy(const AInfHomotopy& h, const MorphismPtr& tf, const MorphismPtr& tg,
                              const FunctorOptions& opt = {});

// Image of g∘f against the composite of the images, componentwise.
VerificationReport verify_functoriality(const AInfMorphism& f, const AInfMorphism& g, int max_level,
                                        Exec exec = Exec::parallel);
// Image of the identity against the identity.
VerificationReport verify_identity(const AlgebraPtr& a, int max_level, Exec exec = Exec::parallel);

// Rewritten right-hand sides. Algebraic side: d(f_{n+1}) and d(h_{n+1}) by
// runs of positive indices and gap lengths. Module side: d of the
// (1,…,n+1) component at level n+2 by block permutations.
GradedMap rewritten_morphism_rhs(const AInfMorphism& f, int n, Exec exec = Exec::parallel);
GradedMap rewritten_homotopy_rhs(const AInfHomotopy& h, int n, Exec exec = Exec::parallel);
GradedMap rewritten_module_morphism_rhs(const InftyMorphism& tf, int n, Exec exec = Exec::parallel);
GradedMap rewritten_module_homotopy_rhs(const InftyHomotopy& th, int n, Exec exec = Exec::parallel);

// Equality of each rewritten form with the direct right-hand side, n = −1..max_n
// (module side n = 0..max_n; the module images are built here).
VerificationReport verify_rewrites(const AInfMorphism& f, int max_n, Exec exec = Exec::parallel);
VerificationReport verify_rewrites(const AInfHomotopy& h, int max_n, Exec exec = Exec::parallel);

// φ: A -> A', ψ: A' -> A, h between ψφ and 1_A, h2 between φψ and 1_{A'}.
struct HomotopyEquivalence {
  AInfMorphismPtr phi, psi;
  AInfHomotopy h, h2;
};
// Checks the witnesses on the A∞ side, then the transported witnesses: the
// images of h, h2 as homotopies between T(ψ)T(φ) and 1, T(φ)T(ψ) and 1.
VerificationReport verify_transported_equivalence(const HomotopyEquivalence& e, int max_level,
                                                  const CheckOptions& opt = {});

}  // namespace infsimp
