#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "infsimp/ainf.hpp"
#include "infsimp/random.hpp"

namespace infsimp {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GenKind { strict_dga, cone, ainf_extend, morphism_extend, homotopy_extend };
GenKind parse_gen_kind(const std::string& s);
std::string to_string(GenKind k);

struct GeneratorSpec {
  std::uint64_t seed = 1;
  Ring ring = Ring::rationals();
  std::vector<int> dims{1, 1};  // profile of the complex being coned
  int arity_cutoff = 5;         // stored operations take at most this many inputs
  GenKind kind = GenKind::ainf_extend;
  bool diversify = true;        // add a random boundary to every solution
  int range = 2;                // entries of random maps in [-range, range]
  int density = 50;             // percent
  int max_total_dim = 24;
  int retries = 3;
};

struct Telemetry {
  std::vector<bool> nonzero;  // per stored component
  int contraction_solves = 0;
  int linear_solves = 0;
  int retries = 0;
};

struct Cone {
  ComplexPtr complex;
  GradedMap contraction;  // degree +1 with ds + sd = 1
};

// Random complex with the given dimensions (d² = 0 by construction).
ComplexPtr random_complex(Rng& rng, const std::vector<int>& dims, const Ring& ring, int range, int density,
                          const std::string& name);
// Cone of the identity of c: Cone_q = C_q ⊕ C_{q−1}, d(a,b) = (da + b, −db), s(a,b) = (0,a).
Cone cone_of_identity(const ComplexPtr& c, const std::string& name);

// Built-ins: "upper-triangular", "exterior", "dual-numbers", "tensor" (the
// first two, Koszul signs), "acyclic-exterior" (Λ(x), dx = 1). Higher π are
// stored as zero maps up to the arity cutoff.
std::vector<std::string> strict_dga_names();
AInfAlgebra make_strict_dga(const std::string& name, int arity_cutoff = 5, const Ring& ring = Ring::rationals());

// φ with D(φ) = rhs, D(φ) = dφ − (−1)^{deg φ}φd. With a contraction of the
// target, φ = s∘rhs; otherwise an exact solve on the Hom-complex.
GradedMap solve_with_contraction(const GradedMap& rhs, const GradedMap& contraction, Exec exec = Exec::serial);
std::optional<GradedMap> solve_hom_equation(const GradedMap& rhs, int degree);

// D(ψ) for random ψ of degree `degree` + 1; a random boundary of degree `degree`.
GradedMap random_boundary(Rng& rng, const Space& src, const Space& tgt, int degree, const GeneratorSpec& spec);

// Extensions. `contraction` is the contraction of the target complex, or null
// for the linear-solver path.
AInfAlgebra extend_ainf(const GeneratorSpec& spec, const ComplexPtr& base, const GradedMap* contraction,
                        Telemetry* tel = nullptr);
AInfMorphism extend_morphism(const GeneratorSpec& spec, const AlgebraPtr& src, const AlgebraPtr& tgt,
                             const GradedMap* contraction, std::optional<GradedMap> f0 = std::nullopt,
                             Telemetry* tel = nullptr);
AInfHomotopy extend_homotopy(const GeneratorSpec& spec, const AInfMorphismPtr& f, const AInfMorphismPtr& g,
                             const GradedMap* contraction, Telemetry* tel = nullptr);

// Cone of a random complex with the spec's profile, then an extended structure on it.
struct ConeAlgebra {
  Cone cone;
  AlgebraPtr algebra;
  Telemetry telemetry;
};
ConeAlgebra generate_cone_algebra(const GeneratorSpec& spec);

}  // namespace infsimp
