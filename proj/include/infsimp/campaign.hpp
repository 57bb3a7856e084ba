#pragma once

#include "infsimp/generate.hpp"
#include "infsimp/io.hpp"
#include "infsimp/tensor_functor.hpp"

namespace infsimp {

// A fixed mix of instances: every built-in strict DGA, `extended` cone
// algebras E1…, morphisms f, f2: E1 → E2 and g, g2: E2 → E3, homotopies
// h: f ≃ f2 and hg: g ≃ g2, and a homotopy equivalence (phi, psi, k, k2) between
// the last two algebras. The equivalence is listed in the metadata.
struct CorpusSpec {
  std::uint64_t seed = 1;
  Ring ring = Ring::rationals();
  std::vector<int> dims{1, 1};
  int arity_cutoff = 7;
  int extended = 5;
};
Instance build_corpus(const CorpusSpec& spec);

// Equivalences named in the metadata ("equivalences": [{phi, psi, h, h2}]).
std::vector<std::pair<std::string, HomotopyEquivalence>> equivalences(const Instance& inst);

struct CampaignOptions {
  int max_level = 6;    // T-images up to this level (less if the data is shorter)
  int max_arity = -1;   // A∞ relations up to this arity, < 0: all stored
  int max_degree = -1;  // internal degree cap, < 0: none
  Exec exec = Exec::parallel;
  Mutation mutation = Mutation::none;
};

// The A∞ relations of every algebra, morphism and homotopy.
VerificationReport check_structures(const Instance& inst, const CampaignOptions& opt = {});
// T(A), T(f), T(h) relation checks, functoriality on composable pairs, T(1) = 1,
// rewritten relations, and the transported equivalences.
VerificationReport check_theorems(const Instance& inst, const CampaignOptions& opt = {});
// Sign-free relations on the suspensions against the relations on the
// originals, relation by relation, n <= max_n. An entry fails when the two
// verdicts differ.
VerificationReport check_suspension(const Instance& inst, int max_n, Exec exec = Exec::parallel);

// The T-images of everything in `inst` as modules, module morphisms and
// module homotopies named T(x).
Instance apply_functor(const Instance& inst, int max_level, const FunctorOptions& opt = {});

// Adds "object": name to every entry's parameters.
VerificationReport tagged(VerificationReport r, const std::string& object);

}  // namespace infsimp
