#pragma once

#include <memory>

#include "infsimp/graded_map.hpp"

namespace infsimp {

// (SA)_{m+1} = A_m with η: SA -> A of degree −1 and ξ: A -> SA of degree +1.
struct Suspension {
  ComplexPtr base;
  ComplexPtr shifted;
  GradedMap eta;
  GradedMap xi;

  // η^{⊗n}: (SA)^{⊗n} -> A^{⊗n} and ξ^{⊗n}, Koszul signs included.
  GradedMap eta_power(int n) const;
  GradedMap xi_power(int n) const;
};

Suspension suspend(const ComplexPtr& a);

// Cached suspension, so that every structure over A shares one SA.
std::shared_ptr<const Suspension> suspension_of(const ComplexPtr& a);
// The cached suspension whose shifted complex is `sa`; throws if none.
std::shared_ptr<const Suspension> desuspension_of(const ComplexPtr& sa);

}  // namespace infsimp
