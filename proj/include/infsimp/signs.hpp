#pragma once

#include <string>
#include <vector>

#include "infsimp/koszul.hpp"
#include "infsimp/matrix.hpp"
#include "infsimp/report.hpp"

namespace infsimp {

// (n_1..n_s) positive with sum n − m, (t_1..t_s) positive with sum <= m + 2.
struct BlockParams {
  int n = 0, m = 0;
  std::vector<int> ns, ts;
};
// All s >= 1 parameter sets at level n, m = 0..n−1.
std::vector<BlockParams> block_parameter_sets(int n);

// η-conjugation of a term outer(S)∘(inner_1(S)⊗…⊗inner_r(S)) on the
// suspension, x(S) = ξ x η^{⊗in}: the exponent e with
//   η·term·(η^{⊗N})^{−1} = (−1)^e · outer∘(inner_1⊗…⊗inner_r).
// Only the inner layer matters; the outer symbol is composed, not tensored.
int conjugation_exponent(const Layer& inner);

// Exponent e with (1⊗…⊗x_s)∘…∘(x_1⊗1⊗…) = (−1)^e x_1⊗…⊗x_s, the
// symbols being applied one after another from the left.
int sequential_exponent(const std::vector<int>& degrees);

enum class SignSuite { congruences, exponents, koszul };
SignSuite parse_sign_suite(const std::string& name);
std::string to_string(SignSuite s);

// Hat equality, inversion formula and sign(σ) congruences for n <= max_n.
VerificationReport run_congruence_suite(int max_n, Exec exec = Exec::parallel);
// Proof-internal α/β reductions with the congruences substituted, and the
// μ/ε, ϑ/ϱ re-indexing identities, n <= max_n, 0 <= q <= max_q.
VerificationReport run_exponent_suite(int max_n, int max_q = 6, Exec exec = Exec::parallel);
// Every exponent against its mechanical derivation via the Koszul engine.
VerificationReport run_koszul_suite(int max_n, int max_q = 6, Exec exec = Exec::parallel);

VerificationReport run_sign_suite(SignSuite s, int max_n, Exec exec = Exec::parallel);

}  // namespace infsimp
