#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "infsimp/faces.hpp"
#include "infsimp/graded_map.hpp"

namespace infsimp {

// i_{var} + offset, with i_0 < i_1 < … symbolic and far apart.
struct SymIndex {
  int var = 0;
  int offset = 0;
  auto operator<=>(const SymIndex&) const = default;
};
using SymTuple = std::vector<SymIndex>;

// One operation symbol: "∂", "f", "g", "h", "π" or "1". Simplicial symbols
// carry a tuple subscript, A∞ symbols an arity subscript.
struct Factor {
  std::string symbol;
  bool simplicial = false;
  SymTuple tuple;
  int index = 0;
  auto operator<=>(const Factor&) const = default;
};

// coeff · layers[0] ∘ layers[1] ∘ …, each layer a tensor product of factors.
struct FormalTerm {
  long long coeff = 1;
  std::vector<std::vector<Factor>> layers;
};

class FormalTermSum {
 public:
  void add(FormalTerm t);
  // Merges equal composites and sorts in descending lexicographic order of
  // the factor sequence.
  void canonicalize();
  const std::vector<FormalTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Each term with its sign, e.g. "+∂_{(j−1)}∂_{(i)}".
  std::vector<std::string> signed_terms(const std::vector<std::string>& names) const;
  // "a − b + c", or "0" for the empty sum.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<FormalTerm> terms_;
};

enum class Relation { faces, morphism, composition, homotopy, ainf, ainf_morphism, ainf_composition, ainf_homotopy };

// "1.1" … "1.4", "2.1" … "2.4".
Relation parse_relation(const std::string& id);
std::string relation_id(Relation r);
bool is_simplicial(Relation r);
// Smallest admissible parameter: k for simplicial relations, n for A∞ ones.
int min_parameter(Relation r);

// Variable names: i (k=1), i,j (k=2) and i_1,… otherwise; composition uses i_s from k=2.
std::vector<std::string> variable_names(Relation r, int k);
std::string render_index(const SymIndex& x, const std::vector<std::string>& names);
std::string render_factor(const Factor& f, const std::vector<std::string>& names);

// Right-hand side of the relation at tuple length k (simplicial) or at n (A∞,
// the relation for d(π_{n+1}), d(f_{n+1}), (gf)_n, d(h_{n+1})).
FormalTermSum expand_relation_symbolic(Relation r, int k);
std::string relation_lhs(Relation r, int k);

// Concrete tuple for a binding of i_0, i_1, … .
IndexTuple bind(const SymTuple& t, const std::vector<int>& values);

// Numeric evaluation. Simplicial: a composite L∘R acts at level n with R
// first; a single factor acts at level n. Absent components are zero.
using SimplicialResolver = std::function<const GradedMap*(const std::string& symbol, int level, const IndexTuple& t)>;
GradedMap evaluate_simplicial(const FormalTermSum& sum, const std::vector<int>& values, int n,
                              const SimplicialResolver& resolve, GradedMap zero, Exec exec = Exec::serial);

// A∞: "1" resolves to the identity of `unit`.
using AInfResolver = std::function<const GradedMap*(const std::string& symbol, int index)>;
GradedMap evaluate_ainf(const FormalTermSum& sum, const AInfResolver& resolve, const Space& unit, GradedMap zero,
                        Exec exec = Exec::serial);

}  // namespace infsimp
