#include "infsimp/symbolic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "infsimp/errors.hpp"

namespace infsimp {

namespace {

const std::string kMinus = "−";
const std::string kTensor = "⊗";
const std::string kFace = "∂";
const std::string kPi = "π";

// Symbolic tuples are encoded as concrete ones with i_s = kGap·(s+1), so that
// the numeric enumerators decide every comparison generically.
constexpr int kGap = 1000;

IndexTuple encode(int k) {
  IndexTuple t(k);
  for (int s = 0; s < k; ++s) t[s] = kGap * (s + 1);
  return t;
}

SymTuple decode(const IndexTuple& t) {
  SymTuple out;
  for (int v : t) {
    const int var = (v + kGap / 2) / kGap - 1;
    out.push_back({var, v - kGap * (var + 1)});
  }
  return out;
}

Factor simp(const std::string& sym, const IndexTuple& t) { return {sym, true, decode(t), 0}; }
Factor op(const std::string& sym, int index) { return {sym, false, {}, index}; }
Factor unit() { return {"1", false, {}, 0}; }

using Key = std::vector<std::pair<int, Factor>>;

Key key_of(const FormalTerm& t) {
  Key k;
  for (std::size_t l = 0; l < t.layers.size(); ++l)
    for (const auto& f : t.layers[l]) k.emplace_back(static_cast<int>(l), f);
  return k;
}

std::string render_term(const FormalTerm& t, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t l = 0; l < t.layers.size(); ++l) {
    const auto& layer = t.layers[l];
    std::string body;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (i) body += kTensor;
      body += render_factor(layer[i], names);
    }
    out += (l > 0 && layer.size() > 1) ? "(" + body + ")" : body;
  }
  return out;
}

std::string magnitude(long long c) { return c == 1 || c == -1 ? "" : std::to_string(c < 0 ? -c : c) + "·"; }

std::vector<Factor> padded(int before, Factor mid, int after) {
  std::vector<Factor> v(before, unit());
  v.push_back(std::move(mid));
  v.insert(v.end(), after, unit());
  return v;
}

ExponentParams linear(int n, int m, int t) {
  ExponentParams p;
  p.n = n, p.m = m, p.t = t;
  return p;
}

ExponentParams parts(std::vector<int> ns, int m = 0, int i = 0) {
  ExponentParams p;
  p.m = m, p.i = i, p.ns = std::move(ns);
  return p;
}

std::string subscript(int v) { return v >= 0 && v < 10 ? std::to_string(v) : "{" + std::to_string(v) + "}"; }

}  // namespace

void FormalTermSum::add(FormalTerm t) {
  if (t.coeff != 0) terms_.push_back(std::move(t));
}

void FormalTermSum::canonicalize() {
  std::map<Key, FormalTerm, std::greater<>> merged;
  for (auto& t : terms_) {
    Key k = key_of(t);
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(std::move(k), std::move(t));
    else
      it->second.coeff += t.coeff;
  }
  terms_.clear();
  for (auto& [k, t] : merged)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

std::vector<std::string> FormalTermSum::signed_terms(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& t : terms_) out.push_back((t.coeff < 0 ? kMinus : "+") + magnitude(t.coeff) + render_term(t, names));
  return out;
}

std::string FormalTermSum::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i == 0)
      out += t.coeff < 0 ? kMinus : "";
    else
      out += t.coeff < 0 ? " " + kMinus + " " : " + ";
    out += magnitude(t.coeff) + render_term(t, names);
  }
  return out;
}

Relation parse_relation(const std::string& id) {
  static const std::map<std::string, Relation> table = {
      {"1.1", Relation::faces},  {"1.2", Relation::morphism},      {"1.3", Relation::composition},
      {"1.4", Relation::homotopy}, {"2.1", Relation::ainf},        {"2.2", Relation::ainf_morphism},
      {"2.3", Relation::ainf_composition}, {"2.4", Relation::ainf_homotopy}};
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown relation id '" + id + "'");
  return it->second;
}

std::string relation_id(Relation r) {
  switch (r) {
    case Relation::faces: return "1.1";
    case Relation::morphism: return "1.2";
    case Relation::composition: return "1.3";
    case Relation::homotopy: return "1.4";
    case Relation::ainf: return "2.1";
    case Relation::ainf_morphism: return "2.2";
    case Relation::ainf_composition: return "2.3";
    case Relation::ainf_homotopy: return "2.4";
  }
  return "?";
}

bool is_simplicial(Relation r) {
  return r == Relation::faces || r == Relation::morphism || r == Relation::composition || r == Relation::homotopy;
}

int min_parameter(Relation r) {
  switch (r) {
    case Relation::faces: return 1;
    case Relation::morphism:
    case Relation::composition:
    case Relation::homotopy:
    case Relation::ainf_composition: return 0;
    default: return -1;
  }
}

std::vector<std::string> variable_names(Relation r, int k) {
  if (!is_simplicial(r)) return {};
  if (k == 1) return {"i"};
  if (k == 2 && r != Relation::composition) return {"i", "j"};
  std::vector<std::string> v;
  for (int s = 1; s <= k; ++s) v.push_back("i_" + std::to_string(s));
  return v;
}

std::string render_index(const SymIndex& x, const std::vector<std::string>& names) {
  std::string base = x.var >= 0 && x.var < static_cast<int>(names.size()) ? names[x.var] : "i_" + std::to_string(x.var + 1);
  if (x.offset < 0) return base + kMinus + std::to_string(-x.offset);
  if (x.offset > 0) return base + "+" + std::to_string(x.offset);
  return base;
}

std::string render_factor(const Factor& f, const std::vector<std::string>& names) {
  if (f.symbol == "1") return "1";
  if (!f.simplicial) return f.symbol + "_" + subscript(f.index);
  std::string s = f.symbol + "_{(";
  for (std::size_t i = 0; i < f.tuple.size(); ++i) {
    if (i) s += ",";
    s += render_index(f.tuple[i], names);
  }
  return s + ")}";
}

FormalTermSum expand_relation_symbolic(Relation r, int k) {
  if (k < min_parameter(r))
    throw std::invalid_argument("relation " + relation_id(r) + " needs parameter >= " + std::to_string(min_parameter(r)));
  FormalTermSum sum;
  const int n = k;
  switch (r) {
    case Relation::faces: {
      for (const auto& sp : enum_relation_splits(encode(k)))
        sum.add({sp.sign, {{simp(kFace, sp.left)}, {simp(kFace, sp.right)}}});
      break;
    }
    case Relation::morphism: {
      const IndexTuple t = encode(k);
      if (k == 0) break;
      sum.add({-1, {{simp(kFace, t)}, {simp("f", {})}}});
      sum.add({1, {{simp("f", {})}, {simp(kFace, t)}}});
      for (const auto& sp : enum_relation_splits(t)) {
        sum.add({sp.sign, {{simp(kFace, sp.left)}, {simp("f", sp.right)}}});
        sum.add({-sp.sign, {{simp("f", sp.left)}, {simp(kFace, sp.right)}}});
      }
      break;
    }
    case Relation::composition: {
      for (const auto& sp : enum_composition_splits(encode(k)))
        sum.add({sp.sign, {{simp("g", sp.left)}, {simp("f", sp.right)}}});
      break;
    }
    case Relation::homotopy: {
      const IndexTuple t = encode(k);
      sum.add({1, {{simp("f", t)}}});
      sum.add({-1, {{simp("g", t)}}});
      if (k == 0) break;
      sum.add({-1, {{simp(kFace, t)}, {simp("h", {})}}});
      sum.add({-1, {{simp("h", {})}, {simp(kFace, t)}}});
      for (const auto& sp : enum_relation_splits(t)) {
        sum.add({sp.sign, {{simp(kFace, sp.left)}, {simp("h", sp.right)}}});
        sum.add({sp.sign, {{simp("h", sp.left)}, {simp(kFace, sp.right)}}});
      }
      break;
    }
    case Relation::ainf: {
      for (int m = 0; m <= n; ++m)
        for (int t = 1; t <= m + 2; ++t) {
          const int e = sign_exponent(ExponentKind::ainf_relation, linear(n, m, t));
          sum.add({e ? -1 : 1, {{op(kPi, m)}, padded(t - 1, op(kPi, n - m), m - t + 2)}});
        }
      break;
    }
    case Relation::ainf_morphism: {
      for (int m = 0; m <= n; ++m)
        for (int t = 1; t <= m + 1; ++t) {
          const int e = sign_exponent(ExponentKind::morphism_linear, linear(n, m, t));
          sum.add({e ? -1 : 1, {{op("f", m)}, padded(t - 1, op(kPi, n - m), m - t + 1)}});
        }
      for (int m = 0; m <= n; ++m)
        for (const auto& ns : compositions(n - m, m + 2)) {
          std::vector<Factor> inner;
          for (int v : ns) inner.push_back(op("f", v));
          const int e = sign_exponent(ExponentKind::epsilon, parts(ns));
          sum.add({e ? 1 : -1, {{op(kPi, m)}, inner}});
        }
      break;
    }
    case Relation::ainf_composition: {
      for (int m = 0; m <= n; ++m)
        for (const auto& ns : compositions(n - m, m + 1)) {
          std::vector<Factor> inner;
          for (int v : ns) inner.push_back(op("f", v));
          const int e = sign_exponent(ExponentKind::epsilon, parts(ns));
          sum.add({e ? -1 : 1, {{op("g", m)}, inner}});
        }
      break;
    }
    case Relation::ainf_homotopy: {
      sum.add({1, {{op("f", n + 1)}}});
      sum.add({-1, {{op("g", n + 1)}}});
      for (int m = 0; m <= n; ++m)
        for (int t = 1; t <= m + 1; ++t) {
          const int e = sign_exponent(ExponentKind::homotopy_linear, linear(n, m, t));
          sum.add({e ? -1 : 1, {{op("h", m)}, padded(t - 1, op(kPi, n - m), m - t + 1)}});
        }
      for (int m = 0; m <= n; ++m)
        for (const auto& ns : compositions(n - m, m + 2))
          for (int i = 1; i <= m + 2; ++i) {
            std::vector<Factor> inner;
            for (int s = 1; s <= m + 2; ++s) inner.push_back(op(s < i ? "g" : s == i ? "h" : "f", ns[s - 1]));
            const int e = sign_exponent(ExponentKind::rho, parts(ns, m, i));
            sum.add({e ? -1 : 1, {{op(kPi, m)}, inner}});
          }
      break;
    }
  }
  sum.canonicalize();
  return sum;
}

std::string relation_lhs(Relation r, int k) {
  std::string tuple;
  if (is_simplicial(r)) {
    tuple = render_factor(simp("f", encode(k)), variable_names(r, k));
    tuple = tuple.substr(1);
  }
  switch (r) {
    case Relation::faces: return "d(" + kFace + tuple + ")";
    case Relation::morphism: return "d(f" + tuple + ")";
    case Relation::composition: return "(gf)" + tuple;
    case Relation::homotopy: return "d(h" + tuple + ")";
    case Relation::ainf: return "d(" + kPi + "_" + subscript(k + 1) + ")";
    case Relation::ainf_morphism: return "d(f_" + subscript(k + 1) + ")";
    case Relation::ainf_composition: return "(gf)_" + subscript(k);
    case Relation::ainf_homotopy: return "d(h_" + subscript(k + 1) + ")";
  }
  return "";
}

IndexTuple bind(const SymTuple& t, const std::vector<int>& values) {
  IndexTuple out;
  for (const auto& x : t) {
    if (x.var < 0 || x.var >= static_cast<int>(values.size())) throw std::out_of_range("unbound symbolic index");
    out.push_back(values[x.var] + x.offset);
  }
  return out;
}

GradedMap evaluate_simplicial(const FormalTermSum& sum, const std::vector<int>& values, int n,
                              const SimplicialResolver& resolve, GradedMap zero, Exec exec) {
  for (const auto& term : sum.terms()) {
    const Scalar c(term.coeff);
    if (term.layers.size() == 1) {
      const Factor& f = term.layers[0].at(0);
      if (const GradedMap* m = resolve(f.symbol, n, bind(f.tuple, values))) zero += c * *m;
      continue;
    }
    const Factor& lf = term.layers.at(0).at(0);
    const Factor& rf = term.layers.at(1).at(0);
    const IndexTuple rt = bind(rf.tuple, values);
    const GradedMap* right = resolve(rf.symbol, n, rt);
    const GradedMap* left = resolve(lf.symbol, n - static_cast<int>(rt.size()), bind(lf.tuple, values));
    if (left && right) zero += c * compose(*left, *right, exec);
  }
  return zero;
}

GradedMap evaluate_ainf(const FormalTermSum& sum, const AInfResolver& resolve, const Space& unit_space, GradedMap zero,
                        Exec exec) {
  const GradedMap id = GradedMap::identity(unit_space);
  for (const auto& term : sum.terms()) {
    const Scalar c(term.coeff);
    const Factor& of = term.layers.at(0).at(0);
    const GradedMap* outer = resolve(of.symbol, of.index);
    if (!outer) continue;
    if (term.layers.size() == 1) {
      zero += c * *outer;
      continue;
    }
    std::vector<GradedMap> inner;
    bool absent = false;
    for (const auto& f : term.layers[1]) {
      if (f.symbol == "1") {
        inner.push_back(id);
      } else if (const GradedMap* m = resolve(f.symbol, f.index)) {
        inner.push_back(*m);
      } else {
        absent = true;
        break;
      }
    }
    if (absent) continue;
    zero += c * compose(*outer, tensor(inner, exec), exec);
  }
  return zero;
}

}  // namespace infsimp
