#include "infsimp/signs.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "infsimp/errors.hpp"
#include "infsimp/faces.hpp"

namespace infsimp {

namespace {

int par(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// One aggregated entry per (relation, n): every case is evaluated, the first
// few failures are quoted in the note.
struct Case {
  std::function<bool()> holds;
  std::function<std::string()> describe;
};

RelationOutcome tally(const std::string& relation, int n, const std::vector<Case>& cases, Exec exec) {
  std::vector<char> ok(cases.size(), 1);
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::parallel)
  for (long c = 0; c < count; ++c) ok[c] = cases[c].holds() ? 1 : 0;
  RelationOutcome out;
  out.relation = relation;
  out.params = {{"n", n}, {"cases", count}};
  int quoted = 0;
  long failed = 0;
  for (long c = 0; c < count; ++c) {
    if (ok[c]) continue;
    ++failed;
    if (quoted++ < 3) out.note += (out.note.empty() ? "" : "; ") + cases[c].describe();
  }
  if (failed) {
    out.status = Status::fail;
    out.note = std::to_string(failed) + " of " + std::to_string(count) + " cases fail: " + out.note;
  }
  return out;
}

ExponentParams nmt(int n, int m, int t) {
  ExponentParams p;
  p.n = n;
  p.m = m;
  p.t = t;
  return p;
}

ExponentParams blocks(const BlockParams& b) {
  ExponentParams p;
  p.n = b.n;
  p.m = b.m;
  p.ns = b.ns;
  p.ts = b.ts;
  return p;
}

std::string describe(const BlockParams& b) { return "n=" + std::to_string(b.n) + " ns=" + show(b.ns) + " ts=" + show(b.ts); }

// f_0^{t_1−1} ⊗ f_{n_1} ⊗ … ⊗ f_{n_s} ⊗ f_0^{m+2−Σt}, as the index list.
std::vector<int> padded(int m, const std::vector<int>& ns, const std::vector<int>& ts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out.insert(out.end(), ts[i] - 1, 0);
    out.push_back(ns[i]);
  }
  out.insert(out.end(), m + 2 - sum(ts), 0);
  return out;
}

// Inverse of padded: positive entries and their gap-plus-one lengths.
std::pair<std::vector<int>, std::vector<int>> unpad(const std::vector<int>& c) {
  std::vector<int> ns, ts;
  int run = 1;
  for (int v : c) {
    if (v == 0) {
      ++run;
      continue;
    }
    ns.push_back(v);
    ts.push_back(run);
    run = 1;
  }
  return {ns, ts};
}

GradedSymbol component(int degree, int in) { return GradedSymbol{degree, in, 1}; }
GradedSymbol identity_symbol() { return component(0, 1); }

// 1^{t−1} ⊗ x ⊗ 1^{r−t}
Layer linear_layer(int r, int t, GradedSymbol x) {
  Layer l(r, identity_symbol());
  l[t - 1] = x;
  return l;
}

// g_{c_1}⊗…⊗h_{c_i}⊗…⊗f_{c_last}: the family index changes degree only for h.
Layer homotopy_layer(const std::vector<int>& c, int i) {
  Layer l;
  for (int k = 1; k <= static_cast<int>(c.size()); ++k)
    l.push_back(component(c[k - 1] + (k == i ? 1 : 0), c[k - 1] + 1));
  return l;
}

Layer morphism_layer(const std::vector<int>& c) {
  Layer l;
  for (int v : c) l.push_back(component(v, v + 1));
  return l;
}

int prefix(const std::vector<int>& c, int upto) {
  int s = 0;
  for (int k = 0; k < upto; ++k) s += c[k];
  return s;
}

// Raw exponents of the rewritten relations on a degree-q input.
int alpha_raw(bool homotopy, int n, int m, int q, int sign_sigma) {
  long e = static_cast<long>(n + 1) * (q - 1) + sign_sigma + static_cast<long>(n - m) * (q - 1) +
           static_cast<long>(m + 1) * (q + (n - m - 1) - 1);
  return par(e + (homotopy ? 1 : 0));
}

int beta_raw(bool homotopy, int n, int m, int q, int sign_sigma, int gamma) {
  long e = static_cast<long>(n + 1) * (q - 1) + sign_sigma + static_cast<long>(n - m) * (q - 1) + gamma;
  e += homotopy ? static_cast<long>(m + 1) * (q + (n - m + 1) - 1) + 1 : static_cast<long>(m + 1) * (q + (n - m) - 1);
  return par(e);
}

int direct_sign(int n, const std::vector<int>& ns, const std::vector<int>& ts) {
  return permutation_parity(block_permutation(n, ns, ts).image);
}

// α and β reductions; sign(σ) and γ supplied by the caller.
void reduction_cases(int n, int max_q, const std::function<int(int, int, int)>& special_sign,
                     const std::function<int(const BlockParams&)>& block_sign,
                     const std::function<int(const std::vector<int>&)>& gamma, std::vector<Case>& alpha_m,
                     std::vector<Case>& alpha_h, std::vector<Case>& beta_m, std::vector<Case>& beta_h) {
  for (int m = 0; m <= n - 1; ++m)
    for (int t = 1; t <= m + 2; ++t)
      for (int q = 0; q <= max_q; ++q) {
        auto what = [=] {
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " t=" + std::to_string(t) +
                 " q=" + std::to_string(q);
        };
        alpha_m.push_back({[=] {
                             return alpha_raw(false, n, m, q, special_sign(n, m, t)) ==
                                    sign_exponent(ExponentKind::alpha_morphism, nmt(n, m, t));
                           },
                           what});
        alpha_h.push_back({[=] {
                             return alpha_raw(true, n, m, q, special_sign(n, m, t)) ==
                                    sign_exponent(ExponentKind::alpha_homotopy, nmt(n, m, t));
                           },
                           what});
      }
  for (const auto& b : block_parameter_sets(n))
    for (int q = 0; q <= max_q; ++q) {
      auto what = [=] { return describe(b) + " q=" + std::to_string(q); };
      beta_m.push_back({[=] {
                          return beta_raw(false, n, b.m, q, block_sign(b), gamma(b.ns)) ==
                                 sign_exponent(ExponentKind::mu, blocks(b));
                        },
                        what});
      beta_h.push_back({[=] {
                          return beta_raw(true, n, b.m, q, block_sign(b), gamma(b.ns)) ==
                                 sign_exponent(ExponentKind::theta, blocks(b));
                        },
                        what});
    }
}

}  // namespace

std::vector<BlockParams> block_parameter_sets(int n) {
  std::vector<BlockParams> out;
  for (int m = 0; m <= n - 1; ++m)
    for (int s = 1; s <= std::min(m + 2, n - m); ++s)
      for (const auto& ns : compositions(n - m, s, true))
        for (int used = s; used <= m + 2; ++used)
          for (const auto& ts : compositions(used, s, true)) out.push_back({n, m, ns, ts});
  return out;
}

int conjugation_exponent(const Layer& inner) {
  const int r = static_cast<int>(inner.size());
  int arity = 0;
  for (const auto& x : inner) arity += x.in;
  const GradedSymbol eta{-1, 1, 1}, xi{1, 1, 1};
  // ξ^{⊗r} (x_1⊗…⊗x_r) η^{⊗N} against x_1(S)⊗…⊗x_r(S)
  const int merge = collapse({Layer(r, xi), inner, Layer(arity, eta)}).first;
  // η^{⊗r} ξ^{⊗r} left over after ηξ = 1 on the outer symbol
  const int cancel = collapse({Layer(r, eta), Layer(r, xi)}).first;
  return par(merge + cancel);
}

int sequential_exponent(const std::vector<int>& degrees) {
  const int s = static_cast<int>(degrees.size());
  std::vector<Layer> layers;
  for (int i = s; i >= 1; --i) layers.push_back(linear_layer(s, i, component(degrees[i - 1], 1)));
  if (layers.empty()) return 0;
  return par(collapse(layers).first);
}

SignSuite parse_sign_suite(const std::string& name) {
  if (name == "congruences") return SignSuite::congruences;
  if (name == "exponents") return SignSuite::exponents;
  if (name == "koszul") return SignSuite::koszul;
  throw StructuralError("unknown sign suite '" + name + "'");
}

std::string to_string(SignSuite s) {
  switch (s) {
    case SignSuite::congruences:
      return "congruences";
    case SignSuite::exponents:
      return "exponents";
    case SignSuite::koszul:
      return "koszul";
  }
  return "?";
}

VerificationReport run_congruence_suite(int max_n, Exec exec) {
  VerificationReport r;
  r.subject = "signs-congruences";
  for (int n = 1; n <= max_n; ++n) {
    const auto sets = block_parameter_sets(n);
    std::vector<Case> hat_eq, inversions, general, special;
    for (const auto& b : sets) {
      auto what = [b] { return describe(b); };
      hat_eq.push_back({[b] {
                          const auto p = block_permutation(b.n, b.ns, b.ts);
                          std::vector<int> expect(b.m + 1);
                          std::iota(expect.begin(), expect.end(), 1);
                          for (const auto& blk : p.b) expect.insert(expect.end(), blk.begin(), blk.end());
                          return hat(p.image) == expect;
                        },
                        what});
      inversions.push_back({[b] {
                              const auto p = block_permutation(b.n, b.ns, b.ts);
                              return block_inversion_formula(p) == inversion_count(p.image);
                            },
                            what});
      general.push_back({[b] {
                           return direct_sign(b.n, b.ns, b.ts) == sign_exponent(ExponentKind::block_sign, blocks(b));
                         },
                         what});
      if (b.ns.size() == 1)
        special.push_back({[b] {
                             return direct_sign(b.n, b.ns, b.ts) ==
                                    sign_exponent(ExponentKind::block_sign_special, nmt(b.n, b.m, b.ts[0]));
                           },
                           what});
    }
    r.entries.push_back(tally("hat", n, hat_eq, exec));
    r.entries.push_back(tally("inversions", n, inversions, exec));
    r.entries.push_back(tally("block-sign", n, general, exec));
    r.entries.push_back(tally("block-sign-special", n, special, exec));
  }
  return r;
}

VerificationReport run_exponent_suite(int max_n, int max_q, Exec exec) {
  VerificationReport r;
  r.subject = "signs-exponents";
  auto special = [](int n, int m, int t) { return sign_exponent(ExponentKind::block_sign_special, nmt(n, m, t)); };
  auto general = [](const BlockParams& b) { return sign_exponent(ExponentKind::block_sign, blocks(b)); };
  auto gamma = [](const std::vector<int>& ns) {
    ExponentParams p;
    p.ns = ns;
    return sign_exponent(ExponentKind::gamma, p);
  };
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Case> am, ah, bm, bh, mu_eps, theta_rho, bijection;
    reduction_cases(n, max_q, special, general, gamma, am, ah, bm, bh);
    for (int m = 0; m <= n; ++m) {
      const auto comps = compositions(n - m, m + 2);
      long from_blocks = m == n ? 1 : 0;
      for (const auto& b : block_parameter_sets(n)) from_blocks += b.m == m ? 1 : 0;
      bijection.push_back({[=] {
                             if (static_cast<long>(comps.size()) != from_blocks) return false;
                             for (const auto& c : comps) {
                               auto [ns, ts] = unpad(c);
                               if (padded(m, ns, ts) != c) return false;
                             }
                             return true;
                           },
                           [=] { return "m=" + std::to_string(m); }});
      for (const auto& c : comps) {
        auto [ns, ts] = unpad(c);
        ExponentParams pe;
        pe.ns = c;
        ExponentParams pm;
        pm.m = m;
        pm.ns = ns;
        pm.ts = ts;
        auto what = [=] { return "m=" + std::to_string(m) + " word=" + show(c); };
        mu_eps.push_back({[=] {
                            return sign_exponent(ExponentKind::epsilon, pe) == sign_exponent(ExponentKind::mu, pm);
                          },
                          what});
        for (int i = 1; i <= m + 2; ++i) {
          ExponentParams pr = pe;
          pr.m = m;
          pr.i = i;
          theta_rho.push_back({[=] {
                                 return sign_exponent(ExponentKind::rho, pr) ==
                                        par(sign_exponent(ExponentKind::theta, pm) + prefix(c, i - 1));
                               },
                               [=] { return what() + " i=" + std::to_string(i); }});
        }
      }
    }
    r.entries.push_back(tally("alpha-morphism", n, am, exec));
    r.entries.push_back(tally("alpha-homotopy", n, ah, exec));
    r.entries.push_back(tally("beta-morphism", n, bm, exec));
    r.entries.push_back(tally("beta-homotopy", n, bh, exec));
    r.entries.push_back(tally("reindexing", n, bijection, exec));
    r.entries.push_back(tally("mu=epsilon", n, mu_eps, exec));
    r.entries.push_back(tally("theta=rho", n, theta_rho, exec));
  }
  return r;
}

VerificationReport run_koszul_suite(int max_n, int max_q, Exec exec) {
  VerificationReport r;
  r.subject = "signs-koszul";
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Case> lin_a, lin_f, lin_h, eps_f, eps_c, rho, mu, theta, gam;
    for (int m = 0; m <= n; ++m) {
      // sign-free suspended relations: π(m)(1..π(n−m)..1) with −1,
      // f(m)(1..π..1) with +1, h(m)(1..π..1) with −1
      for (int t = 1; t <= m + 2; ++t) {
        const Layer inner = linear_layer(m + 2, t, component(n - m, n - m + 2));
        lin_a.push_back({[=] {
                           return par(1 + conjugation_exponent(inner)) ==
                                  sign_exponent(ExponentKind::ainf_relation, nmt(n, m, t));
                         },
                         [=] { return "m=" + std::to_string(m) + " t=" + std::to_string(t); }});
      }
      for (int t = 1; t <= m + 1; ++t) {
        const Layer inner = linear_layer(m + 1, t, component(n - m, n - m + 2));
        auto what = [=] { return "m=" + std::to_string(m) + " t=" + std::to_string(t); };
        lin_f.push_back({[=] {
                           return conjugation_exponent(inner) ==
                                  sign_exponent(ExponentKind::morphism_linear, nmt(n, m, t));
                         },
                         what});
        lin_h.push_back({[=] {
                           return par(1 + conjugation_exponent(inner)) ==
                                  sign_exponent(ExponentKind::homotopy_linear, nmt(n, m, t));
                         },
                         what});
      }
      // π(m)(f(n_1)⊗…) with −1 against −(−1)^ε; g(m)(f(n_1)⊗…) with +1 against (−1)^ε
      for (const auto& c : compositions(n - m, m + 2)) {
        ExponentParams p;
        p.ns = c;
        p.m = m;
        eps_f.push_back({[=] {
                           return conjugation_exponent(morphism_layer(c)) == sign_exponent(ExponentKind::epsilon, p);
                         },
                         [=] { return "m=" + std::to_string(m) + " word=" + show(c); }});
        for (int i = 1; i <= m + 2; ++i) {
          ExponentParams pr = p;
          pr.i = i;
          rho.push_back({[=] {
                           return par(1 + conjugation_exponent(homotopy_layer(c, i))) ==
                                  sign_exponent(ExponentKind::rho, pr);
                         },
                         [=] { return "m=" + std::to_string(m) + " word=" + show(c) + " i=" + std::to_string(i); }});
        }
      }
      for (const auto& c : compositions(n - m, m + 1)) {
        ExponentParams p;
        p.ns = c;
        eps_c.push_back({[=] {
                           return conjugation_exponent(morphism_layer(c)) == sign_exponent(ExponentKind::epsilon, p);
                         },
                         [=] { return "m=" + std::to_string(m) + " word=" + show(c); }});
      }
    }
    // run-form words: the m = n word is all f_0
    std::vector<BlockParams> sets = block_parameter_sets(n);
    sets.push_back({n, n, {}, {}});
    for (const auto& b : sets) {
      const auto c = padded(b.m, b.ns, b.ts);
      const ExponentParams p = blocks(b);
      mu.push_back({[=] {
                      return par(1 + conjugation_exponent(morphism_layer(c))) ==
                             par(1 + sign_exponent(ExponentKind::mu, p));
                    },
                    [=] { return describe(b); }});
      // h at every slot: h_{n_i} on a block, h_0 inside a gap; either way the
      // inner sign is the sum of the positive indices to its left
      for (int slot = 1; slot <= b.m + 2; ++slot)
        theta.push_back({[=] {
                           return par(1 + conjugation_exponent(homotopy_layer(c, slot))) ==
                                  par(sign_exponent(ExponentKind::theta, p) + prefix(c, slot - 1));
                         },
                         [=] { return describe(b) + " slot=" + std::to_string(slot); }});
      if (!b.ns.empty()) {
        ExponentParams pg;
        pg.ns = b.ns;
        gam.push_back({[=] { return sequential_exponent(b.ns) == sign_exponent(ExponentKind::gamma, pg); },
                       [=] { return describe(b); }});
      }
    }
    std::vector<Case> am, ah, bm, bh;
    reduction_cases(
        n, max_q, [](int nn, int m, int t) { return direct_sign(nn, {nn - m}, {t}); },
        [](const BlockParams& b) { return direct_sign(b.n, b.ns, b.ts); },
        [](const std::vector<int>& ns) { return sequential_exponent(ns); }, am, ah, bm, bh);
    r.entries.push_back(tally("ainf-linear", n, lin_a, exec));
    r.entries.push_back(tally("morphism-linear", n, lin_f, exec));
    r.entries.push_back(tally("homotopy-linear", n, lin_h, exec));
    r.entries.push_back(tally("epsilon", n, eps_f, exec));
    r.entries.push_back(tally("epsilon-composition", n, eps_c, exec));
    r.entries.push_back(tally("rho", n, rho, exec));
    r.entries.push_back(tally("mu", n, mu, exec));
    r.entries.push_back(tally("theta", n, theta, exec));
    r.entries.push_back(tally("gamma", n, gam, exec));
    r.entries.push_back(tally("alpha-morphism", n, am, exec));
    r.entries.push_back(tally("alpha-homotopy", n, ah, exec));
    r.entries.push_back(tally("beta-morphism", n, bm, exec));
    r.entries.push_back(tally("beta-homotopy", n, bh, exec));
  }
  return r;
}

VerificationReport run_sign_suite(SignSuite s, int max_n, Exec exec) {
  switch (s) {
    case SignSuite::congruences:
      return run_congruence_suite(max_n, exec);
    case SignSuite::exponents:
      return run_exponent_suite(max_n, 6, exec);
    case SignSuite::koszul:
      return run_koszul_suite(max_n, 6, exec);
  }
  throw StructuralError("unknown sign suite");
}

}  // namespace infsimp
