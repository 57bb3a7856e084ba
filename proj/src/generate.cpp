#include "infsimp/generate.hpp"

#include <array>
#include <map>
#include <numeric>

#include "infsimp/errors.hpp"

namespace infsimp {

namespace {

// e_i · e_j = c · e_k on global basis ids.
struct Product {
  int i, j, k;
  long long c;
};

GradedMap multiplication(const ComplexPtr& a, const std::vector<Product>& table, const Ring& ring) {
  const Space pair{a, 2};
  const TensorSpace& ts = pair.tensor();
  GradedMap pi(pair, Space{a, 1}, 0);
  std::map<int, SparseMatrix> blocks;
  for (int q = 0; q <= ts.max_degree(); ++q)
    if (ts.dim(q) && a->dim(q)) blocks.emplace(q, SparseMatrix(a->dim(q), ts.dim(q)));
  for (const auto& p : table) {
    const std::uint32_t w[2] = {static_cast<std::uint32_t>(p.i), static_cast<std::uint32_t>(p.j)};
    auto [q, pos] = ts.locate(w);
    if (a->degree_of(p.k) != q) throw StructuralError("product table is not homogeneous");
    blocks.at(q).add(p.k - a->offset(q), pos, ring.make(p.c));
  }
  for (auto& [q, m] : blocks) pi.set_block(q, std::move(m));
  return pi;
}

AInfAlgebra pad(ComplexPtr a, GradedMap pi0, int arity_cutoff) {
  AInfAlgebra r{std::move(a), {std::move(pi0)}, Convention::standard};
  for (int n = 1; n + 2 <= arity_cutoff; ++n) r.ops.emplace_back(Space{r.base, n + 2}, Space{r.base, 1}, n);
  return r;
}

void note(Telemetry* tel, bool contraction) {
  if (!tel) return;
  if (contraction) ++tel->contraction_solves;
  else ++tel->linear_solves;
}

GradedMap solve_step(const GradedMap& rhs, int degree, const GradedMap* contraction, Telemetry* tel,
                     const std::string& what) {
  GradedMap phi;
  if (contraction) {
    phi = solve_with_contraction(rhs, *contraction);
  } else {
    auto sol = solve_hom_equation(rhs, degree);
    if (!sol) throw GenerationError("obstruction: no solution for " + what);
    phi = std::move(*sol);
  }
  note(tel, contraction != nullptr);
  if (!(map_differential(phi) == rhs)) throw GenerationError("obstruction: right side for " + what + " is not a cycle");
  return phi;
}

template <class F>
auto with_retries(const GeneratorSpec& spec, Telemetry* tel, F&& attempt) {
  GeneratorSpec s = spec;
  for (int k = 0;; ++k) {
    try {
      return attempt(s);
    } catch (const GenerationError&) {
      if (k >= spec.retries) throw;
      if (tel) ++tel->retries;
      s.seed = spec.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k + 1);
    }
  }
}

void record(Telemetry* tel, const std::vector<GradedMap>& comps) {
  if (!tel) return;
  tel->nonzero.clear();
  for (const auto& c : comps) tel->nonzero.push_back(!c.is_zero());
}

}  // namespace

GenKind parse_gen_kind(const std::string& s) {
  static const std::map<std::string, GenKind> table = {{"dga", GenKind::strict_dga},
                                                       {"strict-dga", GenKind::strict_dga},
                                                       {"cone", GenKind::cone},
                                                       {"ainf", GenKind::ainf_extend},
                                                       {"ainf-extend", GenKind::ainf_extend},
                                                       {"morphism", GenKind::morphism_extend},
                                                       {"morphism-extend", GenKind::morphism_extend},
                                                       {"homotopy", GenKind::homotopy_extend},
                                                       {"homotopy-extend", GenKind::homotopy_extend}};
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown generator kind '" + s + "'");
  return it->second;
}

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::strict_dga: return "strict-dga";
    case GenKind::cone: return "cone";
    case GenKind::ainf_extend: return "ainf-extend";
    case GenKind::morphism_extend: return "morphism-extend";
    case GenKind::homotopy_extend: return "homotopy-extend";
  }
  return "?";
}

ComplexPtr random_complex(Rng& rng, const std::vector<int>& dims, const Ring& ring, int range, int density,
                          const std::string& name) {
  std::map<int, SparseMatrix> d;
  for (std::size_t q = 1; q < dims.size(); ++q) {
    if (dims[q] == 0 || dims[q - 1] == 0) continue;
    // Columns of d_q are random combinations of a basis of ker d_{q−1}.
    std::vector<std::vector<Scalar>> ker;
    auto prev = d.find(static_cast<int>(q) - 1);
    if (prev == d.end()) {
      for (int i = 0; i < dims[q - 1]; ++i) {
        std::vector<Scalar> e(dims[q - 1], Scalar(0));
        e[i] = ring.make(1);
        ker.push_back(std::move(e));
      }
    } else {
      ker = kernel_basis(prev->second);
    }
    if (ker.empty()) continue;
    SparseMatrix basis(dims[q - 1], ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (int i = 0; i < dims[q - 1]; ++i)
        if (!(ker[j][i] == Scalar(0))) basis.add(i, j, ker[j][i]);
    SparseMatrix coeffs = random_matrix(rng, ker.size(), dims[q], range, density, ring);
    SparseMatrix dq = multiply(basis, coeffs, Exec::serial);
    if (!dq.is_zero()) d.emplace(static_cast<int>(q), std::move(dq));
  }
  return Complex::create(dims, std::move(d), name);
}

Cone cone_of_identity(const ComplexPtr& c, const std::string& name) {
  const int top = c->max_degree() + 1;
  std::vector<int> dims(top + 1);
  for (int q = 0; q <= top; ++q) dims[q] = c->dim(q) + c->dim(q - 1);
  auto dblock = [&](int q) -> const SparseMatrix* {
    auto it = c->differential().find(q);
    return it == c->differential().end() ? nullptr : &it->second;
  };
  std::map<int, SparseMatrix> d;
  for (int q = 1; q <= top; ++q) {
    // rows [C_{q−1} | C_{q−2}], cols [C_q | C_{q−1}]: [[d_q, 1], [0, −d_{q−1}]]
    SparseMatrix m(dims[q - 1], dims[q]);
    const int cq = c->dim(q), cq1 = c->dim(q - 1);
    if (auto* dq = dblock(q))
      for (int j = 0; j < cq; ++j)
        for (const auto& e : dq->column(j)) m.add(e.row, j, e.value);
    for (int i = 0; i < cq1; ++i) m.add(i, cq + i, Scalar(1));
    if (auto* dq1 = dblock(q - 1))
      for (int j = 0; j < cq1; ++j)
        for (const auto& e : dq1->column(j)) m.add(cq1 + e.row, cq + j, Scalar(-1) * e.value);
    if (!m.is_zero()) d.emplace(q, std::move(m));
  }
  auto k = Complex::create(dims, std::move(d), name);
  GradedMap s(Space{k, 1}, Space{k, 1}, 1);
  for (int q = 0; q < top; ++q) {
    // (a, b) ↦ (0, a): C_q sits after C_{q+1} in Cone_{q+1}.
    const int cq = c->dim(q);
    if (cq == 0) continue;
    SparseMatrix m(dims[q + 1], dims[q]);
    for (int i = 0; i < cq; ++i) m.add(c->dim(q + 1) + i, i, Scalar(1));
    s.set_block(q, std::move(m));
  }
  return {k, std::move(s)};
}

std::vector<std::string> strict_dga_names() {
  return {"upper-triangular", "exterior", "dual-numbers", "tensor", "acyclic-exterior"};
}

AInfAlgebra make_strict_dga(const std::string& name, int arity_cutoff, const Ring& ring) {
  if (name == "upper-triangular") {
    auto a = Complex::create({3}, {}, "T2");
    return pad(a, multiplication(a, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, ring), arity_cutoff);
  }
  if (name == "exterior" || name == "acyclic-exterior") {
    std::map<int, SparseMatrix> d;
    if (name == "acyclic-exterior") {
      SparseMatrix one(1, 1);
      one.add(0, 0, ring.make(1));
      d.emplace(1, std::move(one));
    }
    auto a = Complex::create({1, 1}, std::move(d), name == "exterior" ? "L" : "Lacyc");
    return pad(a, multiplication(a, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, ring), arity_cutoff);
  }
  if (name == "dual-numbers") {
    auto a = Complex::create({2}, {}, "D");
    return pad(a, multiplication(a, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, ring), arity_cutoff);
  }
  if (name == "tensor") {
    // e_i⊗1 in degree 0 (ids 0..2), e_i⊗x in degree 1 (ids 3..5);
    // (a⊗u)(b⊗v) = (−1)^{|u||b|} ab⊗uv and |b| = 0 throughout.
    auto a = Complex::create({3, 3}, {}, "T2L");
    const std::vector<std::array<int, 3>> t2 = {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}};
    std::vector<Product> table;
    for (const auto& [i, j, k] : t2) {
      table.push_back({i, j, k, 1});
      table.push_back({i, 3 + j, 3 + k, 1});
      table.push_back({3 + i, j, 3 + k, 1});
    }
    return pad(a, multiplication(a, table, ring), arity_cutoff);
  }
  throw std::invalid_argument("unknown strict algebra '" + name + "'");
}

GradedMap solve_with_contraction(const GradedMap& rhs, const GradedMap& contraction, Exec exec) {
  return compose(contraction, rhs, exec);
}

std::optional<GradedMap> solve_hom_equation(const GradedMap& rhs, int degree) {
  const Space& src = rhs.src();
  const Space& tgt = rhs.tgt();
  if (rhs.degree() != degree - 1) throw StructuralError("right side has the wrong degree");
  const auto& dsrc = src.tensor().differential();
  const auto& dtgt = tgt.tensor().differential();
  const int top = src.max_degree();
  // Unknown and equation blocks, keyed by source degree.
  std::map<int, std::size_t> uoff, eoff;
  std::size_t unknowns = 0, equations = 0;
  for (int q = 0; q <= top; ++q) {
    uoff[q] = unknowns;
    unknowns += static_cast<std::size_t>(src.dim(q)) * tgt.dim(q + degree);
    eoff[q] = equations;
    equations += static_cast<std::size_t>(src.dim(q)) * tgt.dim(q + degree - 1);
  }
  std::map<int, SparseMatrix> dsrc_t;
  for (const auto& [q, m] : dsrc) dsrc_t.emplace(q, m.transposed());
  const Scalar twist = (degree & 1) ? Scalar(1) : Scalar(-1);
  SparseMatrix a(equations, unknowns);
  for (int q = 0; q <= top; ++q) {
    const int rows = tgt.dim(q + degree);
    for (int c = 0; c < src.dim(q); ++c)
      for (int r = 0; r < rows; ++r) {
        const std::size_t u = uoff[q] + static_cast<std::size_t>(c) * rows + r;
        SparseMatrix::Column col;
        if (auto it = dtgt.find(q + degree); it != dtgt.end()) {
          const int erows = tgt.dim(q + degree - 1);
          for (const auto& e : it->second.column(r))
            col.push_back({static_cast<std::uint32_t>(eoff[q] + static_cast<std::size_t>(c) * erows + e.row), e.value});
        }
        if (auto it = dsrc_t.find(q + 1); it != dsrc_t.end()) {
          const int erows = tgt.dim(q + degree);
          for (const auto& e : it->second.column(c))
            col.push_back({static_cast<std::uint32_t>(eoff[q + 1] + static_cast<std::size_t>(e.row) * erows + r),
                           twist * e.value});
        }
        a.set_column(u, std::move(col));
      }
  }
  std::vector<Scalar> b(equations, Scalar(0));
  for (const auto& [q, m] : rhs.blocks()) {
    const int erows = tgt.dim(q + degree - 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& e : m.column(c)) b[eoff[q] + c * erows + e.row] = e.value;
  }
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  GradedMap phi(src, tgt, degree);
  for (int q = 0; q <= top; ++q) {
    const int rows = tgt.dim(q + degree);
    if (rows == 0 || src.dim(q) == 0) continue;
    SparseMatrix m(rows, src.dim(q));
    for (int c = 0; c < src.dim(q); ++c)
      for (int r = 0; r < rows; ++r) {
        const Scalar& v = (*x)[uoff[q] + static_cast<std::size_t>(c) * rows + r];
        if (!(v == Scalar(0))) m.add(r, c, v);
      }
    phi.set_block(q, std::move(m));
  }
  return phi;
}

GradedMap random_boundary(Rng& rng, const Space& src, const Space& tgt, int degree, const GeneratorSpec& spec) {
  return map_differential(random_map(rng, src, tgt, degree + 1, spec.range, spec.density, spec.ring));
}

AInfAlgebra extend_ainf(const GeneratorSpec& spec, const ComplexPtr& base, const GradedMap* contraction,
                        Telemetry* tel) {
  if (spec.arity_cutoff < 2) throw std::invalid_argument("arity cutoff must be at least 2");
  return with_retries(spec, tel, [&](const GeneratorSpec& s) {
    Rng rng(s.seed);
    AInfAlgebra a{base, {}, Convention::standard};
    a.ops.push_back(random_boundary(rng, Space{base, 2}, Space{base, 1}, 0, s));
    for (int n = 0; n + 3 <= s.arity_cutoff; ++n) {
      a.ops.emplace_back(Space{base, n + 3}, Space{base, 1}, n + 1);
      GradedMap phi = solve_step(algebra_rhs(a, n, Exec::serial), n + 1, contraction, tel,
                                 "pi_" + std::to_string(n + 1));
      if (s.diversify) phi += random_boundary(rng, Space{base, n + 3}, Space{base, 1}, n + 1, s);
      a.ops.back() = std::move(phi);
    }
    record(tel, a.ops);
    return a;
  });
}

AInfMorphism extend_morphism(const GeneratorSpec& spec, const AlgebraPtr& src, const AlgebraPtr& tgt,
                             const GradedMap* contraction, std::optional<GradedMap> f0, Telemetry* tel) {
  const int count = std::min({spec.arity_cutoff, src->arity_cutoff(), tgt->arity_cutoff()});
  return with_retries(spec, tel, [&](const GeneratorSpec& s) {
    Rng rng(s.seed);
    AInfMorphism f{src, tgt, {}};
    f.comps.push_back(f0 ? *f0 : random_boundary(rng, Space{src->base, 1}, Space{tgt->base, 1}, 0, s));
    if (!map_differential(f.comps[0]).is_zero()) throw std::invalid_argument("f_0 must be a chain map");
    for (int n = 0; n + 2 <= count; ++n) {
      f.comps.emplace_back(Space{src->base, n + 2}, Space{tgt->base, 1}, n + 1);
      GradedMap phi = solve_step(morphism_rhs(f, n, Exec::serial), n + 1, contraction, tel,
                                 "f_" + std::to_string(n + 1));
      if (s.diversify) phi += random_boundary(rng, Space{src->base, n + 2}, Space{tgt->base, 1}, n + 1, s);
      f.comps.back() = std::move(phi);
    }
    record(tel, f.comps);
    return f;
  });
}

AInfHomotopy extend_homotopy(const GeneratorSpec& spec, const AInfMorphismPtr& f, const AInfMorphismPtr& g,
                             const GradedMap* contraction, Telemetry* tel) {
  const int count = std::min({spec.arity_cutoff, static_cast<int>(f->comps.size()), static_cast<int>(g->comps.size())});
  const ComplexPtr& a = f->source->base;
  const ComplexPtr& b = f->target->base;
  return with_retries(spec, tel, [&](const GeneratorSpec& s) {
    Rng rng(s.seed);
    AInfHomotopy h{f, g, {}};
    GradedMap h0 = solve_step(f->comps[0] - g->comps[0], 1, contraction, tel, "h_0");
    if (s.diversify) h0 += random_boundary(rng, Space{a, 1}, Space{b, 1}, 1, s);
    h.comps.push_back(std::move(h0));
    for (int n = 0; n + 2 <= count; ++n) {
      h.comps.emplace_back(Space{a, n + 2}, Space{b, 1}, n + 2);
      GradedMap phi = solve_step(homotopy_rhs(h, n, Exec::serial), n + 2, contraction, tel,
                                 "h_" + std::to_string(n + 1));
      if (s.diversify) phi += random_boundary(rng, Space{a, n + 2}, Space{b, 1}, n + 2, s);
      h.comps.back() = std::move(phi);
    }
    record(tel, h.comps);
    return h;
  });
}

ConeAlgebra generate_cone_algebra(const GeneratorSpec& spec) {
  const int total = 2 * std::accumulate(spec.dims.begin(), spec.dims.end(), 0);
  if (total > spec.max_total_dim)
    throw std::invalid_argument("cone dimension " + std::to_string(total) + " exceeds the cap " +
                                std::to_string(spec.max_total_dim));
  Rng rng(spec.seed);
  auto c = random_complex(rng, spec.dims, spec.ring, spec.range, spec.density, "C" + std::to_string(spec.seed));
  ConeAlgebra out{cone_of_identity(c, "K" + std::to_string(spec.seed)), nullptr, {}};
  GeneratorSpec s = spec;
  s.seed = rng.next();
  out.algebra = std::make_shared<const AInfAlgebra>(extend_ainf(s, out.cone.complex, &out.cone.contraction, &out.telemetry));
  return out;
}

}  // namespace infsimp
