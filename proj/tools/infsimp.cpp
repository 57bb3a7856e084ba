#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <omp.h>
#include <sstream>

#include "infsimp/campaign.hpp"
#include "infsimp/signs.hpp"
#include "infsimp/symbolic.hpp"

#ifndef INFSIMP_VERSION
#define INFSIMP_VERSION "dev"
#endif

using namespace infsimp;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool serial = false;
  int threads = 0;
  bool json_out = false;
  std::string report_path;
  bool quiet = false;

  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad value for ") + name + ": " + v);
  }
}

Ring env_ring(const std::string& flag) {
  if (!flag.empty()) return Ring::parse(flag);
  const char* v = std::getenv("INFSIMP_RING");
  return v && *v ? Ring::parse(v) : Ring::rationals();
}

std::string ring_name(const Ring& r) { return r.is_rational() ? "Q" : "Z/" + std::to_string(r.modulus); }

Mutation parse_mutation(const std::string& s) {
  if (s.empty() || s == "none") return Mutation::none;
  for (Mutation m : all_mutations())
    if (to_string(m) == s) return m;
  throw UsageError("unknown mutation: " + s);
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad --dims entry: " + tok);
    }
  }
  if (out.empty()) throw UsageError("empty --dims");
  return out;
}

void print_summary(std::ostream& os, const VerificationReport& r) {
  os << r.subject << ": " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::skipped) << " skipped\n";
  int shown = 0;
  for (const auto& e : r.entries) {
    if (e.status != Status::fail) continue;
    if (++shown > 20) {
      os << "  ...\n";
      break;
    }
    os << "  FAIL " << e.relation << " " << e.params.dump();
    if (e.residual)
      os << " residual at degree " << e.residual->source_degree << " (" << e.residual->row << ","
         << e.residual->col << ") = " << e.residual->value;
    if (!e.note.empty()) os << " " << e.note;
    os << "\n";
  }
}

// Writes the JSON document and the human summary; returns the exit code.
int emit(const Common& c, const std::string& command, const json& config, const std::vector<VerificationReport>& rs) {
  json doc;
  doc["tool"] = "infsimp";
  doc["version"] = INFSIMP_VERSION;
  doc["command"] = command;
  doc["config"] = config;
  doc["reports"] = json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : rs) {
    doc["reports"].push_back(r.to_json());
    pass += r.count(Status::pass);
    fail += r.count(Status::fail);
    skipped += r.count(Status::skipped);
  }
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  doc["ok"] = fail == 0;
  if (!c.report_path.empty()) {
    std::ofstream out(c.report_path);
    if (!out) throw UsageError("cannot write " + c.report_path);
    out << pretty_json(doc);
  }
  if (c.json_out) {
    std::cout << pretty_json(doc);
  } else if (!c.quiet) {
    for (const auto& r : rs) print_summary(std::cout, r);
    std::cout << (fail == 0 ? "OK" : "FAILED") << " (" << pass << " pass, " << fail << " fail, " << skipped
              << " skipped)\n";
  }
  return fail == 0 ? kPass : kFail;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json_out, "Print the JSON report instead of the summary");
  sub->add_option("--report", c.report_path, "Also write the JSON report to this file");
  sub->add_flag("--serial", c.serial, "Use the serial kernels");
  sub->add_option("--threads", c.threads, "OpenMP thread count (0: runtime default)");
  sub->add_flag("-q,--quiet", c.quiet, "No summary output");
}

VerificationReport named(VerificationReport r, const std::string& name) {
  r = tagged(std::move(r), name);
  r.subject += " " + name;
  return r;
}

void write_instance(const std::string& path, const Instance& inst) {
  if (path.empty() || path == "-")
    std::cout << serialize(inst);
  else
    save_instance(path, inst);
}

// ---- verify

struct VerifyArgs {
  std::string kind, file;
  int cutoff_n = -1, cutoff_q = -1;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  Instance inst = load_instance(a.file);
  std::vector<VerificationReport> rs;
  AInfCheckOptions ao;
  ao.max_degree = a.cutoff_q;
  ao.exec = c.exec();
  CheckOptions so;
  so.max_level = a.cutoff_n;
  so.max_degree = a.cutoff_q;
  so.exec = c.exec();
  // cutoff-n bounds the relation index n; the relation for d(π_{n+1}) has arity n+3.
  if (a.kind == "ainf") {
    ao.max_arity = a.cutoff_n < 0 ? -1 : a.cutoff_n + 3;
    for (const auto& [name, x] : inst.algebras) rs.push_back(named(check_ainf(*x, ao), name));
  } else if (a.kind == "faces") {
    for (const auto& [name, x] : inst.modules) rs.push_back(named(check_faces(*x, so), name));
  } else if (a.kind == "morphism") {
    ao.max_arity = a.cutoff_n < 0 ? -1 : a.cutoff_n + 2;
    for (const auto& [name, x] : inst.morphisms) rs.push_back(named(check_ainf_morphism(*x, ao), name));
    for (const auto& [name, x] : inst.module_morphisms) rs.push_back(named(check_morphism(*x, so), name));
  } else if (a.kind == "homotopy") {
    ao.max_arity = a.cutoff_n < 0 ? -1 : a.cutoff_n + 2;
    for (const auto& [name, x] : inst.homotopies) rs.push_back(named(check_ainf_homotopy(*x, ao), name));
    for (const auto& [name, x] : inst.module_homotopies) rs.push_back(named(check_homotopy(*x, so), name));
  }
  if (rs.empty()) throw UsageError(a.file + ": no object of kind '" + a.kind + "'");
  json cfg{{"kind", a.kind}, {"file", a.file}, {"cutoff_n", a.cutoff_n}, {"cutoff_q", a.cutoff_q},
           {"ring", ring_name(inst.ring)}, {"exec", c.serial ? "serial" : "parallel"}};
  return emit(c, "verify " + a.kind, cfg, rs);
}

// ---- functor

struct FunctorArgs {
  std::string action;
  std::vector<std::string> files;
  std::string out;
  int levels = 4;
  int cutoff_q = -1;
  std::string mutation;
  bool no_validate = false;
};

int run_functor(const FunctorArgs& a, const Common& c) {
  Mutation mut = parse_mutation(a.mutation);
  if (a.action == "apply") {
    if (a.files.size() != 1) throw UsageError("functor apply takes one file");
    Instance inst = load_instance(a.files[0]);
    FunctorOptions fo;
    fo.exec = c.exec();
    fo.mutation = mut;
    fo.validate = !a.no_validate;
    try {
      Instance img = apply_functor(inst, a.levels, fo);
      img.metadata = {{"functor", {{"source", a.files[0]}, {"levels", a.levels}}}};
      if (mut != Mutation::none) img.metadata["functor"]["mutation"] = to_string(mut);
      write_instance(a.out, img);
    } catch (const FunctorRefusal& e) {
      std::cerr << "refused: " << e.what() << "\n";
      print_summary(std::cerr, e.report());
      return kFail;
    }
    return kPass;
  }
  std::vector<VerificationReport> rs;
  CampaignOptions co;
  co.max_level = a.levels;
  co.max_degree = a.cutoff_q;
  co.exec = c.exec();
  co.mutation = mut;
  for (const auto& f : a.files) rs.push_back(named(check_theorems(load_instance(f), co), f));
  json cfg{{"action", a.action}, {"files", a.files}, {"levels", a.levels}, {"cutoff_q", a.cutoff_q},
           {"mutation", to_string(mut)}, {"exec", c.serial ? "serial" : "parallel"}};
  return emit(c, "functor " + a.action, cfg, rs);
}

// ---- compose

GradedMap rebased(const GradedMap& m, const Space& src, const Space& tgt) {
  GradedMap r(src, tgt, m.degree());
  for (const auto& [q, b] : m.blocks()) r.set_block(q, b);
  return r;
}

bool same_algebra(const AInfAlgebra& a, const AInfAlgebra& b) {
  if (!a.base->same_structure(*b.base) || a.convention != b.convention || a.ops.size() != b.ops.size()) return false;
  for (std::size_t i = 0; i < a.ops.size(); ++i)
    if (a.ops[i].blocks() != b.ops[i].blocks()) return false;
  return true;
}

bool same_module(const InftySimplicialModule& a, const InftySimplicialModule& b) {
  if (a.levels.size() != b.levels.size()) return false;
  for (std::size_t i = 0; i < a.levels.size(); ++i)
    if (a.levels[i].arity != b.levels[i].arity || !a.levels[i].base->same_structure(*b.levels[i].base))
      return false;
  const auto& x = a.faces.entries();
  const auto& y = b.faces.entries();
  if (x.size() != y.size()) return false;
  for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
    if (i->first != j->first || i->second.blocks() != j->second.blocks()) return false;
  return true;
}

template <class Map>
std::pair<std::string, typename Map::mapped_type> pick(const Map& m, const std::string& name, const std::string& file,
                                                       const char* what) {
  if (!name.empty()) {
    auto it = m.find(name);
    if (it == m.end()) throw UsageError(file + ": no " + std::string(what) + " named '" + name + "'");
    return *it;
  }
  if (m.size() != 1)
    throw UsageError(file + ": " + std::to_string(m.size()) + " " + what + "s, choose one with --f-name/--g-name");
  return *m.begin();
}

struct ComposeArgs {
  std::string kind, f_file, g_file, out, f_name, g_name;
};

int run_compose(const ComposeArgs& a, const Common& c) {
  Instance fi = load_instance(a.f_file), gi = load_instance(a.g_file);
  if (!(fi.ring == gi.ring)) throw UsageError("the two files use different rings");
  Instance out;
  out.ring = fi.ring;
  if (a.kind == "ainf") {
    auto [fn, f] = pick(fi.morphisms, a.f_name, a.f_file, "morphism");
    auto [gn, g] = pick(gi.morphisms, a.g_name, a.g_file, "morphism");
    AInfMorphismPtr g2 = g;
    if (g->source != f->target) {
      if (!same_algebra(*g->source, *f->target))
        throw UsageError("source of " + gn + " differs from the target of " + fn);
      auto r = std::make_shared<AInfMorphism>();
      r->source = f->target;
      r->target = g->target;
      for (std::size_t n = 0; n < g->comps.size(); ++n)
        r->comps.push_back(rebased(g->comps[n], Space{f->target->base, static_cast<int>(n) + 1},
                                   g->comps[n].tgt()));
      r->validate();
      g2 = r;
    }
    auto gf = std::make_shared<AInfMorphism>(compose_ainf(*g2, *f, c.exec()));
    out.morphisms[fn] = f;
    out.morphisms[gn] = g2;
    out.morphisms[gn + "." + fn] = gf;
  } else {
    auto [fn, f] = pick(fi.module_morphisms, a.f_name, a.f_file, "module morphism");
    auto [gn, g] = pick(gi.module_morphisms, a.g_name, a.g_file, "module morphism");
    MorphismPtr g2 = g;
    if (g->source != f->target) {
      if (!same_module(*g->source, *f->target))
        throw UsageError("source of " + gn + " differs from the target of " + fn);
      auto r = std::make_shared<InftyMorphism>();
      r->source = f->target;
      r->target = g->target;
      for (const auto& [key, m] : g->components.entries())
        r->set_component(key.level, key.tuple, rebased(m, f->target->levels[key.level], m.tgt()));
      g2 = r;
    }
    auto gf = std::make_shared<InftyMorphism>(compose(*g2, *f, c.exec()));
    out.module_morphisms[fn] = f;
    out.module_morphisms[gn] = g2;
    out.module_morphisms[gn + "." + fn] = gf;
  }
  out.metadata = {{"composite", {{"f", a.f_file}, {"g", a.g_file}}}};
  write_instance(a.out, out);
  return kPass;
}

// ---- gen

struct GenArgs {
  std::string kind, dims = "1,1", name, out, ring;
  std::uint64_t seed = 1;
  int cutoff = -1;
  bool no_diversify = false;
};

int run_gen(const GenArgs& a) {
  Instance inst;
  inst.ring = env_ring(a.ring);
  int cutoff = a.cutoff >= 0 ? a.cutoff : env_int("INFSIMP_CUTOFF_N", 5);
  json meta{{"generator", a.kind}, {"seed", a.seed}, {"ring", ring_name(inst.ring)}, {"arity_cutoff", cutoff}};
  if (a.kind == "corpus") {
    CorpusSpec cs;
    cs.seed = a.seed;
    cs.ring = inst.ring;
    cs.dims = parse_dims(a.dims);
    cs.arity_cutoff = a.cutoff >= 0 ? a.cutoff : env_int("INFSIMP_CUTOFF_N", 7);
    inst = build_corpus(cs);
    write_instance(a.out, inst);
    return kPass;
  }
  if (a.kind == "dga") {
    std::string name = a.name.empty() ? "exterior" : a.name;
    inst.algebras[name] = std::make_shared<AInfAlgebra>(make_strict_dga(name, cutoff, inst.ring));
    meta["name"] = name;
    inst.metadata = meta;
    write_instance(a.out, inst);
    return kPass;
  }
  GeneratorSpec spec;
  spec.seed = a.seed;
  spec.ring = inst.ring;
  spec.dims = parse_dims(a.dims);
  spec.arity_cutoff = cutoff;
  spec.diversify = !a.no_diversify;
  spec.kind = parse_gen_kind(a.kind);
  meta["dims"] = spec.dims;
  if (spec.kind == GenKind::cone) {
    Rng rng(spec.seed);
    auto base = random_complex(rng, spec.dims, spec.ring, spec.range, spec.density, "C");
    Cone cone = cone_of_identity(base, "K");
    inst.complexes["C"] = base;
    inst.complexes["K"] = cone.complex;
    inst.maps["s"] = cone.contraction;
    inst.metadata = meta;
    write_instance(a.out, inst);
    return kPass;
  }
  auto algebra = [&](std::uint64_t seed) {
    GeneratorSpec s = spec;
    s.seed = seed;
    s.kind = GenKind::ainf_extend;
    return generate_cone_algebra(s);
  };
  ConeAlgebra A = algebra(spec.seed);
  inst.algebras["A"] = A.algebra;
  inst.maps["s.A"] = A.cone.contraction;
  auto flags = [](const Telemetry& t) {
    json j = json::array();
    for (bool b : t.nonzero) j.push_back(b);
    return j;
  };
  meta["telemetry"] = {{"A", flags(A.telemetry)}};
  if (spec.kind != GenKind::ainf_extend) {
    ConeAlgebra B = algebra(spec.seed + 1);
    inst.algebras["B"] = B.algebra;
    inst.maps["s.B"] = B.cone.contraction;
    meta["telemetry"]["B"] = flags(B.telemetry);
    GeneratorSpec ms = spec;
    ms.seed = spec.seed + 2;
    Telemetry tf;
    auto f = std::make_shared<AInfMorphism>(
        extend_morphism(ms, A.algebra, B.algebra, &B.cone.contraction, std::nullopt, &tf));
    inst.morphisms["f"] = f;
    meta["telemetry"]["f"] = flags(tf);
    if (spec.kind == GenKind::homotopy_extend) {
      ms.seed = spec.seed + 3;
      Telemetry tg, th;
      auto g = std::make_shared<AInfMorphism>(
          extend_morphism(ms, A.algebra, B.algebra, &B.cone.contraction, std::nullopt, &tg));
      ms.seed = spec.seed + 4;
      auto h = std::make_shared<AInfHomotopy>(extend_homotopy(ms, f, g, &B.cone.contraction, &th));
      inst.morphisms["g"] = g;
      inst.homotopies["h"] = h;
      meta["telemetry"]["g"] = flags(tg);
      meta["telemetry"]["h"] = flags(th);
    }
  }
  inst.metadata = meta;
  write_instance(a.out, inst);
  return kPass;
}

// ---- expand, signs

int run_expand(const std::string& rel, int k, bool with_lhs) {
  Relation r;
  try {
    r = parse_relation(rel);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (k < min_parameter(r)) throw UsageError("k must be at least " + std::to_string(min_parameter(r)));
  std::string rhs = expand_relation_symbolic(r, k).to_string(variable_names(r, k));
  if (with_lhs) std::cout << relation_lhs(r, k) << " = ";
  std::cout << rhs << "\n";
  return kPass;
}

int run_signs(const std::string& suite, int max_n, int max_q, const Common& c) {
  SignSuite s;
  try {
    s = parse_sign_suite(suite);
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }
  if (max_n < 0) throw UsageError("--max-n must be nonnegative");
  VerificationReport r;
  if (s == SignSuite::congruences)
    r = run_congruence_suite(max_n, c.exec());
  else if (s == SignSuite::exponents)
    r = run_exponent_suite(max_n, max_q, c.exec());
  else
    r = run_koszul_suite(max_n, max_q, c.exec());
  json cfg{{"suite", suite}, {"max_n", max_n}, {"max_q", max_q}, {"exec", c.serial ? "serial" : "parallel"}};
  return emit(c, "signs", cfg, {r});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for differential modules with infinity-simplicial faces and A-infinity structures"};
  app.set_version_flag("--version", std::string("infsimp ") + INFSIMP_VERSION);
  app.require_subcommand(1);
  Common common;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the structural relations of every object of one kind");
  verify->add_option("kind", va.kind)->required()->check(CLI::IsMember({"ainf", "faces", "morphism", "homotopy"}));
  verify->add_option("file", va.file)->required();
  verify->add_option("--cutoff-n", va.cutoff_n, "Largest relation index n (env INFSIMP_CUTOFF_N)")
      ->envname("INFSIMP_CUTOFF_N");
  verify->add_option("--cutoff-q", va.cutoff_q, "Largest internal source degree");
  add_common(verify, common);

  FunctorArgs fa;
  auto* functor = app.add_subcommand("functor", "Apply T or check its theorems");
  functor->add_option("action", fa.action)->required()->check(CLI::IsMember({"apply", "check-theorems"}));
  functor->add_option("files", fa.files)->required();
  functor->add_option("-o,--output", fa.out, "Output file for apply (default stdout)");
  functor->add_option("--levels", fa.levels, "Levels of the images (env INFSIMP_CUTOFF_N)")
      ->envname("INFSIMP_CUTOFF_N");
  functor->add_option("--cutoff-q", fa.cutoff_q, "Largest internal source degree");
  functor->add_option("--mutation", fa.mutation, "Deliberately wrong sign rule");
  functor->add_flag("--no-validate", fa.no_validate, "Apply T without checking the input relations");
  add_common(functor, common);

  ComposeArgs ca;
  auto* comp = app.add_subcommand("compose", "Compose g after f");
  comp->add_option("kind", ca.kind)->required()->check(CLI::IsMember({"ainf", "simplicial"}));
  comp->add_option("f", ca.f_file)->required();
  comp->add_option("g", ca.g_file)->required();
  comp->add_option("-o,--output", ca.out, "Output file (default stdout)");
  comp->add_option("--f-name", ca.f_name);
  comp->add_option("--g-name", ca.g_name);
  add_common(comp, common);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", ga.kind)
      ->required()
      ->check(CLI::IsMember({"dga", "cone", "ainf", "morphism", "homotopy", "corpus"}));
  gen->add_option("--seed", ga.seed);
  gen->add_option("--dims", ga.dims, "Comma-separated dimensions of the complex being coned");
  gen->add_option("--name", ga.name, "Built-in DGA for kind dga");
  gen->add_option("--cutoff-n", ga.cutoff, "Arity cutoff of stored operations (env INFSIMP_CUTOFF_N)");
  gen->add_option("--ring", ga.ring, "Q or Z/p (env INFSIMP_RING)");
  gen->add_flag("--no-diversify", ga.no_diversify, "Take the contraction solution without a random boundary");
  gen->add_option("-o,--output", ga.out, "Output file (default stdout)");

  std::string rel;
  int k = 0;
  bool with_lhs = false;
  auto* expand = app.add_subcommand("expand", "Print the symbolic right-hand side of a relation");
  expand->add_option("--relation", rel)->required();
  expand->add_option("--k", k)->required();
  expand->add_flag("--lhs", with_lhs, "Print 'lhs = rhs'");

  std::string suite;
  int max_n = 6, max_q = 6;
  auto* signs = app.add_subcommand("signs", "Run a sign suite");
  signs->add_option("--suite", suite)->required();
  signs->add_option("--max-n", max_n);
  signs->add_option("--max-q", max_q);
  add_common(signs, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  try {
    if (common.threads > 0) omp_set_num_threads(common.threads);
    if (*verify) return run_verify(va, common);
    if (*functor) return run_functor(fa, common);
    if (*comp) return run_compose(ca, common);
    if (*gen) return run_gen(ga);
    if (*expand) return run_expand(rel, k, with_lhs);
    if (*signs) return run_signs(suite, max_n, max_q, common);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const FunctorRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kFail;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kInput;
  } catch (const GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
