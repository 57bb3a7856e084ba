// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "infsimp/campaign.hpp"
#include "infsimp/signs.hpp"
#include "infsimp/symbolic.hpp"

using namespace infsimp;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string counts(const VerificationReport& r) {
  std::ostringstream s;
  s << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::skipped)
    << " skipped";
  return s.str();
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& e : r.entries)
    if (e.status == Status::fail) return "; first failure " + e.relation + " " + e.params.dump();
  return {};
}

Outcome from_report(const VerificationReport& r) {
  return {r.ok() && r.count(Status::pass) > 0, counts(r) + first_failure(r)};
}

const Instance& corpus() {
  static const Instance inst = build_corpus(CorpusSpec{});
  return inst;
}

bool nonzero(const AInfAlgebra& a, int n) {
  return n < static_cast<int>(a.ops.size()) && !a.ops[n].is_zero();
}

Outcome golden() {
  std::ifstream in(std::string(INFSIMP_DATA_DIR) + "/golden_expansions.json");
  if (!in) return {false, "golden file missing"};
  auto data = nlohmann::json::parse(in);
  int good = 0, bad = 0;
  std::string first;
  for (const auto& c : data["cases"]) {
    const Relation r = parse_relation(c["relation"]);
    const int k = c["k"];
    auto produced = expand_relation_symbolic(r, k).signed_terms(variable_names(r, k));
    auto expected = c.value("expected", c["display"]).get<std::vector<std::string>>();
    std::sort(produced.begin(), produced.end());
    std::sort(expected.begin(), expected.end());
    if (produced == expected && relation_lhs(r, k) == c["lhs"].get<std::string>()) {
      ++good;
    } else {
      ++bad;
      if (first.empty()) first = "; first mismatch " + c["relation"].get<std::string>() + " k=" + std::to_string(k);
    }
  }
  return {bad == 0 && good > 0, std::to_string(good) + " expansions match, " + std::to_string(bad) + " differ" + first};
}

Outcome koszul() {
  auto a = run_exponent_suite(6);
  auto b = run_koszul_suite(6);
  a.append(b);
  return from_report(a);
}

Outcome structures() {
  const Instance& inst = corpus();
  int strict = 0, extended = 0, pi1 = 0, pi2 = 0;
  for (const auto& [name, a] : inst.algebras) {
    bool higher = false;
    for (std::size_t n = 1; n < a->ops.size(); ++n) higher = higher || !a->ops[n].is_zero();
    (higher ? extended : strict) += 1;
    pi1 += nonzero(*a, 1);
    pi2 += nonzero(*a, 2);
  }
  CampaignOptions opt;
  opt.max_degree = 6;
  auto r = check_structures(inst, opt);
  std::ostringstream s;
  s << strict << " strict, " << extended << " extended (" << pi1 << " with pi_1 != 0, " << pi2
    << " with pi_2 != 0), " << inst.morphisms.size() << " morphisms, " << inst.homotopies.size()
    << " homotopies; " << counts(r) << first_failure(r);
  const bool mix = strict >= 3 && extended >= 5 && pi1 > 0 && pi2 > 0 && inst.morphisms.size() >= 5 &&
                   inst.homotopies.size() >= 3;
  return {mix && r.ok() && r.count(Status::pass) > 0, s.str()};
}

Outcome theorems() {
  CampaignOptions opt;
  opt.max_level = 6;
  return from_report(check_theorems(corpus(), opt));
}

// A copy of E1 with one entry of π_1 changed fails its relations both ways.
Instance perturbed() {
  const Instance& c = corpus();
  Instance p;
  p.ring = c.ring;
  auto a = std::make_shared<AInfAlgebra>(*c.algebras.at("E1"));
  GradedMap& pi1 = a->ops.at(1);
  for (const auto& [q, block] : pi1.blocks()) {
    if (block.rows() == 0 || block.cols() == 0) continue;
    SparseMatrix m = block;
    m.add(0, 0, Scalar(1));
    pi1.set_block(q, m);
    break;
  }
  p.algebras["E1~"] = a;
  return p;
}

Outcome suspension() {
  auto r = check_suspension(corpus(), 3);
  auto neg = check_suspension(perturbed(), 3);
  std::size_t both_fail = 0;
  for (const auto& e : neg.entries)
    if (e.params.value("base", "") == "fail" && e.params.value("suspended", "") == "fail") ++both_fail;
  const bool control = neg.ok() && both_fail > 0;
  return {r.ok() && r.count(Status::pass) > 0 && control,
          counts(r) + first_failure(r) + "; perturbed control fails in " + std::to_string(both_fail) +
              " relations on both sides" + (control ? "" : " (control broken)")};
}

Outcome mutations() {
  int caught = 0, missed = 0;
  std::string missed_names;
  for (Mutation m : all_mutations()) {
    CampaignOptions opt;
    opt.max_level = 4;
    opt.mutation = m;
    if (check_theorems(corpus(), opt).ok()) {
      ++missed;
      missed_names += " " + to_string(m);
    } else {
      ++caught;
    }
  }
  return {missed == 0 && caught > 0, std::to_string(caught) + " mutations detected" +
                                         (missed ? ", undetected:" + missed_names : std::string())};
}

Outcome determinism() {
  GeneratorSpec spec;
  spec.seed = 17;
  spec.dims = {1, 2};
  auto one = [&] {
    Instance inst;
    auto a = generate_cone_algebra(spec);
    auto s = spec;
    s.seed = 18;
    auto b = generate_cone_algebra(s);
    s.seed = 19;
    inst.algebras["A"] = a.algebra;
    inst.algebras["B"] = b.algebra;
    inst.morphisms["f"] =
        std::make_shared<AInfMorphism>(extend_morphism(s, a.algebra, b.algebra, &b.cone.contraction));
    return serialize(inst);
  };
  const std::string x = one(), y = one();
  const std::string c1 = serialize(build_corpus(CorpusSpec{})), c2 = serialize(corpus());
  std::ifstream in(std::string(INFSIMP_DATA_DIR) + "/corpus.json", std::ios::binary);
  std::stringstream stored;
  if (in) stored << in.rdbuf();
  const bool same_file = static_cast<bool>(in) && stored.str() == c1;
  return {x == y && c1 == c2 && same_file,
          std::to_string(x.size()) + " and " + std::to_string(c1.size()) + " bytes reproduced" +
              (same_file ? ", stored corpus identical" : ", stored corpus differs")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden symbolic expansions", 1, golden},
      {2, "sign congruences, n <= 8", 30, [] { return from_report(run_congruence_suite(8)); }},
      {3, "exponent reductions and Koszul cross-derivation, n <= 6", 60, koszul},
      {4, "corpus structure relations (exact zero residuals)", 600, structures},
      {5, "T(A), T(f), functoriality, T(1) = 1, T(h), transported equivalences, levels <= 6", 600, theorems},
      {6, "suspension equivalence, n <= 3, with perturbed control", 600, suspension},
      {7, "every sign mutation is detected", 600, mutations},
      {8, "byte-identical generation", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= c.budget_s;
    const bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.2f s%s): %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), s,
                in_time ? "" : ", over budget", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
