#include "infsimp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace infsimp {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "infsimp-instance";
constexpr int kVersion = 1;

// ---------------------------------------------------------------- printing

bool is_leaf(const json& j) { return !j.is_object() && !j.is_array(); }

void emit(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << "  " << json(k).dump() << ": ";
      emit(os, v, indent + 2);
    }
    os << "\n" << pad << "}";
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (std::all_of(j.begin(), j.end(), is_leaf)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "  ";
      emit(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
    return;
  }
  os << j.dump();
}

// ---------------------------------------------------------------- writing

json matrix_entries(const SparseMatrix& m) {
  // row-major so files read like the matrix
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::string>> e;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& x : m.column(c)) e.emplace_back(x.row, static_cast<std::uint32_t>(c), x.value.to_string());
  std::sort(e.begin(), e.end());
  json out = json::array();
  for (const auto& [r, c, v] : e) out.push_back(json::array({r, c, v}));
  return out;
}

json blocks_json(const std::map<int, SparseMatrix>& blocks) {
  json out = json::array();
  for (const auto& [q, m] : blocks)
    if (!m.is_zero()) out.push_back({{"q", q}, {"entries", matrix_entries(m)}});
  return out;
}

json map_json(const GradedMap& m) { return blocks_json(m.blocks()); }

template <class Ptr>
class Registry {
 public:
  bool has(const Ptr& p) const { return names_.count(p.get()) > 0; }
  const std::string& name(const Ptr& p) const {
    auto it = names_.find(p.get());
    if (it == names_.end()) throw StructuralError("unregistered object");
    return it->second;
  }
  void add(const std::string& name, const Ptr& p) {
    if (!p) throw StructuralError("null object '" + name + "'");
    if (has(p)) return;
    if (by_name_.count(name)) throw StructuralError("duplicate name '" + name + "'");
    names_[p.get()] = name;
    by_name_[name] = p;
  }
  // Preferred name if free, else with a numeric suffix.
  void add_generated(std::string preferred, const Ptr& p) {
    if (has(p)) return;
    std::string n = preferred;
    for (int i = 2; by_name_.count(n); ++i) n = preferred + "~" + std::to_string(i);
    add(n, p);
  }
  const std::map<std::string, Ptr>& items() const { return by_name_; }

 private:
  std::map<const void*, std::string> names_;
  std::map<std::string, Ptr> by_name_;
};

json components_json(const ComponentFamily& fam) {
  json out = json::array();
  for (const auto& [key, m] : fam.entries()) {
    if (m.is_zero()) continue;
    out.push_back({{"level", key.level}, {"tuple", key.tuple}, {"blocks", map_json(m)}});
  }
  return out;
}

// ---------------------------------------------------------------- reading

std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~')
      k += "~0";
    else if (c == '/')
      k += "~1";
    else
      k += c;
  }
  return path + "/" + k;
}
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path.empty() ? "/" : path, what); }

const json& field(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing");
  return *it;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(child(path, k), "unknown key");
  }
}

int as_int(const json& j, const std::string& path, int lo = std::numeric_limits<int>::min()) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > std::numeric_limits<int>::max()) fail(path, "integer out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

SparseMatrix parse_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols,
                          const Ring& ring) {
  SparseMatrix m(rows, cols);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(path, i);
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 3) fail(p, "expected [row, col, \"value\"]");
    const int r = as_int(e[0], child(p, 0), 0);
    const int c = as_int(e[1], child(p, 1), 0);
    if (static_cast<std::size_t>(r) >= rows)
      fail(child(p, 0), "row " + std::to_string(r) + " out of range (" + std::to_string(rows) + " rows)");
    if (static_cast<std::size_t>(c) >= cols)
      fail(child(p, 1), "column " + std::to_string(c) + " out of range (" + std::to_string(cols) + " columns)");
    Scalar v;
    try {
      v = ring.parse_scalar(as_string(e[2], child(p, 2)));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& ex) {
      fail(child(p, 2), ex.what());
    }
    if (v.is_zero()) fail(child(p, 2), "explicit zero");
    if (!seen.insert({r, c}).second) fail(p, "duplicate entry");
    m.add(r, c, v);
  }
  return m;
}

GradedMap parse_map(const json& j, const std::string& path, const Space& src, const Space& tgt, int degree,
                    const Ring& ring) {
  GradedMap out(src, tgt, degree);
  std::set<int> seen;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(path, i);
    only_keys(arr[i], p, {"q", "entries"});
    const int q = as_int(field(arr[i], p, "q"), child(p, "q"));
    if (!seen.insert(q).second) fail(child(p, "q"), "duplicate source degree");
    const int rows = tgt.dim(q + degree), cols = src.dim(q);
    if (cols == 0 || rows == 0)
      fail(child(p, "q"), "no block at source degree " + std::to_string(q) + " (" + std::to_string(rows) + "x" +
                              std::to_string(cols) + ")");
    out.set_block(q, parse_matrix(field(arr[i], p, "entries"), child(p, "entries"), rows, cols, ring));
  }
  return out;
}

template <class T>
std::shared_ptr<const T> lookup(const std::map<std::string, std::shared_ptr<const T>>& pool, const json& j,
                                const std::string& path, const char* what) {
  const std::string name = as_string(j, path);
  auto it = pool.find(name);
  if (it == pool.end()) fail(path, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

// Runs a library constructor/validator, rethrowing its complaint at `path`.
template <class F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const StructuralError& e) {
    fail(path, e.what());
  }
}

IndexTuple parse_tuple(const json& j, const std::string& path) {
  IndexTuple t;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) t.push_back(as_int(arr[i], child(path, i), 0));
  if (!strictly_increasing(t)) fail(path, "tuple is not strictly increasing");
  return t;
}

struct Cell {
  int level;
  IndexTuple tuple;
  const json* blocks;
  std::string path;
};

std::vector<Cell> parse_cells(const json& j, const std::string& path) {
  std::vector<Cell> out;
  const auto& arr = as_array(j, path);
  std::set<std::pair<int, IndexTuple>> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(path, i);
    only_keys(arr[i], p, {"level", "tuple", "blocks"});
    Cell c{as_int(field(arr[i], p, "level"), child(p, "level"), 0), parse_tuple(field(arr[i], p, "tuple"), child(p, "tuple")),
           &field(arr[i], p, "blocks"), p};
    if (!seen.insert({c.level, c.tuple}).second) fail(p, "duplicate component");
    out.push_back(std::move(c));
  }
  return out;
}

void check_level(const Cell& c, int top, int kmin) {
  const int k = static_cast<int>(c.tuple.size());
  if (c.level > top) fail(child(c.path, "level"), "level beyond the module's truncation " + std::to_string(top));
  if (k < kmin || k > c.level) fail(child(c.path, "tuple"), "tuple length out of range at this level");
  if (!c.tuple.empty() && c.tuple.back() > c.level) fail(child(c.path, "tuple"), "index exceeds the level");
}

}  // namespace

bool Instance::empty() const {
  return complexes.empty() && algebras.empty() && morphisms.empty() && homotopies.empty() && modules.empty() &&
         module_morphisms.empty() && module_homotopies.empty() && maps.empty();
}

std::string pretty_json(const json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

std::string serialize(const Instance& inst) {
  Registry<ComplexPtr> cx;
  Registry<AlgebraPtr> al;
  Registry<AInfMorphismPtr> mo;
  Registry<AInfHomotopyPtr> ho;
  Registry<ModulePtr> md;
  Registry<MorphismPtr> mm;
  Registry<HomotopyPtr> mh;
  for (const auto& [n, p] : inst.complexes) cx.add(n, p);
  for (const auto& [n, p] : inst.algebras) al.add(n, p);
  for (const auto& [n, p] : inst.morphisms) mo.add(n, p);
  for (const auto& [n, p] : inst.homotopies) ho.add(n, p);
  for (const auto& [n, p] : inst.modules) md.add(n, p);
  for (const auto& [n, p] : inst.module_morphisms) mm.add(n, p);
  for (const auto& [n, p] : inst.module_homotopies) mh.add(n, p);

  // referenced objects, top-down so every owner is named before its parts
  for (const auto& [n, h] : ho.items()) {
    mo.add_generated(n + ".f", h->f);
    mo.add_generated(n + ".g", h->g);
  }
  for (const auto& [n, f] : mo.items()) {
    al.add_generated(n + ".source", f->source);
    al.add_generated(n + ".target", f->target);
  }
  for (const auto& [n, a] : al.items()) {
    if (a->convention != Convention::standard)
      throw StructuralError("algebra '" + n + "': only the standard convention is serialized");
    cx.add_generated(a->base->name().empty() ? n + ".base" : a->base->name(), a->base);
  }
  for (const auto& [n, h] : mh.items()) {
    mm.add_generated(n + ".f", h->f);
    mm.add_generated(n + ".g", h->g);
  }
  for (const auto& [n, f] : mm.items()) {
    md.add_generated(n + ".source", f->source);
    md.add_generated(n + ".target", f->target);
  }
  for (const auto& [n, m] : inst.maps) {
    cx.add_generated(m.src().base->name().empty() ? n + ".source" : m.src().base->name(), m.src().base);
    cx.add_generated(m.tgt().base->name().empty() ? n + ".target" : m.tgt().base->name(), m.tgt().base);
  }
  for (const auto& [n, x] : md.items())
    for (std::size_t l = 0; l < x->levels.size(); ++l) {
      const auto& b = x->levels[l].base;
      cx.add_generated(b->name().empty() ? n + ".level" + std::to_string(l) : b->name(), b);
    }

  json out = json::object();
  out["format"] = kFormat;
  out["version"] = kVersion;
  out["ring"] = inst.ring.to_string();
  out["metadata"] = inst.metadata;
  json complexes = json::object();
  for (const auto& [n, c] : cx.items()) {
    json d = json::array();
    for (const auto& [q, m] : c->differential())
      if (!m.is_zero()) d.push_back({{"q", q}, {"entries", matrix_entries(m)}});
    complexes[n] = {{"dims", c->dims()}, {"d", d}};
  }
  out["complexes"] = complexes;
  if (!al.items().empty()) {
    json j = json::object();
    for (const auto& [n, a] : al.items()) {
      json ops = json::array();
      for (const auto& op : a->ops) ops.push_back(map_json(op));
      j[n] = {{"complex", cx.name(a->base)}, {"ops", ops}};
    }
    out["algebras"] = j;
  }
  if (!mo.items().empty()) {
    json j = json::object();
    for (const auto& [n, f] : mo.items()) {
      json comps = json::array();
      for (const auto& c : f->comps) comps.push_back(map_json(c));
      j[n] = {{"source", al.name(f->source)}, {"target", al.name(f->target)}, {"comps", comps}};
    }
    out["morphisms"] = j;
  }
  if (!ho.items().empty()) {
    json j = json::object();
    for (const auto& [n, h] : ho.items()) {
      json comps = json::array();
      for (const auto& c : h->comps) comps.push_back(map_json(c));
      j[n] = {{"f", mo.name(h->f)}, {"g", mo.name(h->g)}, {"comps", comps}};
    }
    out["homotopies"] = j;
  }
  if (!md.items().empty()) {
    json j = json::object();
    for (const auto& [n, x] : md.items()) {
      json levels = json::array();
      for (const auto& s : x->levels) levels.push_back({{"complex", cx.name(s.base)}, {"arity", s.arity}});
      j[n] = {{"levels", levels}, {"faces", components_json(x->faces)}};
    }
    out["modules"] = j;
  }
  if (!mm.items().empty()) {
    json j = json::object();
    for (const auto& [n, f] : mm.items())
      j[n] = {{"source", md.name(f->source)}, {"target", md.name(f->target)}, {"components", components_json(f->components)}};
    out["module_morphisms"] = j;
  }
  if (!mh.items().empty()) {
    json j = json::object();
    for (const auto& [n, h] : mh.items())
      j[n] = {{"f", mm.name(h->f)}, {"g", mm.name(h->g)}, {"components", components_json(h->components)}};
    out["module_homotopies"] = j;
  }
  if (!inst.maps.empty()) {
    json j = json::object();
    for (const auto& [n, m] : inst.maps)
      j[n] = {{"source", {{"complex", cx.name(m.src().base)}, {"arity", m.src().arity}}},
              {"target", {{"complex", cx.name(m.tgt().base)}, {"arity", m.tgt().arity}}},
              {"degree", m.degree()},
              {"blocks", map_json(m)}};
    out["maps"] = j;
  }
  return pretty_json(out);
}

Instance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, "", {"format", "version", "ring", "metadata", "complexes", "algebras", "morphisms", "homotopies",
                       "modules", "module_morphisms", "module_homotopies", "maps"});
  if (as_string(field(root, "", "format"), "/format") != kFormat) fail("/format", "expected \"" + std::string(kFormat) + "\"");
  if (as_int(field(root, "", "version"), "/version") != kVersion) fail("/version", "unsupported version");
  Instance inst;
  inst.ring = at("/ring", [&] {
    try {
      return Ring::parse(as_string(field(root, "", "ring"), "/ring"));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw StructuralError(e.what());
    }
  });
  if (root.contains("metadata")) {
    if (!root["metadata"].is_object()) fail("/metadata", "expected an object");
    inst.metadata = root["metadata"];
  }
  auto section = [&](const char* key) -> const json& {
    static const json empty = json::object();
    if (!root.contains(key)) return empty;
    if (!root[key].is_object()) fail(std::string("/") + key, "expected an object");
    return root[key];
  };

  for (const auto& [n, c] : section("complexes").items()) {
    const std::string p = child("/complexes", n);
    only_keys(c, p, {"dims", "d"});
    std::vector<int> dims;
    const auto& dj = as_array(field(c, p, "dims"), child(p, "dims"));
    for (std::size_t i = 0; i < dj.size(); ++i) dims.push_back(as_int(dj[i], child(child(p, "dims"), i), 0));
    std::map<int, SparseMatrix> d;
    const std::string dp = child(p, "d");
    const auto& darr = as_array(field(c, p, "d"), dp);
    for (std::size_t i = 0; i < darr.size(); ++i) {
      const std::string bp = child(dp, i);
      only_keys(darr[i], bp, {"q", "entries"});
      const int q = as_int(field(darr[i], bp, "q"), child(bp, "q"));
      if (q < 1 || q >= static_cast<int>(dims.size())) fail(child(bp, "q"), "no differential at degree " + std::to_string(q));
      if (d.count(q)) fail(child(bp, "q"), "duplicate source degree");
      d[q] = parse_matrix(field(darr[i], bp, "entries"), child(bp, "entries"), dims[q - 1], dims[q], inst.ring);
    }
    for (const auto& [q, m] : d)
      if (auto it = d.find(q - 1); it != d.end() && !multiply(it->second, m, Exec::serial).is_zero())
        fail(dp, "d∘d is nonzero at degree " + std::to_string(q));
    inst.complexes[n] = at(p, [&] { return Complex::create(dims, d, n); });
  }

  auto space = [&](const json& j, const std::string& p) {
    only_keys(j, p, {"complex", "arity"});
    return Space{lookup(inst.complexes, field(j, p, "complex"), child(p, "complex"), "complex"),
                 as_int(field(j, p, "arity"), child(p, "arity"), 0)};
  };
  for (const auto& [n, m] : section("maps").items()) {
    const std::string p = child("/maps", n);
    only_keys(m, p, {"source", "target", "degree", "blocks"});
    const Space src = space(field(m, p, "source"), child(p, "source"));
    const Space tgt = space(field(m, p, "target"), child(p, "target"));
    inst.maps.emplace(n, parse_map(field(m, p, "blocks"), child(p, "blocks"), src, tgt,
                                   as_int(field(m, p, "degree"), child(p, "degree")), inst.ring));
  }

  for (const auto& [n, a] : section("algebras").items()) {
    const std::string p = child("/algebras", n);
    only_keys(a, p, {"complex", "ops"});
    auto alg = std::make_shared<AInfAlgebra>();
    alg->base = lookup(inst.complexes, field(a, p, "complex"), child(p, "complex"), "complex");
    const std::string op = child(p, "ops");
    const auto& ops = as_array(field(a, p, "ops"), op);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const int k = static_cast<int>(i);
      alg->ops.push_back(parse_map(ops[i], child(op, i), Space{alg->base, k + 2}, Space{alg->base, 1}, k, inst.ring));
    }
    at(p, [&] { alg->validate(); });
    inst.algebras[n] = alg;
  }

  for (const auto& [n, f] : section("morphisms").items()) {
    const std::string p = child("/morphisms", n);
    only_keys(f, p, {"source", "target", "comps"});
    auto m = std::make_shared<AInfMorphism>();
    m->source = lookup(inst.algebras, field(f, p, "source"), child(p, "source"), "algebra");
    m->target = lookup(inst.algebras, field(f, p, "target"), child(p, "target"), "algebra");
    const std::string cp = child(p, "comps");
    const auto& comps = as_array(field(f, p, "comps"), cp);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int k = static_cast<int>(i);
      m->comps.push_back(
          parse_map(comps[i], child(cp, i), Space{m->source->base, k + 1}, Space{m->target->base, 1}, k, inst.ring));
    }
    at(p, [&] { m->validate(); });
    inst.morphisms[n] = m;
  }

  for (const auto& [n, h] : section("homotopies").items()) {
    const std::string p = child("/homotopies", n);
    only_keys(h, p, {"f", "g", "comps"});
    auto hp = std::make_shared<AInfHomotopy>();
    hp->f = lookup(inst.morphisms, field(h, p, "f"), child(p, "f"), "morphism");
    hp->g = lookup(inst.morphisms, field(h, p, "g"), child(p, "g"), "morphism");
    if (hp->f->source != hp->g->source || hp->f->target != hp->g->target) fail(p, "f and g have different endpoints");
    const std::string cp = child(p, "comps");
    const auto& comps = as_array(field(h, p, "comps"), cp);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int k = static_cast<int>(i);
      hp->comps.push_back(parse_map(comps[i], child(cp, i), Space{hp->f->source->base, k + 1},
                                    Space{hp->f->target->base, 1}, k + 1, inst.ring));
    }
    at(p, [&] { hp->validate(); });
    inst.homotopies[n] = hp;
  }

  for (const auto& [n, x] : section("modules").items()) {
    const std::string p = child("/modules", n);
    only_keys(x, p, {"levels", "faces"});
    auto mod = std::make_shared<InftySimplicialModule>();
    const std::string lp = child(p, "levels");
    const auto& levels = as_array(field(x, p, "levels"), lp);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const std::string ip = child(lp, i);
      mod->levels.push_back(space(levels[i], ip));
    }
    for (const auto& c : parse_cells(field(x, p, "faces"), child(p, "faces"))) {
      check_level(c, mod->truncation(), 1);
      const int k = static_cast<int>(c.tuple.size());
      auto m = parse_map(*c.blocks, child(c.path, "blocks"), mod->levels[c.level], mod->levels[c.level - k], k - 1, inst.ring);
      at(c.path, [&] { mod->set_face(c.level, c.tuple, std::move(m)); });
    }
    inst.modules[n] = mod;
  }

  for (const auto& [n, f] : section("module_morphisms").items()) {
    const std::string p = child("/module_morphisms", n);
    only_keys(f, p, {"source", "target", "components"});
    auto m = std::make_shared<InftyMorphism>();
    m->source = lookup(inst.modules, field(f, p, "source"), child(p, "source"), "module");
    m->target = lookup(inst.modules, field(f, p, "target"), child(p, "target"), "module");
    if (m->source->truncation() != m->target->truncation()) fail(p, "source and target truncations differ");
    for (const auto& c : parse_cells(field(f, p, "components"), child(p, "components"))) {
      check_level(c, m->source->truncation(), 0);
      const int k = static_cast<int>(c.tuple.size());
      auto g = parse_map(*c.blocks, child(c.path, "blocks"), m->source->levels[c.level],
                         m->target->levels[c.level - k], k, inst.ring);
      at(c.path, [&] { m->set_component(c.level, c.tuple, std::move(g)); });
    }
    inst.module_morphisms[n] = m;
  }

  for (const auto& [n, h] : section("module_homotopies").items()) {
    const std::string p = child("/module_homotopies", n);
    only_keys(h, p, {"f", "g", "components"});
    auto hp = std::make_shared<InftyHomotopy>();
    hp->f = lookup(inst.module_morphisms, field(h, p, "f"), child(p, "f"), "module morphism");
    hp->g = lookup(inst.module_morphisms, field(h, p, "g"), child(p, "g"), "module morphism");
    if (hp->f->source != hp->g->source || hp->f->target != hp->g->target) fail(p, "f and g have different endpoints");
    for (const auto& c : parse_cells(field(h, p, "components"), child(p, "components"))) {
      check_level(c, hp->f->source->truncation(), 0);
      const int k = static_cast<int>(c.tuple.size());
      auto g = parse_map(*c.blocks, child(c.path, "blocks"), hp->f->source->levels[c.level],
                         hp->f->target->levels[c.level - k], k + 1, inst.ring);
      at(c.path, [&] { hp->set_component(c.level, c.tuple, std::move(g)); });
    }
    inst.module_homotopies[n] = hp;
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(p.string(), "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void save_instance(const std::filesystem::path& p, const Instance& inst) {
  const std::string text = serialize(inst);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError(p.string(), "cannot write");
  out << text;
}

}  // namespace infsimp
