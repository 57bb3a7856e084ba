#pragma once

#include <filesystem>
#include <json.hpp>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "infsimp/ainf.hpp"
#include "infsimp/errors.hpp"
#include "infsimp/simplicial.hpp"

namespace infsimp {

using AInfHomotopyPtr = std::shared_ptr<const AInfHomotopy>;
using HomotopyPtr = std::shared_ptr<const InftyHomotopy>;

// A named collection of objects sharing one ring. Objects referenced by
// others (the endpoints of a morphism, the complexes under a module) are
// written even if not listed, under generated names.
struct Instance {
  Ring ring;
  nlohmann::json metadata = nlohmann::json::object();
  std::map<std::string, ComplexPtr> complexes;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, AInfMorphismPtr> morphisms;
  std::map<std::string, AInfHomotopyPtr> homotopies;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, MorphismPtr> module_morphisms;
  std::map<std::string, HomotopyPtr> module_homotopies;
  std::map<std::string, GradedMap> maps;  // standalone, e.g. a contraction

  bool empty() const;
};

// Sorted keys, scalar arrays on one line, trailing newline.
std::string serialize(const Instance& inst);
// Throws InputError carrying a JSON-pointer path to the offending key.
Instance parse_instance(std::string_view text);

Instance load_instance(const std::filesystem::path& p);
void save_instance(const std::filesystem::path& p, const Instance& inst);

// The same layout for any JSON value (used for reports too).
std::string pretty_json(const nlohmann::json& j);

}  // namespace infsimp
