#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "infsimp/graded_map.hpp"

namespace infsimp {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Residual {
  int source_degree = 0;
  std::uint32_t row = 0, col = 0;
  std::string value;
};

struct RelationOutcome {
  std::string relation;
  nlohmann::json params;
  Status status = Status::pass;
  std::optional<Residual> residual;
  std::string note;
};

struct VerificationReport {
  std::string subject;
  std::vector<RelationOutcome> entries;
  std::size_t absent_components = 0;  // relation terms that referenced a missing (zero) component

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  void append(const VerificationReport& o);
  nlohmann::json to_json() const;
};

// pass iff the residual vanishes on source degrees <= max_degree (< 0: all).
RelationOutcome outcome_of(std::string relation, nlohmann::json params, const GradedMap& residual,
                           int max_degree = -1);

}  // namespace infsimp
