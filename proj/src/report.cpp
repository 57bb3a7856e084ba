#include "infsimp/report.hpp"

namespace infsimp {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.status == s;
  return c;
}

void VerificationReport::append(const VerificationReport& o) {
  entries.insert(entries.end(), o.entries.begin(), o.entries.end());
  absent_components += o.absent_components;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["subject"] = subject;
  out["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"relation", e.relation}, {"params", e.params}, {"status", to_string(e.status)}};
    if (e.residual)
      j["residual"] = {{"source_degree", e.residual->source_degree},
                       {"row", e.residual->row},
                       {"col", e.residual->col},
                       {"value", e.residual->value}};
    if (!e.note.empty()) j["note"] = e.note;
    out["entries"].push_back(std::move(j));
  }
  out["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"skipped", count(Status::skipped)},
                    {"absent_components", absent_components}};
  return out;
}

RelationOutcome outcome_of(std::string relation, nlohmann::json params, const GradedMap& residual, int max_degree) {
  RelationOutcome o{std::move(relation), std::move(params), Status::pass, std::nullopt, {}};
  for (const auto& [q, b] : residual.blocks()) {
    if (max_degree >= 0 && q > max_degree) break;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto col = b.column(j);
      if (col.empty()) continue;
      o.status = Status::fail;
      o.residual = Residual{q, col.front().row, static_cast<std::uint32_t>(j), col.front().value.to_string()};
      return o;
    }
  }
  return o;
}

}  // namespace infsimp
