#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pgg/decide.hpp"
#include "pgg/embedding.hpp"
#include "pgg/oracle.hpp"

namespace pgg {

struct NamedGraph {
  std::string id;
  PlanarEmbedding graph;
};

struct AgreementRow {
  std::string graph_id;
  std::size_t vertices = 0;
  std::size_t faces = 0;
  Verdict::Tag verdict = Verdict::Tag::CriterionUnverified;
  bool criterion_applies = false;
  bool claims_hamiltonian = false;
  std::optional<bool> oracle_found;  // nullopt on timeout
  bool oracle_timed_out = false;
  std::uint64_t nodes_explored = 0;
  std::optional<bool> agree;  // nullopt = inconclusive
  bool candidate = false;     // disagreement worth keeping
  bool hard_violation = false;
  std::string note;
};

struct AgreementTotals {
  std::size_t graphs = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t inconclusive = 0;
  std::size_t oracle_timeouts = 0;
  std::size_t hard_violations = 0;
};

struct AgreementReport {
  std::vector<AgreementRow> rows;
  AgreementTotals totals;
  std::vector<std::string> candidates;  // graph ids, input order
};

struct CompareOptions {
  DecideOptions decide;
  std::uint64_t budget = kDefaultOracleBudget;
  std::optional<std::filesystem::path> save_candidates;  // one <graph id>.pgg per candidate
};

AgreementRow compare_one(const NamedGraph& g, const CompareOptions& opts);

/// Rows in input order. A row is inconclusive when the oracle timed out or
/// the verdict makes no claim (unverified with the claw condition unmet).
AgreementReport compare(const std::vector<NamedGraph>& graphs, const CompareOptions& opts);

}  // namespace pgg
