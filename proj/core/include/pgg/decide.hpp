#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgg/edge_set.hpp"
#include "pgg/faces.hpp"
#include "pgg/grinberg.hpp"
#include "pgg/holes.hpp"
#include "pgg/structure.hpp"

namespace pgg {

struct DecideOptions {
  std::size_t limit = kDefaultSolveLimit;  // partitions tried for a certificate
  ClawMode claw = ClawMode::Strict;
  std::size_t max_cx = 3;
};

struct Verdict {
  enum class Tag {
    Hamiltonian,
    NonHamiltonianNoSolution,
    NonHamiltonianGlobalHole,
    NonHamiltonianClaw,
    CriterionUnverified,
  };

  Tag tag = Tag::CriterionUnverified;
  std::optional<EdgeSet> certificate;   // a verified Hamilton cycle
  std::vector<int> certificate_faces;   // inside faces whose XOR is the certificate
  std::optional<HoleContext> hole;
  std::optional<ClawReport> claw;
  std::vector<ClawReport> claws;        // full scan, for reporting
  bool criterion_applies = false;       // claw condition met under the chosen mode
  std::size_t partitions_tried = 0;
  std::string details;

  /// True when the verdict, taken at face value, asserts a Hamilton cycle:
  /// either a certificate, or "no hole found" under a satisfied hypothesis.
  bool criterion_claims_hamiltonian() const;
  bool non_hamiltonian() const;
};

std::string to_string(Verdict::Tag t);

/// Claws, then the equation, then the hole search (only when the claw
/// condition holds), then certificate extraction from solver partitions.
Verdict decide(const BasisGraph& bg, const DecideOptions& opts = {});
Verdict decide(const PlanarEmbedding& g, const DecideOptions& opts = {});

/// CLI exit code: 0 Hamiltonian, 1 any non-Hamiltonian verdict, 2 unverified.
int exit_code(const Verdict& v);

/// XOR of the inside faces, returned if it is a Hamilton cycle.
std::optional<EdgeSet> certificate_from(const GrinbergPartition& p, const BasisGraph& bg);

}  // namespace pgg
