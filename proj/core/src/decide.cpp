#include "pgg/decide.hpp"

#include "pgg/cycles.hpp"

namespace pgg {

std::string to_string(Verdict::Tag t) {
  switch (t) {
    case Verdict::Tag::Hamiltonian:
      return "Hamiltonian";
    case Verdict::Tag::NonHamiltonianNoSolution:
      return "NonHamiltonianNoSolution";
    case Verdict::Tag::NonHamiltonianGlobalHole:
      return "NonHamiltonianGlobalHole";
    case Verdict::Tag::NonHamiltonianClaw:
      return "NonHamiltonianClaw";
    case Verdict::Tag::CriterionUnverified:
      return "CriterionUnverified";
  }
  return "CriterionUnverified";
}

bool Verdict::criterion_claims_hamiltonian() const {
  return tag == Tag::Hamiltonian || (tag == Tag::CriterionUnverified && criterion_applies);
}

bool Verdict::non_hamiltonian() const {
  return tag == Tag::NonHamiltonianNoSolution || tag == Tag::NonHamiltonianGlobalHole ||
         tag == Tag::NonHamiltonianClaw;
}

int exit_code(const Verdict& v) {
  if (v.tag == Verdict::Tag::Hamiltonian) return 0;
  if (v.non_hamiltonian()) return 1;
  return 2;
}

std::optional<EdgeSet> certificate_from(const GrinbergPartition& p, const BasisGraph& bg) {
  EdgeSet h = bg.graph.empty_edge_set();
  for (std::size_t pos : p.inside) h ^= bg.basis.faces.at(pos).edges;
  if (!is_hamilton_cycle(h, bg.graph)) return std::nullopt;
  return h;
}

Verdict decide(const BasisGraph& bg, const DecideOptions& opts) {
  Verdict v;
  v.claws = claw_d2_scan(bg.graph);
  for (const ClawReport& c : v.claws) {
    if (c.severity == ClawReport::Severity::CaseII) {
      v.tag = Verdict::Tag::NonHamiltonianClaw;
      v.claw = c;
      v.details = "vertex " + std::to_string(c.vertex) + " has " + std::to_string(c.d2) +
                  " neighbours of degree 2; a Hamilton cycle would need all of those edges";
      return v;
    }
  }
  v.criterion_applies = claw_free(v.claws, opts.claw);
  if (!v.criterion_applies) v.claw = v.claws.front();

  const GrinbergEquation eq = equation_of(bg.basis, bg.graph);
  const auto partitions = solve(eq, opts.limit);
  if (partitions.empty()) {
    v.tag = Verdict::Tag::NonHamiltonianNoSolution;
    v.details = "no 0/1 solution of " + format_equation(eq);
    return v;
  }

  if (v.criterion_applies) {
    if (auto hole = find_global_hole(bg, HoleSearchOptions{opts.max_cx})) {
      v.tag = Verdict::Tag::NonHamiltonianGlobalHole;
      v.details = "face " + std::to_string(hole->ck) + " at vertex " + std::to_string(hole->x) + " is a global hole";
      v.hole = std::move(hole);
      return v;
    }
  }

  for (const GrinbergPartition& p : partitions) {
    ++v.partitions_tried;
    if (auto h = certificate_from(p, bg)) {
      v.tag = Verdict::Tag::Hamiltonian;
      v.certificate = std::move(h);
      for (std::size_t pos : p.inside) v.certificate_faces.push_back(bg.basis.faces[pos].id);
      v.details = "certificate from partition " + std::to_string(v.partitions_tried);
      return v;
    }
  }

  v.tag = Verdict::Tag::CriterionUnverified;
  if (!v.criterion_applies) {
    v.details = "criterion not applicable: claw(d2) Case I at vertex " + std::to_string(v.claw->vertex) +
                "; no certificate in " + std::to_string(v.partitions_tried) + " partitions";
  } else {
    v.details = "no global hole; no certificate in " + std::to_string(v.partitions_tried) + " partitions";
  }
  return v;
}

Verdict decide(const PlanarEmbedding& g, const DecideOptions& opts) { return decide(with_traced_faces(g), opts); }

}  // namespace pgg
