#include "pgg/compare.hpp"

#include <fstream>

#include "pgg/error.hpp"
#include "pgg/faces.hpp"

namespace pgg {

AgreementRow compare_one(const NamedGraph& g, const CompareOptions& opts) {
  AgreementRow row;
  row.graph_id = g.id;
  const BasisGraph bg = with_traced_faces(g.graph);
  row.vertices = bg.graph.vertex_count();
  row.faces = bg.basis.size();

  const Verdict v = decide(bg, opts.decide);
  row.verdict = v.tag;
  row.criterion_applies = v.criterion_applies;
  row.claims_hamiltonian = v.criterion_claims_hamiltonian();

  const OracleResult o = hamilton_oracle(bg.graph, opts.budget);
  row.oracle_found = o.hamiltonian();
  row.oracle_timed_out = o.timed_out;
  row.nodes_explored = o.nodes_explored;

  if (o.timed_out) {
    row.note = "oracle budget exhausted";
    return row;
  }
  const bool found = *row.oracle_found;
  if (v.non_hamiltonian()) {
    row.agree = !found;
    row.hard_violation = found && v.tag == Verdict::Tag::NonHamiltonianNoSolution;
  } else if (row.claims_hamiltonian) {
    row.agree = found;
    row.hard_violation = !found && v.tag == Verdict::Tag::Hamiltonian;
    if (v.tag == Verdict::Tag::CriterionUnverified) row.note = "criterion claims a cycle; none certified";
  } else {
    row.note = "criterion not applicable";
  }
  row.candidate = row.agree.has_value() && !*row.agree;
  return row;
}

AgreementReport compare(const std::vector<NamedGraph>& graphs, const CompareOptions& opts) {
  AgreementReport r;
  if (opts.save_candidates) std::filesystem::create_directories(*opts.save_candidates);
  for (const NamedGraph& g : graphs) {
    AgreementRow row = compare_one(g, opts);
    ++r.totals.graphs;
    if (row.oracle_timed_out) ++r.totals.oracle_timeouts;
    if (!row.agree) {
      ++r.totals.inconclusive;
    } else if (*row.agree) {
      ++r.totals.agree;
    } else {
      ++r.totals.disagree;
    }
    if (row.hard_violation) ++r.totals.hard_violations;
    if (row.candidate) {
      r.candidates.push_back(row.graph_id);
      if (opts.save_candidates) {
        const auto path = *opts.save_candidates / (row.graph_id + ".pgg");
        std::ofstream out(path);
        if (!out) throw InputError("cannot write " + path.string());
        out << "# criterion " << to_string(row.verdict) << ", oracle "
            << (*row.oracle_found ? "found a cycle" : "found no cycle") << "\n"
            << to_pgg(g.graph);
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace pgg
