#include "pgg/report.hpp"

namespace pgg::report {

namespace {

json ids_json(const std::vector<VertexIndex>& vs, const PlanarEmbedding& g) {
  json a = json::array();
  for (VertexIndex v : vs) a.push_back(g.id(v));
  return a;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json edges_json(const EdgeSet& s, const PlanarEmbedding& g) {
  json a = json::array();
  s.for_each([&](EdgeId e) { a.push_back({g.id(g.edge(e).u), g.id(g.edge(e).v)}); });
  return a;
}

json face_json(const Face& f, const PlanarEmbedding& g) {
  return {{"id", f.id}, {"length", f.length()}, {"vertices", ids_json(f.vertices, g)}};
}

json claw_json(const ClawReport& c) {
  return {{"vertex", c.vertex}, {"incident", c.incident}, {"d2", c.d2}, {"case", to_string(c.severity)}};
}

json classification(const BasisGraph& bg) {
  const PlanarEmbedding& g = bg.graph;
  const EdgeWeights w = edge_weights(bg.basis, g);
  const auto classes = classify_vertices(bg.basis, w, g);
  json faces = json::array();
  for (const Face& f : bg.basis.faces) faces.push_back(face_json(f, g));
  json vertices = json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    json on = json::array();
    for (std::size_t p : classes[v].cycles_on) on.push_back(bg.basis.faces[p].id);
    vertices.push_back({{"id", g.id(v)}, {"degree", g.degree(v)}, {"class", to_string(classes[v].tag)}, {"faces", on}});
  }
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"u", g.id(g.edge(e).u)}, {"v", g.id(g.edge(e).v)}, {"weight", w[e]}});
  }
  json claws = json::array();
  for (const ClawReport& c : claw_d2_scan(g)) claws.push_back(claw_json(c));
  json j{{"graph", g.name()},
         {"order", g.vertex_count()},
         {"size", g.edge_count()},
         {"faces", faces},
         {"vertices", vertices},
         {"edges", edges},
         {"claws", claws}};
  if (bg.basis.outer) j["outer_face"] = ids_json(bg.basis.outer->walk, g);
  return j;
}

json equation_json(const GrinbergEquation& eq) {
  return {{"text", format_equation(eq)}, {"lengths", eq.face_lengths}, {"order", eq.order}, {"target", eq.target()}};
}

json partition_json(const GrinbergPartition& p, const FaceBasis& basis) {
  json in = json::array(), out = json::array();
  for (std::size_t q : p.inside) in.push_back(basis.faces[q].id);
  for (std::size_t q : p.outside) out.push_back(basis.faces[q].id);
  return {{"inside", in}, {"outside", out}};
}

json hole_context_json(const HoleContext& c) {
  return {{"x", c.x},
          {"cx", c.cx},
          {"ck", c.ck},
          {"ck_interior_witness", c.ck_interior_witness},
          {"cxe", c.cxe},
          {"ce", c.ce},
          {"shared_vertex_faces", c.shared_vertex_faces}};
}

json peel_json(const PeelTrace& t) {
  json steps = json::array();
  for (const PeelStep& s : t.steps) {
    steps.push_back({{"begin", s.begin},
                     {"cx", s.removed_cx},
                     {"cxe", s.removed_cxe},
                     {"ck", s.removed_ck ? json(*s.removed_ck) : json(nullptr)},
                     {"feasible_after", s.feasible_after}});
  }
  return {{"steps", steps},
          {"log", t.log},
          {"residual_faces", t.residual.basis.ids()},
          {"residual_feasible", t.residual_feasible}};
}

json vertex_holes_json(const VertexHoleReport& r) {
  json ctxs = json::array();
  for (std::size_t i = 0; i < r.contexts.size(); ++i) {
    json c = hole_context_json(r.contexts[i]);
    c["global_hole"] = static_cast<bool>(r.global[i]);
    c["local_hole"] = static_cast<bool>(r.local[i]);
    ctxs.push_back(std::move(c));
  }
  return {{"x", r.x}, {"cx_candidates", r.cx_candidates}, {"contexts", ctxs}};
}

json verdict_json(const Verdict& v, const PlanarEmbedding& g) {
  json j{{"verdict", to_string(v.tag)},
         {"details", v.details},
         {"criterion_applies", v.criterion_applies},
         {"partitions_tried", v.partitions_tried}};
  if (v.certificate) {
    j["certificate"] = edges_json(*v.certificate, g);
    j["certificate_faces"] = v.certificate_faces;
  }
  if (v.hole) j["hole"] = hole_context_json(*v.hole);
  if (v.claw) j["claw"] = claw_json(*v.claw);
  return j;
}

json decomposition_json(const SubbasisDecomposition& d) {
  json subs = json::array();
  for (const SubbasisRecord& r : d.subgraphs) {
    subs.push_back({{"minimal_set", r.minimal_set},
                    {"interior_faces", r.interior_faces},
                    {"interior_vertices", r.interior_vertices},
                    {"order", r.order()}});
  }
  return {{"boundary_element_set", d.boundary_element_set},
          {"g_count", d.g_count()},
          {"subbases", subs},
          {"coset", d.coset},
          {"absorbed_vertices", d.absorbed_vertices},
          {"notes", d.notes}};
}

json reduced_json(const ReducedGraph& r) {
  json subs = json::array();
  for (const Substitution& s : r.substitutions) {
    subs.push_back({{"g", s.g_index},
                    {"order", s.order},
                    {"verdict", to_string(s.verdict.tag)},
                    {"details", s.verdict.details},
                    {"cycle", s.cycle}});
  }
  json j{{"substitutions", subs},
         {"coset", r.coset},
         {"equation", equation_json(r.equation)},
         {"feasible", is_feasible(r.equation)},
         {"issues", r.issues},
         {"has_embedding", r.graph.has_value()}};
  if (r.graph) {
    j["basis_matches_faces"] = r.basis_matches_faces;
    j["order"] = r.graph->graph.vertex_count();
    j["size"] = r.graph->graph.edge_count();
  }
  return j;
}

json oracle_json(const OracleResult& r, const PlanarEmbedding& g) {
  json j{{"found", r.found.has_value()}, {"timedOut", r.timed_out}, {"nodesExplored", r.nodes_explored}};
  if (r.found) j["cycle"] = edges_json(*r.found, g);
  return j;
}

json agreement_json(const AgreementReport& r) {
  json rows = json::array();
  for (const AgreementRow& row : r.rows) {
    rows.push_back({{"graphId", row.graph_id},
                    {"order", row.vertices},
                    {"faces", row.faces},
                    {"verdict", to_string(row.verdict)},
                    {"criterionApplies", row.criterion_applies},
                    {"claimsHamiltonian", row.claims_hamiltonian},
                    {"oracleFound", optional_bool(row.oracle_found)},
                    {"timedOut", row.oracle_timed_out},
                    {"nodesExplored", row.nodes_explored},
                    {"agree", optional_bool(row.agree)},
                    {"candidate", row.candidate},
                    {"hardViolation", row.hard_violation},
                    {"note", row.note}});
  }
  const AgreementTotals& t = r.totals;
  return {{"perGraph", rows},
          {"totals",
           {{"graphs", t.graphs},
            {"agree", t.agree},
            {"disagree", t.disagree},
            {"inconclusive", t.inconclusive},
            {"oracleTimeouts", t.oracle_timeouts},
            {"hardViolations", t.hard_violations}}},
          {"counterexampleCandidates", r.candidates}};
}

}  // namespace pgg::report
