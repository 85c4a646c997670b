#include "pgg/subbases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pgg/error.hpp"
#include "pgg/oracle.hpp"

namespace pgg {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Shrinks `candidates` (positions) by descending face id while `inner` stays bounded.
std::vector<std::size_t> shrink(const FaceBasis& basis, std::vector<std::size_t> candidates,
                                const std::vector<std::size_t>& interior, const std::vector<VertexIndex>& inner,
                                const PlanarEmbedding& g) {
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) { return basis.faces[a].id > basis.faces[b].id; });
  auto with_interior = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> all = s;
    all.insert(all.end(), interior.begin(), interior.end());
    return all;
  };
  std::vector<std::size_t> kept = candidates;
  for (std::size_t p : candidates) {
    std::vector<std::size_t> trial;
    for (std::size_t q : kept) {
      if (q != p) trial.push_back(q);
    }
    if (bounds_vertices(basis, with_interior(trial), inner, g)) kept = std::move(trial);
  }
  return kept;
}

std::vector<int> ids_of(const FaceBasis& basis, const std::vector<std::size_t>& positions) {
  std::vector<int> ids;
  for (std::size_t p : positions) ids.push_back(basis.faces[p].id);
  return sorted(std::move(ids));
}

// Face of `g` through the vertex ids of a cycle, oriented counterclockwise.
Face face_from_cycle(int id, const std::vector<VertexId>& cycle, const PlanarEmbedding& g) {
  Face f;
  f.id = id;
  f.edges = g.empty_edge_set();
  std::vector<Point> poly;
  for (VertexId v : cycle) {
    f.vertices.push_back(g.index_of_checked(v));
    poly.push_back(g.pos(f.vertices.back()));
  }
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    const auto e = g.edge_between(f.vertices[i], f.vertices[(i + 1) % f.vertices.size()]);
    if (!e) throw std::logic_error("cycle edge missing from reduced graph");
    f.edges.insert(*e);
  }
  if (doubled_area(poly) < 0) std::reverse(f.vertices.begin(), f.vertices.end());
  return f;
}

}  // namespace

std::vector<int> SubbasisRecord::faces() const {
  std::vector<int> all = minimal_set;
  all.insert(all.end(), interior_faces.begin(), interior_faces.end());
  return sorted(std::move(all));
}

std::vector<std::vector<int>> SubbasisDecomposition::minimal_sets() const {
  std::vector<std::vector<int>> out;
  for (const auto& g : subgraphs) out.push_back(g.minimal_set);
  return out;
}

std::vector<std::size_t> boundary_element_set(const FaceBasis& basis, const EdgeWeights& w,
                                              const std::vector<VertexClass>& classes, const PlanarEmbedding&) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < basis.faces.size(); ++p) {
    const Face& f = basis.faces[p];
    bool hit = std::any_of(f.vertices.begin(), f.vertices.end(),
                           [&](VertexIndex v) { return classes[v].tag == VertexClass::Tag::Boundary; });
    f.edges.for_each([&](EdgeId e) { hit = hit || w[e] == 1; });
    if (hit) out.push_back(p);
  }
  return out;
}

bool bounds_vertices(const FaceBasis& basis, const std::vector<std::size_t>& faces,
                     const std::vector<VertexIndex>& inner, const PlanarEmbedding& g) {
  std::vector<int> cover(g.edge_count(), 0);
  for (std::size_t p : faces) basis.faces[p].edges.for_each([&](EdgeId e) { ++cover[e]; });
  for (VertexIndex v : inner) {
    for (EdgeId e : g.rotation(v)) {
      if (cover[e] != 2) return false;
    }
  }
  return true;
}

SubbasisDecomposition decompose(const BasisGraph& bg) {
  const FaceBasis& basis = bg.basis;
  const PlanarEmbedding& g = bg.graph;
  const EdgeWeights w = edge_weights(basis, g);
  const auto classes = classify_vertices(basis, w, g);

  SubbasisDecomposition d;
  const auto bset = boundary_element_set(basis, w, classes, g);
  d.boundary_element_set = ids_of(basis, bset);
  std::vector<char> in_b(basis.size(), 0);
  for (std::size_t p : bset) in_b[p] = 1;

  // Interior face components, joined across shared edges.
  std::vector<std::size_t> inner_faces;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    if (!in_b[p]) inner_faces.push_back(p);
  }
  UnionFind uf(basis.size());
  for (std::size_t i = 0; i < inner_faces.size(); ++i) {
    for (std::size_t j = i + 1; j < inner_faces.size(); ++j) {
      if (basis.faces[inner_faces[i]].edges.intersects(basis.faces[inner_faces[j]].edges)) {
        uf.unite(inner_faces[i], inner_faces[j]);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t p : inner_faces) by_root[uf.find(p)].push_back(p);
  std::vector<std::vector<std::size_t>> face_parts;
  for (auto& [root, part] : by_root) face_parts.push_back(std::move(part));
  std::sort(face_parts.begin(), face_parts.end(), [&](const auto& a, const auto& b) {
    return basis.faces[a.front()].id < basis.faces[b.front()].id;
  });

  std::vector<char> on_inner_face(g.vertex_count(), 0);
  for (std::size_t p : inner_faces) {
    for (VertexIndex v : basis.faces[p].vertices) on_inner_face[v] = 1;
  }

  // Interior vertices on no interior face, grouped along graph edges.
  UnionFind vf(g.vertex_count());
  std::vector<VertexIndex> lone;
  auto is_lone = [&](VertexIndex v) { return classes[v].tag == VertexClass::Tag::Interior && !on_inner_face[v]; };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!is_lone(v)) continue;
    lone.push_back(v);
    for (EdgeId e : g.rotation(v)) {
      const VertexIndex u = g.other_end(e, v);
      if (is_lone(u)) vf.unite(u, v);
    }
  }
  std::map<std::size_t, std::vector<VertexIndex>> vgroups;
  for (VertexIndex v : lone) vgroups[vf.find(v)].push_back(v);
  std::vector<std::vector<VertexIndex>> vertex_parts;
  for (auto& [root, part] : vgroups) vertex_parts.push_back(std::move(part));
  std::sort(vertex_parts.begin(), vertex_parts.end(),
            [&](const auto& a, const auto& b) { return g.id(a.front()) < g.id(b.front()); });

  std::set<int> claimed;
  auto finish = [&](const std::vector<std::size_t>& minimal, const std::vector<std::size_t>& interior,
                    const std::vector<VertexIndex>& inner) {
    SubbasisRecord r;
    r.minimal_set = ids_of(basis, minimal);
    r.interior_faces = ids_of(basis, interior);
    std::set<VertexId> vs;
    for (std::size_t p : minimal) {
      for (VertexIndex v : basis.faces[p].vertices) vs.insert(g.id(v));
    }
    for (std::size_t p : interior) {
      for (VertexIndex v : basis.faces[p].vertices) vs.insert(g.id(v));
    }
    r.vertices.assign(vs.begin(), vs.end());
    for (VertexIndex v : inner) r.interior_vertices.push_back(g.id(v));
    std::sort(r.interior_vertices.begin(), r.interior_vertices.end());
    claimed.insert(r.minimal_set.begin(), r.minimal_set.end());
    claimed.insert(r.interior_faces.begin(), r.interior_faces.end());
    d.subgraphs.push_back(std::move(r));
  };

  auto bounding_candidates = [&](const std::vector<VertexIndex>& touch) {
    std::vector<std::size_t> cand;
    for (std::size_t p : bset) {
      const Face& f = basis.faces[p];
      if (std::any_of(touch.begin(), touch.end(), [&](VertexIndex v) { return f.has_vertex(v); })) {
        cand.push_back(p);
      }
    }
    return cand;
  };

  auto verify_minimal = [&](const std::vector<std::size_t>& minimal, const std::vector<std::size_t>& interior,
                            const std::vector<VertexIndex>& inner) {
    for (std::size_t drop : minimal) {
      std::vector<std::size_t> rest = interior;
      for (std::size_t q : minimal) {
        if (q != drop) rest.push_back(q);
      }
      if (bounds_vertices(basis, rest, inner, g)) {
        d.notes.push_back("minimal set check failed: face " + std::to_string(basis.faces[drop].id) + " is redundant");
      }
    }
  };

  for (const auto& part : face_parts) {
    std::set<VertexIndex> vset;
    for (std::size_t p : part) vset.insert(basis.faces[p].vertices.begin(), basis.faces[p].vertices.end());
    const std::vector<VertexIndex> inner(vset.begin(), vset.end());
    const auto cand = bounding_candidates(inner);
    std::vector<std::size_t> all = cand;
    all.insert(all.end(), part.begin(), part.end());
    if (!bounds_vertices(basis, all, inner, g)) {
      d.notes.push_back("interior faces " + std::to_string(basis.faces[part.front()].id) +
                        ".. cannot be bounded; left in the coset");
      continue;
    }
    const auto minimal = shrink(basis, cand, part, inner, g);
    verify_minimal(minimal, part, inner);
    finish(minimal, part, inner);
  }

  for (const auto& inner : vertex_parts) {
    const auto cand = bounding_candidates(inner);
    if (!bounds_vertices(basis, cand, inner, g)) {
      d.notes.push_back("interior vertex " + std::to_string(g.id(inner.front())) + " cannot be bounded");
      continue;
    }
    const auto minimal = shrink(basis, cand, {}, inner, g);
    verify_minimal(minimal, {}, inner);
    const auto ids = ids_of(basis, minimal);
    if (std::all_of(ids.begin(), ids.end(), [&](int id) { return claimed.count(id) > 0; })) {
      for (VertexIndex v : inner) d.absorbed_vertices.push_back(g.id(v));
      continue;
    }
    finish(minimal, {}, inner);
  }
  std::sort(d.absorbed_vertices.begin(), d.absorbed_vertices.end());

  for (const Face& f : basis.faces) {
    if (!claimed.count(f.id)) d.coset.push_back(f.id);
  }
  std::sort(d.coset.begin(), d.coset.end());
  return d;
}

ReducedGraph reduce_to_gg(const BasisGraph& bg, const SubbasisDecomposition& d, const DecideOptions& opts) {
  ReducedGraph r;
  r.coset = d.coset;
  const PlanarEmbedding& g = bg.graph;
  std::set<VertexId> all_vertices;

  for (std::size_t i = 0; i < d.subgraphs.size(); ++i) {
    const SubbasisRecord& rec = d.subgraphs[i];
    std::vector<std::size_t> positions;
    for (int id : rec.faces()) positions.push_back(*bg.basis.position_of(id));
    const BasisGraph sub = extract_faces(bg, positions, g.name() + "-g" + std::to_string(i));

    Substitution s;
    s.g_index = i;
    s.order = rec.order();
    if (s.order != sub.graph.vertex_count()) {
      r.issues.push_back("g" + std::to_string(i) + ": order mismatch");
    }
    s.verdict = decide(sub, opts);
    if (s.verdict.certificate) {
      for (VertexIndex v : cycle_vertices(*s.verdict.certificate, sub.graph)) s.cycle.push_back(sub.graph.id(v));
      if (s.cycle.size() != s.order) r.issues.push_back("g" + std::to_string(i) + ": C_g order differs from |V(g)|");
    } else if (s.verdict.non_hamiltonian()) {
      if (!r.non_hamiltonian_g) r.non_hamiltonian_g = i;
      r.issues.push_back("g" + std::to_string(i) + ": non-Hamiltonian (" + to_string(s.verdict.tag) + ")");
    } else {
      r.issues.push_back("g" + std::to_string(i) + ": precondition violated, not certified Hamiltonian (" +
                         s.verdict.details + ")");
    }
    all_vertices.insert(rec.vertices.begin(), rec.vertices.end());
    r.equation.face_lengths.push_back(s.order);
    r.substitutions.push_back(std::move(s));
  }
  for (int id : d.coset) {
    const Face& f = bg.basis.faces[*bg.basis.position_of(id)];
    for (VertexIndex v : f.vertices) all_vertices.insert(g.id(v));
    r.equation.face_lengths.push_back(f.length());
  }
  r.equation.order = all_vertices.size();

  const bool all_cycles = std::all_of(r.substitutions.begin(), r.substitutions.end(),
                                      [](const Substitution& s) { return !s.cycle.empty(); });
  if (!all_cycles || (r.substitutions.empty() && r.coset.empty())) return r;

  // G_g: the C_g cycles plus the coset faces, on the original coordinates.
  std::set<std::pair<VertexId, VertexId>> edges;
  auto add = [&](VertexId a, VertexId b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (const Substitution& s : r.substitutions) {
    for (std::size_t k = 0; k < s.cycle.size(); ++k) add(s.cycle[k], s.cycle[(k + 1) % s.cycle.size()]);
  }
  for (int id : d.coset) {
    const Face& f = bg.basis.faces[*bg.basis.position_of(id)];
    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
      add(g.id(f.vertices[k]), g.id(f.vertices[(k + 1) % f.vertices.size()]));
    }
  }
  std::vector<Vertex> vs;
  for (VertexId id : all_vertices) vs.push_back(g.vertex(g.index_of_checked(id)));
  try {
    PlanarEmbedding gg = PlanarEmbedding::build(g.name() + "-Gg", std::move(vs),
                                                std::vector<std::pair<VertexId, VertexId>>(edges.begin(), edges.end()));
    FaceBasis basis;
    for (const Substitution& s : r.substitutions) {
      basis.faces.push_back(face_from_cycle(-1 - static_cast<int>(s.g_index), s.cycle, gg));
    }
    for (int id : d.coset) {
      const Face& f = bg.basis.faces[*bg.basis.position_of(id)];
      std::vector<VertexId> cyc;
      for (VertexIndex v : f.vertices) cyc.push_back(g.id(v));
      basis.faces.push_back(face_from_cycle(id, cyc, gg));
    }
    // Compare against the faces the embedding actually has.
    auto edge_key = [](const FaceBasis& b) {
      std::vector<EdgeSet> keys;
      for (const Face& f : b.faces) keys.push_back(f.edges);
      std::sort(keys.begin(), keys.end());
      return keys;
    };
    try {
      r.basis_matches_faces = edge_key(trace_faces(gg)) == edge_key(basis);
    } catch (const InputError&) {
      r.basis_matches_faces = false;
    }
    if (!r.basis_matches_faces) {
      r.issues.push_back("C_g attachment changes the face structure of G_g; deciding on its traced faces");
    }
    r.graph = BasisGraph{std::move(gg), std::move(basis)};
  } catch (const InputError& e) {
    r.issues.push_back(std::string("G_g is not a valid plane graph: ") + e.what());
  }
  return r;
}

Verdict decide_reduced(const ReducedGraph& r, const DecideOptions& opts) {
  if (r.non_hamiltonian_g) {
    Verdict v = r.substitutions[*r.non_hamiltonian_g].verdict;
    v.details = "subbasis g" + std::to_string(*r.non_hamiltonian_g) + " is non-Hamiltonian: " + v.details;
    return v;
  }
  if (!is_feasible(r.equation)) {
    Verdict v;
    v.tag = Verdict::Tag::NonHamiltonianNoSolution;
    v.details = "no 0/1 solution of the reduced equation " + format_equation(r.equation);
    return v;
  }
  if (r.graph) {
    try {
      if (r.basis_matches_faces) return decide(*r.graph, opts);
      return decide(r.graph->graph, opts);
    } catch (const InputError& e) {
      Verdict v;
      v.details = std::string("G_g could not be decided: ") + e.what();
      return v;
    }
  }
  Verdict v;
  v.details = "reduced equation " + format_equation(r.equation) + " is feasible and G_g has no embedding";
  return v;
}

ReductionAudit audit_reduction(const BasisGraph& bg, const ReducedGraph& r, std::uint64_t budget) {
  ReductionAudit rec;
  const OracleResult orig = hamilton_oracle(bg.graph, budget);
  rec.original = orig.hamiltonian();
  rec.original_timed_out = orig.timed_out;

  if (r.graph) {
    const OracleResult red = hamilton_oracle(r.graph->graph, budget);
    rec.reduced = red.hamiltonian();
    rec.reduced_basis = red.timed_out ? "unknown" : "oracle";
  } else if (r.non_hamiltonian_g) {
    rec.reduced = false;
    rec.reduced_basis = "subbasis";
  } else if (!is_feasible(r.equation)) {
    rec.reduced = false;
    rec.reduced_basis = "equation";
  } else {
    rec.reduced_basis = "unknown";
  }

  if (rec.reduced) {
    if (rec.original) {
      rec.agree = *rec.original == *rec.reduced;
    } else if (rec.reduced_basis == "equation" || rec.reduced_basis == "subbasis") {
      rec.agree = std::nullopt;  // equation-level only; original unknown
    }
  }
  rec.counterexample_candidate = rec.agree.has_value() && !*rec.agree;
  return rec;
}

}  // namespace pgg
