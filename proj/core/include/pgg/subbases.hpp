#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgg/decide.hpp"
#include "pgg/faces.hpp"
#include "pgg/grinberg.hpp"
#include "pgg/structure.hpp"

namespace pgg {

/// Positions of faces touching a Boundary vertex or an edge of weight 1.
std::vector<std::size_t> boundary_element_set(const FaceBasis& basis, const EdgeWeights& w,
                                              const std::vector<VertexClass>& classes, const PlanarEmbedding& g);

/// One independent subbasis g: an interior connected part together with the
/// minimal boundary-element set around it. Faces by id, vertices by id.
struct SubbasisRecord {
  std::vector<int> minimal_set;
  std::vector<int> interior_faces;          // empty when the interior is a lone vertex group
  std::vector<VertexId> interior_vertices;  // vertices bounded by the minimal set
  std::vector<VertexId> vertices;           // all vertices of g

  std::vector<int> faces() const;  // minimal_set + interior_faces, ascending
  std::size_t order() const noexcept { return vertices.size(); }
};

struct SubbasisDecomposition {
  std::vector<int> boundary_element_set;
  std::vector<SubbasisRecord> subgraphs;
  std::vector<int> coset;                  // faces in no g
  std::vector<VertexId> absorbed_vertices; // interior vertices already bounded by an earlier g
  std::vector<std::string> notes;

  std::size_t g_count() const noexcept { return subgraphs.size(); }
  std::vector<std::vector<int>> minimal_sets() const;
};

/// Does the face set `faces` (positions) keep every vertex of `inner` strictly
/// inside, i.e. is each incident edge covered by exactly two of them?
bool bounds_vertices(const FaceBasis& basis, const std::vector<std::size_t>& faces,
                     const std::vector<VertexIndex>& inner, const PlanarEmbedding& g);

/// Interior parts are the edge-connected components of faces outside the
/// boundary-element set, then groups of adjacent Interior vertices lying on
/// no such face. Each part's bounding set starts as every boundary-element
/// face meeting it and is shrunk by dropping faces in descending id while it
/// still bounds the part. Minimal sets may overlap between parts.
SubbasisDecomposition decompose(const BasisGraph& bg);

struct Substitution {
  std::size_t g_index = 0;
  std::size_t order = 0;                 // |V(g)|
  Verdict verdict;                       // decide() on g alone
  std::vector<VertexId> cycle;           // C_g when g was certified Hamiltonian
};

struct ReducedGraph {
  std::vector<Substitution> substitutions;
  std::vector<int> coset;
  GrinbergEquation equation;                 // C_g orders and coset lengths over |V(G_g)|
  std::optional<BasisGraph> graph;           // G_g with the C_g and coset faces as basis
  bool basis_matches_faces = false;          // that basis equals the traced bounded faces
  std::optional<std::size_t> non_hamiltonian_g;
  std::vector<std::string> issues;
};

/// Replaces each g by its certified Hamilton cycle C_g (kept on g's own
/// vertices, so G_g is a plane subgraph of G). Without a certificate for
/// every g only the equation is built.
ReducedGraph reduce_to_gg(const BasisGraph& bg, const SubbasisDecomposition& d, const DecideOptions& opts = {});

/// Decision on G_g: a non-Hamiltonian g settles it; then the reduced
/// equation; then decide() on G_g when it exists.
Verdict decide_reduced(const ReducedGraph& r, const DecideOptions& opts = {});

struct ReductionAudit {
  std::optional<bool> original;  // oracle on G; nullopt on timeout
  bool original_timed_out = false;
  std::optional<bool> reduced;   // Hamiltonicity of G_g
  std::string reduced_basis;     // "oracle", "equation", "subbasis" or "unknown"
  std::optional<bool> agree;     // nullopt when either side is unknown
  bool counterexample_candidate = false;
};

ReductionAudit audit_reduction(const BasisGraph& bg, const ReducedGraph& r, std::uint64_t budget);

}  // namespace pgg
