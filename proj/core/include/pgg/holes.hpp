#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgg/embedding.hpp"
#include "pgg/faces.hpp"

namespace pgg {

struct HoleSearchOptions {
  std::size_t max_cx = 3;  // largest C_x set tried per vertex
};

/// One candidate hole C_k at a beginning vertex x. Faces are named by id.
///
/// `shared_vertex_faces` is the set of faces meeting C_k in vertices only
/// (C_v in the hole vocabulary; renamed to avoid clashing with the per-vertex
/// face set of the structure module).
struct HoleContext {
  VertexId x = 0;
  std::vector<int> cx;   // removed first; turns x into a degree-4 Boundary vertex
  int ck = 0;            // removable, has an Interior vertex, no w = 1 edge
  VertexId ck_interior_witness = 0;
  std::vector<int> cxe;  // removable faces of G - C_x meeting C_k exactly at x
  std::vector<int> ce;   // removable faces sharing an edge with C_k
  std::vector<int> shared_vertex_faces;
};

/// Removes faces one after another; nullopt if some face is not removable at
/// its turn or a removal disconnects the graph.
std::optional<BasisGraph> remove_in_sequence(const BasisGraph& bg, std::span<const int> face_ids);

/// Sets of removable faces through x (at most max_size of them, removed in
/// ascending id order) after which x is a Boundary vertex of degree 4 and the
/// residual equation is feasible. Lexicographic order of the sorted id lists.
std::vector<std::vector<int>> candidate_cx(const BasisGraph& bg, VertexIndex x, std::size_t max_size = 3);

struct CkCandidate {
  int face = 0;
  VertexId interior_witness = 0;
};

/// Faces through x in `residual` that are removable, contain an Interior
/// vertex and have no edge of weight 1. Ascending face id.
std::vector<CkCandidate> find_ck(const BasisGraph& residual, VertexIndex x);

/// Completes a context from x, C_x and C_k, all evaluated in G - C_x.
HoleContext make_context(const BasisGraph& residual, VertexIndex x, std::vector<int> cx, const CkCandidate& ck);

/// All contexts at x: every C_x candidate paired with every C_k it exposes.
std::vector<HoleContext> hole_contexts(const BasisGraph& bg, VertexIndex x, const HoleSearchOptions& opts = {});

struct PeelStep {
  VertexId begin = 0;
  std::vector<int> removed_cx;
  std::vector<int> removed_cxe;
  std::optional<int> removed_ck;
  bool feasible_after = false;
};

struct PeelTrace {
  std::vector<PeelStep> steps;
  std::vector<std::string> log;  // skipped removals
  BasisGraph residual;
  bool residual_feasible = false;
};

/// Default schedule: vertices of degree >= 4, ascending id.
std::vector<VertexId> default_schedule(const PlanarEmbedding& g);

/// Peeling. The first step removes C_x and C_xe at a beginning vertex (taken
/// from `start` when given, else the first scheduled vertex with a C_x
/// candidate). Later steps remove an optional C_x, then C_xe and C_k at some
/// scheduled vertex; passes over the schedule repeat until a full pass finds
/// no C_k or the residual equation becomes infeasible. Ties go to the
/// lexicographically smallest candidate.
PeelTrace peel(const BasisGraph& bg, std::span<const VertexId> schedule, const std::optional<HoleContext>& start = {},
               const HoleSearchOptions& opts = {});

/// A context is a global hole iff the peeled residual started from it has an
/// infeasible equation.
bool is_global_hole(const BasisGraph& bg, const HoleContext& ctx, const HoleSearchOptions& opts = {});

/// Diagnostic: inside the subgraph formed by C_k, its edge neighbours and its
/// vertex neighbours in G, is C_k a global hole for some context?
bool is_local_hole(const BasisGraph& bg, int ck, const HoleSearchOptions& opts = {});

struct VertexHoleReport {
  VertexId x = 0;
  std::vector<std::vector<int>> cx_candidates;
  std::vector<HoleContext> contexts;
  std::vector<bool> global;  // parallel to contexts
  std::vector<bool> local;   // parallel to contexts
};

/// One report per vertex of degree >= 4, ascending id.
std::vector<VertexHoleReport> scan_holes(const BasisGraph& bg, const HoleSearchOptions& opts = {});

/// First global hole in scan order (ascending x, then C_x, then C_k).
std::optional<HoleContext> find_global_hole(const BasisGraph& bg, const HoleSearchOptions& opts = {});

}  // namespace pgg
