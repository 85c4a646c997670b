#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgg/edge_set.hpp"
#include "pgg/embedding.hpp"

namespace pgg {

/// One bounded face of the tiling, i.e. one cycle of the face basis.
struct Face {
  int id = 0;                         // stable across removals and extraction
  std::vector<VertexIndex> vertices;  // counterclockwise boundary
  EdgeSet edges;

  std::size_t length() const noexcept { return vertices.size(); }
  bool has_vertex(VertexIndex v) const;
};

/// Boundary walk of the unbounded region; may repeat vertices.
struct OuterFace {
  std::vector<VertexIndex> walk;
  EdgeSet edges;
  std::size_t length() const noexcept { return walk.size(); }
};

/// Bounded faces used as the cycle basis. The outer face is kept apart and
/// is only known for freshly traced graphs (residual bases drop it).
struct FaceBasis {
  std::vector<Face> faces;
  std::optional<OuterFace> outer;

  std::size_t size() const noexcept { return faces.size(); }
  std::optional<std::size_t> position_of(int id) const;
  std::vector<int> ids() const;
  std::vector<std::size_t> faces_on(VertexIndex v) const;
};

/// A graph together with the basis that is currently in force for it.
struct BasisGraph {
  PlanarEmbedding graph;
  FaceBasis basis;
};

/// Walks every half-edge once, turning to the clockwise-next edge at each
/// vertex. Bounded faces come out counterclockwise with positive area and are
/// numbered in the order their lexicographically smallest (tail id, head id)
/// half-edge is reached. Throws InputError when a bounded face is not a
/// simple polygon.
FaceBasis trace_faces(const PlanarEmbedding& g);

BasisGraph with_traced_faces(PlanarEmbedding g);

/// Vertices of a single cycle in walk order, starting at the lower endpoint
/// of its smallest edge. Throws std::invalid_argument if `cycle` is not one.
std::vector<VertexIndex> cycle_vertices(const EdgeSet& cycle, const PlanarEmbedding& g);

/// Positions (into basis.faces) of the faces whose interior point lies
/// strictly inside the polygon of `cycle`.
std::vector<std::size_t> enclosed_faces(const EdgeSet& cycle, const FaceBasis& basis, const PlanarEmbedding& g);

/// The faces at `positions` as a standalone graph: their vertices and edges,
/// with the same face ids. Vertex ids and coordinates are preserved.
BasisGraph extract_faces(const BasisGraph& bg, std::span<const std::size_t> positions, std::string name);

/// Re-expresses faces of `g_old` over `g_new` (matched by vertex id). Every
/// face edge must exist in `g_new`. The outer face is dropped.
FaceBasis remap_faces(const FaceBasis& basis, const PlanarEmbedding& g_old, const PlanarEmbedding& g_new);

}  // namespace pgg
