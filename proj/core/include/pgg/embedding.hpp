#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgg/edge_set.hpp"
#include "pgg/geometry.hpp"

namespace pgg {

namespace detail {
struct EmbeddingAccess;
}

using VertexId = std::int64_t;     // label from the input file
using VertexIndex = std::size_t;   // dense position inside one embedding

struct Vertex {
  VertexId id = 0;
  Point pos;
};

/// Endpoints are vertex indices, kept in the order they were declared.
struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;
};

/// A straight-line plane graph. The rotation system is derived from the
/// coordinates: incident edges of every vertex are stored counterclockwise
/// starting from the positive x axis. Immutable once built.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  /// Validates simplicity, non-crossing and connectivity. Throws ParseError
  /// (line 0) on failure; the `.pgg` reader reports real line numbers instead.
  static PlanarEmbedding build(std::string name, std::vector<Vertex> vertices,
                               const std::vector<std::pair<VertexId, VertexId>>& edges);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  Point pos(VertexIndex v) const { return vertices_[v].pos; }
  VertexId id(VertexIndex v) const { return vertices_[v].id; }

  std::optional<VertexIndex> index_of(VertexId id) const;
  VertexIndex index_of_checked(VertexId id) const;
  std::optional<EdgeId> edge_between(VertexIndex a, VertexIndex b) const;

  VertexIndex other_end(EdgeId e, VertexIndex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  /// Incident edges of `v` in counterclockwise order.
  std::span<const EdgeId> rotation(VertexIndex v) const { return rotation_[v]; }
  std::size_t degree(VertexIndex v) const { return rotation_[v].size(); }

  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const;

  bool is_connected() const;

  /// Same vertices, minus `removed`. Edge ids are renumbered densely in
  /// their original relative order; `edge_map` (optional) receives old->new.
  PlanarEmbedding without_edges(const EdgeSet& removed,
                                std::vector<std::optional<EdgeId>>* edge_map = nullptr) const;

  /// The subgraph formed by `kept` and the vertices it touches. Vertex ids and
  /// coordinates are preserved; indices are renumbered in ascending order.
  PlanarEmbedding edge_subgraph(const EdgeSet& kept, std::string name) const;

  /// Copy with vertex ids replaced by `new_ids[index]` (used by relabeling tests).
  PlanarEmbedding relabeled(std::span<const VertexId> new_ids) const;

 private:
  friend struct detail::EmbeddingAccess;

  // Builds indexes and the rotation system without geometric validation.
  static PlanarEmbedding assemble(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rotation_;
  std::unordered_map<VertexId, VertexIndex> index_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

/// Reads the line-oriented `.pgg` format:
///   graph <name>
///   vertex <id> <x> <y>
///   edge <u> <v>
/// `#` starts a comment. Throws ParseError with the offending line.
PlanarEmbedding parse_pgg(std::istream& in);
PlanarEmbedding parse_pgg(std::string_view text);
PlanarEmbedding load_pgg(const std::string& path);

/// Writes an embedding back in `.pgg` form (vertices and edges in stored order).
std::string to_pgg(const PlanarEmbedding& g);

}  // namespace pgg
