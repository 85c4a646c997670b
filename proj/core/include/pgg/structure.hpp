#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgg/embedding.hpp"
#include "pgg/faces.hpp"

namespace pgg {

/// w(e): how many basis faces contain edge e.
class EdgeWeights {
 public:
  EdgeWeights() = default;
  explicit EdgeWeights(std::vector<int> w) : w_(std::move(w)) {}

  int operator[](EdgeId e) const { return w_.at(e); }
  std::size_t size() const noexcept { return w_.size(); }
  const std::vector<int>& values() const noexcept { return w_; }

 private:
  std::vector<int> w_;
};

/// Throws InputError if some edge lies on more than two faces.
EdgeWeights edge_weights(const FaceBasis& basis, const PlanarEmbedding& g);

struct VertexClass {
  enum class Tag { Boundary, Interior, Other };

  Tag tag = Tag::Other;
  std::vector<std::size_t> cycles_on;  // basis positions of faces through the vertex
};

std::string to_string(VertexClass::Tag t);

/// Interior: every incident edge has w = 2. Boundary: every incident edge has
/// w <= 2 and exactly |cycles_on| - 1 of them have w = 2. Anything else is Other.
VertexClass classify_vertex(VertexIndex v, const FaceBasis& basis, const EdgeWeights& w, const PlanarEmbedding& g);
std::vector<VertexClass> classify_vertices(const FaceBasis& basis, const EdgeWeights& w, const PlanarEmbedding& g);

/// Edges with w = 1, ascending.
std::vector<EdgeId> boundary_edges(const EdgeWeights& w);

struct ClawReport {
  enum class Severity { CaseI, CaseII };

  VertexId vertex = 0;
  std::size_t incident = 0;  // |E| at the vertex
  std::size_t d2 = 0;        // incident edges leading to a degree-2 vertex
  Severity severity = Severity::CaseI;

  friend bool operator==(const ClawReport&, const ClawReport&) = default;
};

std::string to_string(ClawReport::Severity s);

/// Vertices with at least 3 incident edges of which at least 2 end in a
/// degree-2 vertex, sorted by vertex id. Exactly 2 is Case I, more is Case II.
std::vector<ClawReport> claw_d2_scan(const PlanarEmbedding& g);

enum class ClawMode {
  Strict,   // both cases disqualify
  Lenient,  // only Case II disqualifies
};

bool claw_free(const std::vector<ClawReport>& reports, ClawMode mode);

class RemovalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Removing a face drops it from the basis and deletes those of its edges
/// with w = 1. The face is removable when no vertex is left without edges.
bool is_removable(const BasisGraph& bg, std::size_t position);

/// Throws RemovalError if the face is not removable.
BasisGraph remove_face(const BasisGraph& bg, std::size_t position);

/// Same operation without the removability check; for experiments only.
BasisGraph remove_face_forced(const BasisGraph& bg, std::size_t position);

}  // namespace pgg
