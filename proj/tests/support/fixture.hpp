#pragma once

#include <string>

#include "pgg/embedding.hpp"
#include "pgg/faces.hpp"

#ifndef PGG_FIXTURE_DIR
#error "PGG_FIXTURE_DIR must point at the fixtures directory"
#endif

inline pgg::PlanarEmbedding fixture(const std::string& name) {
  return pgg::load_pgg(std::string(PGG_FIXTURE_DIR) + "/" + name + ".pgg");
}

inline pgg::BasisGraph traced(const std::string& name) { return pgg::with_traced_faces(fixture(name)); }

// Vertex index from lattice coordinates.
inline pgg::VertexIndex at(const pgg::PlanarEmbedding& g, std::int64_t x, std::int64_t y) {
  for (pgg::VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.pos(v) == pgg::Point{x, y}) return v;
  }
  throw std::out_of_range("no vertex at that point");
}
