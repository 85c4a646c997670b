#include "pgg/cycles.hpp"

#include <vector>

namespace pgg {

std::string to_string(CycleClass c) {
  switch (c.kind) {
    case CycleClass::Kind::Empty:
      return "Empty";
    case CycleClass::Kind::SingleCycle:
      return "SingleCycle(" + std::to_string(c.value) + ")";
    case CycleClass::Kind::DisjointCycles:
      return "DisjointCycles(" + std::to_string(c.value) + ")";
    case CycleClass::Kind::Other:
      return "Other";
  }
  return "Other";
}

CycleClass classify_edge_set(const EdgeSet& e, const PlanarEmbedding& g) {
  if (e.empty()) return {CycleClass::Kind::Empty, 0};
  std::vector<int> degree(g.vertex_count(), 0);
  e.for_each([&](EdgeId id) {
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  });
  for (int d : degree) {
    if (d != 0 && d != 2) return {CycleClass::Kind::Other, 0};
  }

  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (degree[s] == 0 || seen[s]) continue;
    ++components;
    std::vector<VertexIndex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeId id : g.rotation(v)) {
        if (!e.contains(id)) continue;
        const VertexIndex w = g.other_end(id, v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  if (components == 1) return {CycleClass::Kind::SingleCycle, e.size()};
  return {CycleClass::Kind::DisjointCycles, components};
}

bool is_hamilton_cycle(const EdgeSet& e, const PlanarEmbedding& g) {
  if (e.universe() != g.edge_count()) return false;
  const CycleClass c = classify_edge_set(e, g);
  return c.kind == CycleClass::Kind::SingleCycle && c.value == g.vertex_count();
}

}  // namespace pgg
