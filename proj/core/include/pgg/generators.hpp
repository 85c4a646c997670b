#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgg/embedding.hpp"

namespace pgg {

/// Unit cell with lower-left lattice corner (x = c, y = r).
struct Cell {
  int r = 0;
  int c = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Polyomino = std::vector<Cell>;  // sorted, translated to min r = min c = 0

/// Lattice graph of a set of unit cells: their corners and sides. Vertex id
/// of lattice point (x, y) is y * (max c + 2) + x. Throws InputError when
/// the cells do not form a connected graph.
PlanarEmbedding lattice_graph(std::span<const Cell> cells, std::string name);

/// rows x cols lattice *vertices*; `holes` are cells (r, c) to delete and must
/// satisfy 1 <= r <= rows - 3 and 1 <= c <= cols - 3.
PlanarEmbedding gen_grid(std::size_t rows, std::size_t cols, const std::set<std::pair<int, int>>& holes = {});

inline constexpr std::size_t kMaxPolyominoCells = 10;

/// All fixed polyominoes with 1..max_cells cells, by size and then by their
/// sorted cell lists.
std::vector<Polyomino> enumerate_polyominoes(std::size_t max_cells);

/// "p<size>-<index within size>", e.g. p4-07.
std::string polyomino_id(const Polyomino& p, std::size_t index_within_size);

/// Calls `fn(id, graph)` for each polyomino in enumeration order.
void for_each_polyomino_graph(std::size_t max_cells,
                              const std::function<void(const std::string&, const PlanarEmbedding&)>& fn);

namespace fixtures {

PlanarEmbedding square();   // one unit cell
PlanarEmbedding domino();   // 2 x 3 vertices
PlanarEmbedding grid3();    // 3 x 3 vertices
PlanarEmbedding grid4();    // 4 x 4 vertices
PlanarEmbedding fig8();     // two unit cells sharing one corner
PlanarEmbedding strip();    // 2 x 5 cells; its two end cells are vertex-disjoint
PlanarEmbedding fan9();     // 9-vertex block: octagon with a center on three spokes
PlanarEmbedding twin9();    // two fan9 blocks joined through a 4-cycle

}  // namespace fixtures

}  // namespace pgg
