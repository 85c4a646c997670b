#include <doctest.h>

#include <random>

#include "pgg/cycles.hpp"
#include "pgg/error.hpp"
#include "pgg/generators.hpp"
#include "support/brute.hpp"
#include "support/fixture.hpp"

using namespace pgg;

TEST_CASE("bounded face counts of the small fixtures") {
  const auto sq = traced("square");
  REQUIRE(sq.basis.size() == 1);
  CHECK(sq.basis.faces[0].length() == 4);

  const auto dom = traced("domino");
  REQUIRE(dom.basis.size() == 2);
  for (const Face& f : dom.basis.faces) CHECK(f.length() == 4);

  const auto g3 = traced("grid3");
  REQUIRE(g3.basis.size() == 4);
  for (const Face& f : g3.basis.faces) CHECK(f.length() == 4);
}

TEST_CASE("fan9 has a triangle, a pentagon and a hexagon") {
  const auto bg = traced("fan9");
  std::vector<std::size_t> lengths;
  for (const Face& f : bg.basis.faces) lengths.push_back(f.length());
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{3, 5, 6});
}

TEST_CASE("faces come out counterclockwise and the outer face is separate") {
  for (const char* name : {"grid4", "twin9", "tutte", "fig8"}) {
    const auto bg = traced(name);
    for (const Face& f : bg.basis.faces) {
      std::vector<Point> poly;
      for (VertexIndex v : f.vertices) poly.push_back(bg.graph.pos(v));
      CHECK(doubled_area(poly) > 0);
    }
    REQUIRE(bg.basis.outer.has_value());
  }
}

TEST_CASE("face ids follow the smallest directed edge") {
  const auto bg = traced("grid3");
  // Cells in row-major order: the lower-left cell owns edge (0, 1).
  CHECK(bg.graph.id(bg.basis.faces[0].vertices[0]) == 0);
  CHECK(bg.basis.faces[0].has_vertex(at(bg.graph, 1, 1)));
  CHECK(bg.basis.faces[3].has_vertex(at(bg.graph, 2, 2)));
}

TEST_CASE("basis size is |E| - |V| + 1 on every parsed graph") {
  auto check = [](const PlanarEmbedding& g) {
    const auto basis = trace_faces(g);
    CHECK(basis.size() == g.edge_count() - g.vertex_count() + 1);
  };
  for (const char* name : {"square", "domino", "grid3", "grid4", "fig8", "strip", "fan9", "twin9", "tutte",
                           "hole_hamiltonian", "hole_nonhamiltonian", "peel_two_steps"}) {
    check(fixture(name));
  }
  for_each_polyomino_graph(6, [&](const std::string&, const PlanarEmbedding& g) { check(g); });
  for (const auto& g : brute::random_holed_grids(20, 7)) check(g);
}

TEST_CASE("a pendant edge inside a face is rejected") {
  const auto g = parse_pgg(
      "graph p\nvertex 1 0 0\nvertex 2 4 0\nvertex 3 4 4\nvertex 4 0 4\nvertex 5 2 2\n"
      "edge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\nedge 1 5\n");
  CHECK_THROWS_AS(trace_faces(g), InputError);
}

TEST_CASE("symmetric difference identities") {
  const auto bg = traced("domino");
  const EdgeSet& f1 = bg.basis.faces[0].edges;
  const EdgeSet& f2 = bg.basis.faces[1].edges;
  const EdgeSet none = bg.graph.empty_edge_set();
  CHECK(sym_diff(f1, f1).empty());
  CHECK(sym_diff(f1, none) == f1);

  const EdgeSet perimeter = sym_diff(f1, f2);
  CHECK(perimeter.size() == 6);
  CHECK_FALSE(perimeter.contains(*bg.graph.edge_between(at(bg.graph, 1, 0), at(bg.graph, 1, 1))));

  const std::vector<EdgeSet> both{f1, f2};
  CHECK(sym_diff_all(both, bg.graph.edge_count()) == perimeter);
  CHECK(sym_diff_all({}, 7).empty());
  CHECK_THROWS_AS(sym_diff(f1, EdgeSet(3)), std::invalid_argument);
}

TEST_CASE("random symmetric difference algebra") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng() % 150;
    auto random_set = [&] {
      EdgeSet s(m);
      for (std::size_t e = 0; e < m; ++e) {
        if (rng() % 2) s.insert(e);
      }
      return s;
    };
    const EdgeSet a = random_set(), b = random_set(), c = random_set();
    CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
    CHECK((a ^ b) == (b ^ a));
    CHECK((a ^ a).empty());
    for (std::size_t e = 0; e < m; ++e) CHECK((a ^ b).contains(e) == (a.contains(e) != b.contains(e)));
  }
}

TEST_CASE("classify_edge_set examples") {
  const auto sq = traced("square");
  CHECK(classify_edge_set(sq.graph.empty_edge_set(), sq.graph).kind == CycleClass::Kind::Empty);
  CHECK(classify_edge_set(sq.basis.faces[0].edges, sq.graph) == CycleClass{CycleClass::Kind::SingleCycle, 4});

  const auto strip = traced("strip");
  // the two end cells of the bottom row do not share a vertex
  const Face* left = nullptr;
  const Face* right = nullptr;
  for (const Face& f : strip.basis.faces) {
    if (f.has_vertex(at(strip.graph, 0, 0))) left = &f;
    if (f.has_vertex(at(strip.graph, 5, 0))) right = &f;
  }
  REQUIRE(left);
  REQUIRE(right);
  CHECK(classify_edge_set(left->edges ^ right->edges, strip.graph) == CycleClass{CycleClass::Kind::DisjointCycles, 2});

  const auto fig8 = traced("fig8");
  CHECK(classify_edge_set(fig8.basis.faces[0].edges ^ fig8.basis.faces[1].edges, fig8.graph).kind ==
        CycleClass::Kind::Other);
}

TEST_CASE("is_hamilton_cycle examples") {
  const auto sq = traced("square");
  CHECK(is_hamilton_cycle(sq.basis.faces[0].edges, sq.graph));
  const auto dom = traced("domino");
  CHECK_FALSE(is_hamilton_cycle(dom.basis.faces[0].edges, dom.graph));
  CHECK(is_hamilton_cycle(dom.basis.faces[0].edges ^ dom.basis.faces[1].edges, dom.graph));
}

TEST_CASE("single-cycle classification agrees with a brute-force checker") {
  auto check_all_subsets = [](const PlanarEmbedding& g) {
    REQUIRE(g.edge_count() <= 10);
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      EdgeSet s(m);
      for (std::size_t e = 0; e < m; ++e) {
        if (mask >> e & 1) s.insert(e);
      }
      const bool single = classify_edge_set(s, g).kind == CycleClass::Kind::SingleCycle;
      CHECK(single == brute::is_simple_cycle(s, g));
      CHECK(is_hamilton_cycle(s, g) == (brute::is_simple_cycle(s, g) && s.size() == g.vertex_count()));
    }
  };
  for (const char* name : {"square", "domino", "fig8"}) check_all_subsets(fixture(name));
  for_each_polyomino_graph(3, [&](const std::string&, const PlanarEmbedding& g) { check_all_subsets(g); });
}

TEST_CASE("enclosed_faces examples") {
  const auto sq = traced("square");
  CHECK(enclosed_faces(sq.basis.faces[0].edges, sq.basis, sq.graph) == std::vector<std::size_t>{0});

  const auto dom = traced("domino");
  CHECK(enclosed_faces(dom.basis.faces[0].edges ^ dom.basis.faces[1].edges, dom.basis, dom.graph) ==
        std::vector<std::size_t>{0, 1});

  const auto g3 = traced("grid3");
  for (std::size_t p = 0; p < g3.basis.size(); ++p) {
    CHECK(enclosed_faces(g3.basis.faces[p].edges, g3.basis, g3.graph) == std::vector<std::size_t>{p});
  }
}

TEST_CASE("every simple cycle is the sum of the faces it encloses") {
  auto check = [](const PlanarEmbedding& g) {
    REQUIRE(g.edge_count() <= 12);
    const auto basis = trace_faces(g);
    for (const EdgeSet& c : brute::all_simple_cycles(g)) {
      std::vector<EdgeSet> parts;
      for (std::size_t p : enclosed_faces(c, basis, g)) parts.push_back(basis.faces[p].edges);
      CHECK(sym_diff_all(parts, g.edge_count()) == c);
    }
  };
  for (const char* name : {"square", "domino", "grid3", "fig8", "fan9"}) check(fixture(name));
  for_each_polyomino_graph(4, [&](const std::string& id, const PlanarEmbedding& g) {
    if (g.edge_count() <= 12) check(g);
    (void)id;
  });
}

TEST_CASE("cycle_vertices walks the cycle") {
  const auto dom = traced("domino");
  const auto walk = cycle_vertices(dom.basis.faces[0].edges ^ dom.basis.faces[1].edges, dom.graph);
  CHECK(walk.size() == 6);
  CHECK_THROWS_AS(cycle_vertices(dom.graph.all_edges(), dom.graph), std::invalid_argument);
}

TEST_CASE("extract_faces keeps face ids and vertex ids") {
  const auto bg = traced("grid4");
  const std::vector<std::size_t> pos{4, 5};
  const auto sub = extract_faces(bg, pos, "pair");
  CHECK(sub.graph.vertex_count() == 6);
  CHECK(sub.basis.ids() == std::vector<int>{bg.basis.faces[4].id, bg.basis.faces[5].id});
  CHECK(sub.graph.is_connected());
}
