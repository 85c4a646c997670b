#include <doctest.h>

#include "pgg/generators.hpp"
#include "pgg/grinberg.hpp"
#include "pgg/holes.hpp"
#include "pgg/oracle.hpp"
#include "pgg/structure.hpp"
#include "support/fixture.hpp"

using namespace pgg;

namespace {

// Independent check of a candidate: x ends up with degree 4, exactly
// |faces on x| - 1 incident edges lie on two faces, and the equation is feasible.
bool accepted_by_definition(const BasisGraph& bg, VertexIndex x, const std::vector<int>& cx) {
  const auto r = remove_in_sequence(bg, cx);
  if (!r) return false;
  std::vector<int> cover(r->graph.edge_count(), 0);
  for (const Face& f : r->basis.faces) f.edges.for_each([&](EdgeId e) { ++cover[e]; });
  std::size_t heavy = 0, faces_on_x = 0;
  for (EdgeId e : r->graph.rotation(x)) heavy += cover[e] == 2;
  for (const Face& f : r->basis.faces) faces_on_x += f.has_vertex(x);
  return r->graph.degree(x) == 4 && faces_on_x > 0 && heavy == faces_on_x - 1 &&
         is_feasible(equation_of(r->basis, r->graph));
}

}  // namespace

TEST_CASE("4x4 grid: C_x candidates at (1,1)") {
  const auto bg = traced("grid4");
  const VertexIndex x = at(bg.graph, 1, 1);
  const auto cands = candidate_cx(bg, x);
  // the center face qualifies; so do the two edge cells next to x
  CHECK(cands == std::vector<std::vector<int>>{{1}, {3}, {4}});
  for (const auto& c : cands) CHECK(accepted_by_definition(bg, x, c));

  const auto after_center = *remove_in_sequence(bg, std::vector<int>{4});
  CHECK(find_ck(after_center, x).empty());
  for (const auto& c : cands) CHECK(find_ck(*remove_in_sequence(bg, c), x).empty());
}

TEST_CASE("candidate sets are exactly the subsets accepted by definition") {
  for (const char* name : {"grid4", "hole_hamiltonian", "peel_two_steps", "twin9"}) {
    const auto bg = traced(name);
    for (VertexId id : default_schedule(bg.graph)) {
      const VertexIndex x = bg.graph.index_of_checked(id);
      std::vector<int> on_x;
      for (std::size_t p : bg.basis.faces_on(x)) on_x.push_back(bg.basis.faces[p].id);
      std::vector<std::vector<int>> expected;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << on_x.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < on_x.size(); ++i) {
          if (mask >> i & 1) s.push_back(on_x[i]);
        }
        std::sort(s.begin(), s.end());
        if (s.size() <= 3 && accepted_by_definition(bg, x, s)) expected.push_back(s);
      }
      std::sort(expected.begin(), expected.end());
      CHECK(candidate_cx(bg, x) == expected);
    }
  }
}

TEST_CASE("no candidates at the 3x3 center or on max-degree-3 graphs") {
  const auto g3 = traced("grid3");
  CHECK(candidate_cx(g3, at(g3.graph, 1, 1)).empty());
  CHECK_FALSE(find_global_hole(g3).has_value());
  for (const auto& r : scan_holes(g3)) CHECK(r.contexts.empty());

  const auto fan = traced("fan9");
  CHECK(default_schedule(fan.graph).empty());
  const auto t = peel(fan, default_schedule(fan.graph));
  CHECK(t.steps.empty());
  CHECK(t.residual.basis.ids() == fan.basis.ids());
  CHECK(t.residual_feasible);

  const auto tutte = traced("tutte");
  CHECK(peel(tutte, default_schedule(tutte.graph)).steps.empty());
}

TEST_CASE("4x4 grid peel: one step, no C_k, feasible residual") {
  const auto bg = traced("grid4");
  const auto sched = default_schedule(bg.graph);
  CHECK(sched == std::vector<VertexId>{5, 6, 9, 10});
  const auto t = peel(bg, sched);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].begin == 5);
  CHECK(t.steps[0].removed_cx == std::vector<int>{1});  // smallest candidate
  CHECK(t.steps[0].removed_cxe.empty());
  CHECK_FALSE(t.steps[0].removed_ck.has_value());
  CHECK(t.residual_feasible);

  HoleContext center;
  center.x = 5;
  center.cx = {4};
  CHECK_FALSE(is_global_hole(bg, center));
}

TEST_CASE("enumerated C_k instance") {
  const auto bg = traced("hole_hamiltonian");
  const VertexIndex x = bg.graph.index_of_checked(7);
  const auto ctxs = hole_contexts(bg, x);
  REQUIRE(ctxs.size() == 1);
  const HoleContext& c = ctxs[0];
  CHECK(c.cx == std::vector<int>{2});
  CHECK(c.ck == 5);
  CHECK(c.ck_interior_witness == 6);
  CHECK(c.cxe.empty());
  CHECK(c.ce.empty());
  CHECK(c.shared_vertex_faces == std::vector<int>{0});

  // witness: the four cells around it are all present
  const VertexIndex w = bg.graph.index_of_checked(c.ck_interior_witness);
  CHECK(bg.basis.faces_on(w).size() == 4);
  // C_k has no edge of weight 1 in G - C_x
  const auto r = *remove_in_sequence(bg, c.cx);
  std::vector<int> cover(r.graph.edge_count(), 0);
  for (const Face& f : r.basis.faces) f.edges.for_each([&](EdgeId e) { ++cover[e]; });
  r.basis.faces[*r.basis.position_of(c.ck)].edges.for_each([&](EdgeId e) { CHECK(cover[e] == 2); });
}

TEST_CASE("global hole on the enumerated instance, though the graph is Hamiltonian") {
  const auto bg = traced("hole_hamiltonian");
  const auto hole = find_global_hole(bg);
  REQUIRE(hole.has_value());
  CHECK(hole->ck == 5);
  CHECK(is_global_hole(bg, *hole));
  // This is a counterexample to "global hole implies non-Hamiltonian".
  CHECK(hamilton_oracle(bg.graph).found.has_value());

  const auto nh = traced("hole_nonhamiltonian");
  REQUIRE(find_global_hole(nh).has_value());
  const auto o = hamilton_oracle(nh.graph);
  CHECK_FALSE(o.found.has_value());
  CHECK_FALSE(o.timed_out);
}

TEST_CASE("two-step peel replays deterministically") {
  const auto bg = traced("peel_two_steps");
  const std::vector<VertexId> sched = default_schedule(bg.graph);
  const auto a = peel(bg, sched);
  const auto b = peel(bg, sched);
  REQUIRE(a.steps.size() == 2);
  REQUIRE(b.steps.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.steps[i].begin == b.steps[i].begin);
    CHECK(a.steps[i].removed_cx == b.steps[i].removed_cx);
    CHECK(a.steps[i].removed_cxe == b.steps[i].removed_cxe);
    CHECK(a.steps[i].removed_ck == b.steps[i].removed_ck);
  }
  CHECK(a.steps[0].feasible_after);
  CHECK(a.steps[1].removed_ck.has_value());
  CHECK_FALSE(a.residual_feasible);
  CHECK(a.residual.basis.ids() == b.residual.basis.ids());
}

TEST_CASE("every peel step removes only faces that were removable") {
  for_each_polyomino_graph(8, [](const std::string&, const PlanarEmbedding& g) {
    const auto sched = default_schedule(g);
    if (sched.empty()) return;
    const auto bg = with_traced_faces(g);
    const auto t = peel(bg, sched);
    BasisGraph cur = bg;
    for (const PeelStep& s : t.steps) {
      std::vector<int> order = s.removed_cx;
      order.insert(order.end(), s.removed_cxe.begin(), s.removed_cxe.end());
      if (s.removed_ck) order.push_back(*s.removed_ck);
      auto next = remove_in_sequence(cur, order);
      REQUIRE(next.has_value());
      cur = std::move(*next);
      CHECK(is_feasible(equation_of(cur.basis, cur.graph)) == s.feasible_after);
    }
    CHECK(cur.basis.ids() == t.residual.basis.ids());
  });
}

TEST_CASE("local hole diagnostic runs inside the neighbourhood of C_k") {
  const auto bg = traced("hole_hamiltonian");
  CHECK(is_local_hole(bg, 5) == is_local_hole(bg, 5));
  CHECK_FALSE(is_local_hole(bg, 999));
  const auto reports = scan_holes(bg);
  for (const auto& r : reports) {
    CHECK(r.global.size() == r.contexts.size());
    CHECK(r.local.size() == r.contexts.size());
  }
}
