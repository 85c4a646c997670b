#include <doctest.h>

#include <random>

#include "pgg/generators.hpp"
#include "pgg/grinberg.hpp"
#include "pgg/oracle.hpp"
#include "support/brute.hpp"
#include "support/fixture.hpp"

using namespace pgg;

namespace {

std::vector<std::size_t> all_positions(const FaceBasis& b) {
  std::vector<std::size_t> p(b.size());
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("equation examples") {
  const auto sq = traced("square");
  const auto e1 = equation_of(sq.basis, sq.graph);
  CHECK(e1.face_lengths == std::vector<std::size_t>{4});
  CHECK(e1.target() == 2);

  const auto g3 = traced("grid3");
  const auto e3 = equation_of(g3.basis, g3.graph);
  CHECK(e3.face_lengths == std::vector<std::size_t>{4, 4, 4, 4});
  CHECK(e3.target() == 7);
  CHECK(format_equation(e3) == "4f4 - 2(f4 - 1) = 9");
}

TEST_CASE("equation text lists lengths longest first") {
  GrinbergEquation eq{{4, 10, 5, 10, 5, 4}, 25};
  CHECK(format_equation(eq) == "10f10 + 5f5 + 4f4 - 2(f10 + f5 + f4 - 1) = 25");
  CHECK(format_equation(GrinbergEquation{{25, 25, 25}, 46}) == "25f25 - 2(f25 - 1) = 46");
}

TEST_CASE("solver examples") {
  const auto dom = traced("domino");
  const auto parts = solve(equation_of(dom.basis, dom.graph));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].inside == std::vector<std::size_t>{0, 1});
  CHECK(parts[0].outside.empty());

  const auto g3 = traced("grid3");
  CHECK(solve(equation_of(g3.basis, g3.graph)).empty());
  CHECK_FALSE(is_feasible(equation_of(g3.basis, g3.graph)));
}

TEST_CASE("solver contract") {
  CHECK_THROWS_AS(solve(GrinbergEquation{{4}, 4}, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve(GrinbergEquation{{2, 4}, 4}), std::invalid_argument);
  CHECK(solve(GrinbergEquation{{}, 2}).size() == 1);  // empty inside set meets target 0
  CHECK(solve(GrinbergEquation{{}, 3}).empty());
  CHECK(solve(GrinbergEquation{{4, 4, 4}, 1}).empty());  // negative target
}

TEST_CASE("solver respects the limit and the lexicographic order") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    GrinbergEquation eq;
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < n; ++i) {
      eq.face_lengths.push_back(3 + rng() % 5);
      values.push_back(static_cast<std::int64_t>(eq.face_lengths.back()) - 2);
    }
    eq.order = 2 + rng() % 20;
    const auto expected = brute::subset_sums(values, eq.target());
    const std::size_t limit = 1 + rng() % 5;
    const auto got = solve(eq, limit);
    REQUIRE(got.size() == std::min(limit, expected.size()));
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].inside == expected[i]);
  }
}

TEST_CASE("face union bookkeeping") {
  const auto dom = traced("domino");
  const std::vector<std::size_t> both{0, 1};
  const auto r = audit_face_union(both, dom.basis, dom.graph);
  CHECK(r.beta_zero);
  CHECK(r.strict_beta_zero);
  CHECK(r.pair_sum == 2);
  CHECK(r.pair_sum_matches);
  CHECK(r.union_size == 6);

  const auto fig8 = traced("fig8");
  const auto f = audit_face_union(both, fig8.basis, fig8.graph);
  REQUIRE(f.pairwise_violations.size() == 1);
  CHECK(f.pairwise_violations[0].shared == 1);
  CHECK_FALSE(f.strict_beta_zero);

  const auto g3 = traced("grid3");
  const auto all = all_positions(g3.basis);
  const auto h = audit_face_union(all, g3.basis, g3.graph);
  REQUIRE(h.higher_order_violations.size() == 1);
  CHECK(h.higher_order_violations[0].faces.size() == 4);
  CHECK(h.higher_order_violations[0].vertex == g3.graph.id(at(g3.graph, 1, 1)));

  CHECK_THROWS_AS(audit_face_union(std::vector<std::size_t>{}, g3.basis, g3.graph), std::invalid_argument);
}

TEST_CASE("inclusion-exclusion identity holds for arbitrary subsets") {
  // |union| = S1 - S2[s=2] + beta, whatever the subset.
  for (const char* name : {"grid4", "twin9", "fan9", "hole_hamiltonian"}) {
    const auto bg = traced(name);
    const std::size_t n = bg.basis.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) subset.push_back(i);
      }
      const auto r = audit_face_union(subset, bg.basis, bg.graph);
      CHECK(static_cast<std::int64_t>(r.union_size) ==
            static_cast<std::int64_t>(r.vertex_sum) - static_cast<std::int64_t>(r.pair_sum) + r.beta);
    }
  }
}

TEST_CASE("Grinberg identity on known Hamilton cycles") {
  const auto sq = traced("square");
  const auto v1 = verify_grinberg_identity(sq.basis.faces[0].edges, sq.basis, sq.graph);
  CHECK(v1.inside_residual == 0);
  CHECK(v1.inside == std::vector<std::size_t>{0});

  const auto dom = traced("domino");
  const auto v2 = verify_grinberg_identity(dom.basis.faces[0].edges ^ dom.basis.faces[1].edges, dom.basis, dom.graph);
  CHECK(v2.inside_residual == 0);
  CHECK(v2.inside == std::vector<std::size_t>{0, 1});
  REQUIRE(v2.balance_residual.has_value());
  CHECK(*v2.balance_residual == 0);

  CHECK_THROWS_AS(verify_grinberg_identity(dom.basis.faces[0].edges, dom.basis, dom.graph), std::invalid_argument);
}

TEST_CASE("oracle cycles satisfy the identity and have beta = 0") {
  auto check = [](const PlanarEmbedding& g) {
    const auto bg = with_traced_faces(g);
    const auto o = hamilton_oracle(g);
    if (!o.found) return;
    const auto v = verify_grinberg_identity(*o.found, bg.basis, bg.graph);
    CHECK(v.inside_residual == 0);
    CHECK(v.balance_residual.value_or(0) == 0);
    const auto r = audit_face_union(v.inside, bg.basis, bg.graph);
    CHECK(r.beta_zero);
    CHECK(r.pair_sum_matches);
  };
  for (const char* name : {"square", "domino", "grid4", "fan9", "strip", "hole_hamiltonian"}) check(fixture(name));
  for_each_polyomino_graph(5, [&](const std::string&, const PlanarEmbedding& g) { check(g); });
}
