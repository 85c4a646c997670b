#include <doctest.h>

#include "pgg/cycles.hpp"
#include "pgg/decide.hpp"
#include "pgg/generators.hpp"
#include "pgg/oracle.hpp"
#include "pgg/report.hpp"
#include "support/brute.hpp"
#include "support/fixture.hpp"

using namespace pgg;

TEST_CASE("desk fixture verdicts") {
  const auto sq = traced("square");
  const auto v1 = decide(sq);
  CHECK(v1.tag == Verdict::Tag::Hamiltonian);
  REQUIRE(v1.certificate.has_value());
  CHECK(*v1.certificate == sq.basis.faces[0].edges);
  CHECK(exit_code(v1) == 0);

  const auto v2 = decide(fixture("grid3"));
  CHECK(v2.tag == Verdict::Tag::NonHamiltonianNoSolution);
  CHECK(exit_code(v2) == 1);
  CHECK_FALSE(hamilton_oracle(fixture("grid3")).found.has_value());

  const auto v3 = decide(fixture("fig8"));
  CHECK(v3.tag == Verdict::Tag::NonHamiltonianClaw);
  REQUIRE(v3.claw.has_value());
  CHECK(v3.claw->severity == ClawReport::Severity::CaseII);

  const auto g4 = fixture("grid4");
  const auto v4 = decide(g4);
  CHECK(v4.tag == Verdict::Tag::Hamiltonian);
  REQUIRE(v4.certificate.has_value());
  CHECK(brute::is_simple_cycle(*v4.certificate, g4));
  CHECK(v4.certificate->size() == 16);
}

TEST_CASE("claw handling under both modes") {
  const auto dom = fixture("domino");
  const auto strict = decide(dom);
  CHECK(strict.tag == Verdict::Tag::Hamiltonian);  // certificate still found
  CHECK_FALSE(strict.criterion_applies);

  DecideOptions lenient;
  lenient.claw = ClawMode::Lenient;
  const auto v = decide(dom, lenient);
  CHECK(v.tag == Verdict::Tag::Hamiltonian);
  CHECK(v.criterion_applies);

  // Hole search only runs when the claw condition holds.
  const auto hh = fixture("hole_hamiltonian");
  CHECK(decide(hh).tag == Verdict::Tag::Hamiltonian);
  const auto lh = decide(hh, lenient);
  CHECK(lh.tag == Verdict::Tag::NonHamiltonianGlobalHole);
  REQUIRE(lh.hole.has_value());
  CHECK(lh.hole->ck == 5);
}

TEST_CASE("Tutte graph is not settled by decide on its own") {
  const auto v = decide(fixture("tutte"));
  CHECK(v.tag == Verdict::Tag::CriterionUnverified);
  CHECK(v.criterion_applies);
  CHECK(v.criterion_claims_hamiltonian());
  CHECK(exit_code(v) == 2);
}

TEST_CASE("limit bounds the partitions tried") {
  DecideOptions opts;
  opts.limit = 1;
  const auto v = decide(fixture("tutte"), opts);
  CHECK(v.partitions_tried <= 1);
  CHECK(v.tag == Verdict::Tag::CriterionUnverified);
}

TEST_CASE("verdict JSON is byte-identical across runs") {
  for (const char* name : {"grid4", "tutte", "hole_hamiltonian", "fig8"}) {
    const auto g = fixture(name);
    DecideOptions lenient;
    lenient.claw = ClawMode::Lenient;
    CHECK(report::verdict_json(decide(g), g).dump() == report::verdict_json(decide(g), g).dump());
    CHECK(report::verdict_json(decide(g, lenient), g).dump() == report::verdict_json(decide(g, lenient), g).dump());
  }
}

TEST_CASE("certificates and NoSolution verdicts against the oracle") {
  std::size_t certified = 0, infeasible = 0;
  auto check = [&](const PlanarEmbedding& g) {
    const auto v = decide(g);
    const auto o = hamilton_oracle(g);
    REQUIRE_FALSE(o.timed_out);
    if (v.tag == Verdict::Tag::Hamiltonian) {
      ++certified;
      REQUIRE(v.certificate.has_value());
      CHECK(brute::is_simple_cycle(*v.certificate, g));
      CHECK(v.certificate->size() == g.vertex_count());
      CHECK(o.found.has_value());
    }
    if (v.tag == Verdict::Tag::NonHamiltonianNoSolution) {
      ++infeasible;
      CHECK_FALSE(o.found.has_value());
    }
  };
  for_each_polyomino_graph(7, [&](const std::string&, const PlanarEmbedding& g) { check(g); });
  for (const auto& g : brute::random_holed_grids(30, 3)) check(g);
  CHECK(certified > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("hole-free, claw-free, feasible polyominoes: does a certificate exist?") {
  // Recorded rather than asserted: the claim under audit says every such graph is Hamiltonian.
  std::size_t total = 0, with_certificate = 0, oracle_cycle = 0;
  std::vector<std::string> without;
  for_each_polyomino_graph(8, [&](const std::string& id, const PlanarEmbedding& g) {
    const auto bg = with_traced_faces(g);
    if (!claw_free(claw_d2_scan(g), ClawMode::Strict)) return;
    if (!is_feasible(equation_of(bg.basis, bg.graph))) return;
    bool any_ck = false;
    for (VertexId x : default_schedule(g)) any_ck = any_ck || !hole_contexts(bg, g.index_of_checked(x)).empty();
    if (any_ck) return;
    ++total;
    const auto v = decide(bg);
    if (v.tag == Verdict::Tag::Hamiltonian) ++with_certificate;
    if (hamilton_oracle(g).found) ++oracle_cycle;
    if (v.tag != Verdict::Tag::Hamiltonian) without.push_back(id);
  });
  MESSAGE(total << " graphs, " << with_certificate << " certified, " << oracle_cycle << " Hamiltonian by oracle");
  CHECK(with_certificate <= oracle_cycle);
  CHECK(total > 0);
}
