// pgg: command line front end for the polygonal grid graph toolkit.
#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "pgg/compare.hpp"
#include "pgg/decide.hpp"
#include "pgg/error.hpp"
#include "pgg/generators.hpp"
#include "pgg/report.hpp"
#include "pgg/subbases.hpp"

namespace {

constexpr int kInputErrorExit = 3;

using pgg::report::json;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + std::to_string(ids[i]);
  return s + "}";
}

std::set<std::pair<int, int>> parse_holes(const std::string& spec) {
  std::set<std::pair<int, int>> holes;
  std::stringstream all(spec);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream one(item);
    int r = 0, c = 0;
    char comma = 0;
    if (!(one >> r >> comma >> c) || comma != ',') throw pgg::InputError("bad hole \"" + item + "\", expected r,c");
    std::string rest;
    if (one >> rest) throw pgg::InputError("bad hole \"" + item + "\", expected r,c");
    holes.insert({r, c});
  }
  return holes;
}

int run_classify(const std::string& file, bool as_json) {
  const auto bg = pgg::with_traced_faces(pgg::load_pgg(file));
  const json j = pgg::report::classification(bg);
  if (as_json) {
    print_json(j);
    return 0;
  }
  std::cout << "graph " << j["graph"].get<std::string>() << ": |V| = " << j["order"] << ", |E| = " << j["size"]
            << ", faces = " << bg.basis.size() << '\n';
  for (const auto& f : j["faces"]) std::cout << "  face " << f["id"] << " length " << f["length"] << " " << f["vertices"] << '\n';
  for (const auto& v : j["vertices"]) {
    std::cout << "  vertex " << v["id"] << " deg " << v["degree"] << " " << v["class"].get<std::string>() << " on "
              << v["faces"] << '\n';
  }
  for (const auto& c : j["claws"]) {
    std::cout << "  claw(d2) at " << c["vertex"] << ": |E| = " << c["incident"] << ", |d2| = " << c["d2"] << " ("
              << c["case"].get<std::string>() << ")\n";
  }
  return 0;
}

int run_grinberg(const std::string& file, bool all, std::size_t limit, bool as_json) {
  const auto bg = pgg::with_traced_faces(pgg::load_pgg(file));
  const auto eq = pgg::equation_of(bg.basis, bg.graph);
  const auto parts = pgg::solve(eq, all ? limit : 1);
  json j = pgg::report::equation_json(eq);
  j["feasible"] = !parts.empty();
  json ps = json::array();
  for (const auto& p : parts) ps.push_back(pgg::report::partition_json(p, bg.basis));
  j["partitions"] = ps;
  if (as_json) {
    print_json(j);
  } else {
    std::cout << pgg::format_equation(eq) << '\n' << (parts.empty() ? "infeasible" : "feasible") << '\n';
    for (const auto& p : ps) std::cout << "  inside " << p["inside"] << "  outside " << p["outside"] << '\n';
  }
  return 0;
}

int run_holes(const std::string& file, std::size_t max_cx, bool as_json) {
  const auto bg = pgg::with_traced_faces(pgg::load_pgg(file));
  const auto reports = pgg::scan_holes(bg, {max_cx});
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(pgg::report::vertex_holes_json(r));
  if (as_json) {
    print_json({{"graph", bg.graph.name()}, {"vertices", arr}});
    return 0;
  }
  if (reports.empty()) std::cout << "no vertex of degree >= 4\n";
  for (const auto& r : reports) {
    std::cout << "vertex " << r.x << ": " << r.cx_candidates.size() << " C_x candidate(s)";
    for (const auto& cx : r.cx_candidates) std::cout << ' ' << join(cx);
    std::cout << '\n';
    for (std::size_t i = 0; i < r.contexts.size(); ++i) {
      const auto& c = r.contexts[i];
      std::cout << "  C_x " << join(c.cx) << " C_k " << c.ck << " (interior " << c.ck_interior_witness << ") C_xe "
                << join(c.cxe) << " C_e " << join(c.ce) << " C_v " << join(c.shared_vertex_faces) << ": "
                << (r.global[i] ? "global hole" : "not a global hole") << (r.local[i] ? ", local hole" : "") << '\n';
    }
  }
  return 0;
}

int run_decide(const std::string& file, std::size_t limit, bool lenient, bool as_json) {
  const auto g = pgg::load_pgg(file);
  pgg::DecideOptions opts;
  opts.limit = limit;
  opts.claw = lenient ? pgg::ClawMode::Lenient : pgg::ClawMode::Strict;
  const auto v = pgg::decide(g, opts);
  if (as_json) {
    print_json(pgg::report::verdict_json(v, g));
  } else {
    std::cout << pgg::to_string(v.tag) << '\n' << v.details << '\n';
    if (v.certificate) std::cout << "certificate " << pgg::report::edges_json(*v.certificate, g).dump() << '\n';
  }
  return pgg::exit_code(v);
}

int run_subbases(const std::string& file, bool reduce, bool as_json) {
  const auto bg = pgg::with_traced_faces(pgg::load_pgg(file));
  const auto d = pgg::decompose(bg);
  json j{{"graph", bg.graph.name()}, {"decomposition", pgg::report::decomposition_json(d)}};
  std::optional<pgg::ReducedGraph> r;
  std::optional<pgg::Verdict> v;
  if (reduce) {
    r = pgg::reduce_to_gg(bg, d);
    v = pgg::decide_reduced(*r);
    j["reduced"] = pgg::report::reduced_json(*r);
    j["reduced_verdict"] = {{"verdict", pgg::to_string(v->tag)}, {"details", v->details}};
    json eqs = json::array();
    for (const auto& rec : d.subgraphs) {
      std::vector<std::size_t> pos;
      for (int id : rec.faces()) pos.push_back(*bg.basis.position_of(id));
      const auto sub = pgg::extract_faces(bg, pos, "g");
      const auto eq = pgg::equation_of(sub.basis, sub.graph);
      eqs.push_back({{"text", pgg::format_equation(eq)}, {"feasible", pgg::is_feasible(eq)}});
    }
    j["subbasis_equations"] = eqs;
  }
  if (as_json) {
    print_json(j);
    return v ? pgg::exit_code(*v) : 0;
  }
  std::cout << "boundary-element set " << join(d.boundary_element_set) << '\n' << "|g| = " << d.g_count() << '\n';
  for (std::size_t i = 0; i < d.subgraphs.size(); ++i) {
    const auto& s = d.subgraphs[i];
    std::cout << "  g" << i << ": minimal set " << join(s.minimal_set) << ", interior faces " << join(s.interior_faces)
              << ", order " << s.order() << '\n';
  }
  std::cout << "coset " << join(d.coset) << '\n';
  for (const auto& n : d.notes) std::cout << "note: " << n << '\n';
  if (r) {
    for (std::size_t i = 0; i < j["subbasis_equations"].size(); ++i) {
      const auto& e = j["subbasis_equations"][i];
      std::cout << "  g" << i << ": " << e["text"].get<std::string>() << " ("
                << (e["feasible"].get<bool>() ? "feasible" : "infeasible") << ")\n";
    }
    std::cout << "reduced: " << pgg::format_equation(r->equation) << " ("
              << (pgg::is_feasible(r->equation) ? "feasible" : "infeasible") << ")\n";
    for (const auto& issue : r->issues) std::cout << "issue: " << issue << '\n';
    std::cout << pgg::to_string(v->tag) << '\n' << v->details << '\n';
    return pgg::exit_code(*v);
  }
  return 0;
}

int run_oracle(const std::string& file, std::uint64_t budget, bool as_json) {
  const auto g = pgg::load_pgg(file);
  const auto r = pgg::hamilton_oracle(g, budget);
  if (as_json) {
    print_json(pgg::report::oracle_json(r, g));
  } else {
    std::cout << (r.found ? "found" : r.timed_out ? "timed out" : "no Hamilton cycle") << " after " << r.nodes_explored
              << " nodes\n";
    if (r.found) std::cout << pgg::report::edges_json(*r.found, g).dump() << '\n';
  }
  return r.found ? 0 : r.timed_out ? 2 : 1;
}

int run_gen_grid(std::size_t m, std::size_t n, const std::string& holes) {
  std::cout << pgg::to_pgg(pgg::gen_grid(m, n, parse_holes(holes)));
  return 0;
}

int run_compare(std::size_t k, const std::vector<std::string>& files, std::uint64_t budget, std::size_t limit,
                bool lenient, const std::string& out, const std::string& save) {
  std::vector<pgg::NamedGraph> graphs;
  if (k > 0) {
    pgg::for_each_polyomino_graph(k, [&](const std::string& id, const pgg::PlanarEmbedding& g) {
      graphs.push_back({id, g});
    });
  }
  for (const auto& f : files) graphs.push_back({std::filesystem::path(f).stem().string(), pgg::load_pgg(f)});
  pgg::CompareOptions opts;
  opts.budget = budget;
  opts.decide.limit = limit;
  opts.decide.claw = lenient ? pgg::ClawMode::Lenient : pgg::ClawMode::Strict;
  if (!save.empty()) opts.save_candidates = save;
  const auto report = pgg::compare(graphs, opts);
  const std::string text = pgg::report::agreement_json(report).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw pgg::InputError("cannot write " + out);
    o << text;
  }
  const auto& t = report.totals;
  std::cerr << t.graphs << " graphs: " << t.agree << " agree, " << t.disagree << " disagree, " << t.inconclusive
            << " inconclusive (" << t.oracle_timeouts << " oracle timeouts), " << t.hard_violations
            << " hard violations, " << report.candidates.size() << " candidates\n";
  return t.hard_violations ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity analysis of polygonal grid graphs"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  bool all = false;
  bool lenient = false;
  bool reduce = false;
  std::size_t limit = pgg::kDefaultSolveLimit;
  std::size_t max_cx = 3;
  std::uint64_t budget = pgg::kDefaultOracleBudget;

  auto* classify = app.add_subcommand("classify", "faces, edge weights, vertex classes and claws");
  classify->add_option("file", file, ".pgg input")->required();
  classify->add_flag("--json", as_json);

  auto* grinberg = app.add_subcommand("grinberg", "Grinberg equation and its 0/1 solutions");
  grinberg->add_option("file", file)->required();
  grinberg->add_flag("--all", all, "list solutions up to --limit");
  grinberg->add_option("--limit", limit)->check(CLI::PositiveNumber);
  grinberg->add_flag("--json", as_json);

  auto* holes = app.add_subcommand("holes", "hole contexts per vertex of degree >= 4");
  holes->add_option("file", file)->required();
  holes->add_option("--max-cx", max_cx)->check(CLI::PositiveNumber);
  holes->add_flag("--json", as_json);

  auto* decide = app.add_subcommand("decide", "Hamiltonicity verdict (exit 0/1/2, 3 on input error)");
  decide->add_option("file", file)->required();
  decide->add_option("--limit", limit, "partitions tried for a certificate")->check(CLI::PositiveNumber);
  decide->add_flag("--lenient-claw", lenient, "only Case II claws disqualify");
  decide->add_flag("--json", as_json);

  auto* subbases = app.add_subcommand("subbases", "independent subbases and the reduced graph");
  subbases->add_option("file", file)->required();
  subbases->add_flag("--reduce", reduce);
  subbases->add_flag("--json", as_json);

  auto* oracle = app.add_subcommand("oracle", "exact Hamilton cycle search");
  oracle->add_option("file", file)->required();
  oracle->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("gen", "fixture generators");
  gen->require_subcommand(1);
  auto* grid = gen->add_subcommand("grid", "M x N vertex grid with optional holes");
  std::size_t m = 0, n = 0;
  std::string hole_spec;
  grid->add_option("M", m, "vertex rows")->required();
  grid->add_option("N", n, "vertex columns")->required();
  grid->add_option("--holes", hole_spec, "cells \"r,c;r,c\"");

  auto* cmp = app.add_subcommand("compare", "criterion vs oracle agreement report");
  std::size_t k = 0;
  std::vector<std::string> files;
  std::string out, save;
  cmp->add_option("--polyominoes", k, "all fixed polyominoes up to K cells")->check(CLI::Range(0, 10));
  cmp->add_option("files", files, "additional .pgg inputs");
  cmp->add_option("--budget", budget)->check(CLI::PositiveNumber);
  cmp->add_option("--limit", limit)->check(CLI::PositiveNumber);
  cmp->add_flag("--lenient-claw", lenient);
  cmp->add_option("--out", out, "write the JSON report here instead of stdout");
  cmp->add_option("--save-candidates", save, "directory for disagreement .pgg files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputErrorExit;
  }

  try {
    if (*classify) return run_classify(file, as_json);
    if (*grinberg) return run_grinberg(file, all, limit, as_json);
    if (*holes) return run_holes(file, max_cx, as_json);
    if (*decide) return run_decide(file, limit, lenient, as_json);
    if (*subbases) return run_subbases(file, reduce, as_json);
    if (*oracle) return run_oracle(file, budget, as_json);
    if (*grid) return run_gen_grid(m, n, hole_spec);
    if (*cmp) return run_compare(k, files, budget, limit, lenient, out, save);
  } catch (const pgg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  }
  return 0;
}
