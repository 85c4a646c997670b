#include "pgg/holes.hpp"

#include <algorithm>
#include <set>

#include "pgg/grinberg.hpp"
#include "pgg/structure.hpp"

namespace pgg {

namespace {

bool feasible(const BasisGraph& bg) { return is_feasible(equation_of(bg.basis, bg.graph)); }

std::vector<int> face_ids_on(const BasisGraph& bg, VertexIndex x) {
  std::vector<int> ids;
  for (std::size_t p : bg.basis.faces_on(x)) ids.push_back(bg.basis.faces[p].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Removal used throughout the hole search: removable and keeps the graph connected.
std::optional<BasisGraph> try_remove(const BasisGraph& bg, int id) {
  const auto pos = bg.basis.position_of(id);
  if (!pos || !is_removable(bg, *pos)) return std::nullopt;
  BasisGraph next = remove_face_forced(bg, *pos);
  if (!next.graph.is_connected()) return std::nullopt;
  return next;
}

bool removable_here(const BasisGraph& bg, int id) { return try_remove(bg, id).has_value(); }

void combinations(const std::vector<int>& pool, std::size_t k, std::size_t from, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    combinations(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string id_list(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

// Removes what it can of `ids`, logging the rest.
BasisGraph remove_what_possible(BasisGraph bg, const std::vector<int>& ids, std::vector<int>& removed,
                                std::vector<std::string>& log, VertexId at) {
  for (int id : ids) {
    if (auto next = try_remove(bg, id)) {
      bg = std::move(*next);
      removed.push_back(id);
    } else {
      log.push_back("at vertex " + std::to_string(at) + ": face " + std::to_string(id) +
                    " skipped (not removable or disconnecting)");
    }
  }
  return bg;
}

}  // namespace

std::optional<BasisGraph> remove_in_sequence(const BasisGraph& bg, std::span<const int> face_ids) {
  std::optional<BasisGraph> cur = bg;
  for (int id : face_ids) {
    cur = try_remove(*cur, id);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::vector<std::vector<int>> candidate_cx(const BasisGraph& bg, VertexIndex x, std::size_t max_size) {
  std::vector<std::vector<int>> out;
  if (bg.graph.degree(x) < 4) return out;
  const std::vector<int> pool = face_ids_on(bg, x);
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  for (std::size_t k = 1; k <= std::min(max_size, pool.size()); ++k) combinations(pool, k, 0, cur, subsets);
  std::sort(subsets.begin(), subsets.end());

  for (auto& s : subsets) {
    const auto residual = remove_in_sequence(bg, s);
    if (!residual || residual->graph.degree(x) != 4) continue;
    const EdgeWeights w = edge_weights(residual->basis, residual->graph);
    if (classify_vertex(x, residual->basis, w, residual->graph).tag != VertexClass::Tag::Boundary) continue;
    if (!feasible(*residual)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CkCandidate> find_ck(const BasisGraph& residual, VertexIndex x) {
  std::vector<CkCandidate> out;
  const EdgeWeights w = edge_weights(residual.basis, residual.graph);
  const auto classes = classify_vertices(residual.basis, w, residual.graph);
  for (int id : face_ids_on(residual, x)) {
    const Face& f = residual.basis.faces[*residual.basis.position_of(id)];
    bool light = false;
    f.edges.for_each([&](EdgeId e) { light = light || w[e] == 1; });
    if (light) continue;
    const auto it = std::find_if(f.vertices.begin(), f.vertices.end(),
                                 [&](VertexIndex v) { return classes[v].tag == VertexClass::Tag::Interior; });
    if (it == f.vertices.end()) continue;
    if (!removable_here(residual, id)) continue;
    out.push_back({id, residual.graph.id(*it)});
  }
  return out;
}

HoleContext make_context(const BasisGraph& residual, VertexIndex x, std::vector<int> cx, const CkCandidate& ck) {
  HoleContext ctx;
  ctx.x = residual.graph.id(x);
  ctx.cx = std::move(cx);
  ctx.ck = ck.face;
  ctx.ck_interior_witness = ck.interior_witness;
  const Face& k = residual.basis.faces[*residual.basis.position_of(ck.face)];
  const std::set<VertexIndex> kv(k.vertices.begin(), k.vertices.end());

  for (const Face& f : residual.basis.faces) {
    if (f.id == ck.face) continue;
    std::vector<VertexIndex> common;
    for (VertexIndex v : f.vertices) {
      if (kv.count(v)) common.push_back(v);
    }
    if (common.empty()) continue;
    if (f.edges.intersects(k.edges)) {
      if (removable_here(residual, f.id)) ctx.ce.push_back(f.id);
    } else {
      ctx.shared_vertex_faces.push_back(f.id);
      if (common.size() == 1 && common[0] == x && removable_here(residual, f.id)) ctx.cxe.push_back(f.id);
    }
  }
  std::sort(ctx.ce.begin(), ctx.ce.end());
  std::sort(ctx.cxe.begin(), ctx.cxe.end());
  std::sort(ctx.shared_vertex_faces.begin(), ctx.shared_vertex_faces.end());
  return ctx;
}

std::vector<HoleContext> hole_contexts(const BasisGraph& bg, VertexIndex x, const HoleSearchOptions& opts) {
  std::vector<HoleContext> out;
  for (auto& cx : candidate_cx(bg, x, opts.max_cx)) {
    const BasisGraph residual = *remove_in_sequence(bg, cx);
    for (const CkCandidate& ck : find_ck(residual, x)) out.push_back(make_context(residual, x, cx, ck));
  }
  return out;
}

std::vector<VertexId> default_schedule(const PlanarEmbedding& g) {
  std::vector<VertexId> ids;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 4) ids.push_back(g.id(v));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

PeelTrace peel(const BasisGraph& bg, std::span<const VertexId> schedule, const std::optional<HoleContext>& start,
               const HoleSearchOptions& opts) {
  PeelTrace trace{{}, {}, bg, false};
  BasisGraph& cur = trace.residual;

  // Step 0: C_x and C_xe at the beginning vertex.
  std::optional<HoleContext> first = start;
  if (!first) {
    for (VertexId id : schedule) {
      const VertexIndex x = bg.graph.index_of_checked(id);
      const auto cands = candidate_cx(bg, x, opts.max_cx);
      if (cands.empty()) continue;
      const BasisGraph residual = *remove_in_sequence(bg, cands.front());
      const auto cks = find_ck(residual, x);
      if (cks.empty()) {
        first = HoleContext{};
        first->x = id;
        first->cx = cands.front();
      } else {
        first = make_context(residual, x, cands.front(), cks.front());
      }
      break;
    }
  }
  if (!first) {
    trace.residual_feasible = feasible(cur);
    return trace;
  }

  PeelStep step0;
  step0.begin = first->x;
  if (auto r = remove_in_sequence(cur, first->cx)) {
    cur = std::move(*r);
    step0.removed_cx = first->cx;
  } else {
    trace.log.push_back("at vertex " + std::to_string(first->x) + ": C_x " + id_list(first->cx) +
                        " cannot be removed; starting from G");
  }
  cur = remove_what_possible(std::move(cur), first->cxe, step0.removed_cxe, trace.log, first->x);
  step0.feasible_after = feasible(cur);
  trace.steps.push_back(std::move(step0));
  if (!trace.steps.back().feasible_after) return trace;

  // Later steps: peel C_k at every scheduled vertex until nothing changes.
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId id : schedule) {
      const auto xi = cur.graph.index_of(id);
      if (!xi) continue;
      const VertexIndex x = *xi;
      std::vector<std::vector<int>> options{{}};
      for (auto& c : candidate_cx(cur, x, opts.max_cx)) options.push_back(std::move(c));

      for (const auto& cx : options) {
        const auto after_cx = remove_in_sequence(cur, cx);
        if (!after_cx) continue;
        const auto cks = find_ck(*after_cx, x);
        if (cks.empty()) continue;
        const HoleContext ctx = make_context(*after_cx, x, cx, cks.front());

        PeelStep s;
        s.begin = id;
        s.removed_cx = cx;
        BasisGraph next = remove_what_possible(*after_cx, ctx.cxe, s.removed_cxe, trace.log, id);
        auto without_k = try_remove(next, ctx.ck);
        if (!without_k) {
          trace.log.push_back("at vertex " + std::to_string(id) + ": C_k " + std::to_string(ctx.ck) +
                              " no longer removable after C_xe");
          continue;
        }
        s.removed_ck = ctx.ck;
        cur = std::move(*without_k);
        s.feasible_after = feasible(cur);
        trace.steps.push_back(std::move(s));
        progress = true;
        break;
      }
      if (progress && !trace.steps.back().feasible_after) {
        trace.residual_feasible = false;
        return trace;
      }
    }
  }
  trace.residual_feasible = feasible(cur);
  return trace;
}

bool is_global_hole(const BasisGraph& bg, const HoleContext& ctx, const HoleSearchOptions& opts) {
  const auto schedule = default_schedule(bg.graph);
  return !peel(bg, schedule, ctx, opts).residual_feasible;
}

bool is_local_hole(const BasisGraph& bg, int ck, const HoleSearchOptions& opts) {
  const auto kpos = bg.basis.position_of(ck);
  if (!kpos) return false;
  const Face& k = bg.basis.faces[*kpos];
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < bg.basis.faces.size(); ++p) {
    const Face& f = bg.basis.faces[p];
    const bool touches = std::any_of(f.vertices.begin(), f.vertices.end(), [&](VertexIndex v) { return k.has_vertex(v); });
    if (touches) positions.push_back(p);
  }
  const BasisGraph sub = extract_faces(bg, positions, bg.graph.name() + "-local");
  for (VertexIndex kv : k.vertices) {
    const VertexIndex y = sub.graph.index_of_checked(bg.graph.id(kv));
    if (sub.graph.degree(y) < 4) continue;
    for (const HoleContext& ctx : hole_contexts(sub, y, opts)) {
      if (ctx.ck == ck && is_global_hole(sub, ctx, opts)) return true;
    }
  }
  return false;
}

std::vector<VertexHoleReport> scan_holes(const BasisGraph& bg, const HoleSearchOptions& opts) {
  std::vector<VertexHoleReport> out;
  for (VertexId id : default_schedule(bg.graph)) {
    const VertexIndex x = bg.graph.index_of_checked(id);
    VertexHoleReport r;
    r.x = id;
    r.cx_candidates = candidate_cx(bg, x, opts.max_cx);
    for (const auto& cx : r.cx_candidates) {
      const BasisGraph residual = *remove_in_sequence(bg, cx);
      for (const CkCandidate& ck : find_ck(residual, x)) r.contexts.push_back(make_context(residual, x, cx, ck));
    }
    for (const HoleContext& ctx : r.contexts) {
      r.global.push_back(is_global_hole(bg, ctx, opts));
      r.local.push_back(is_local_hole(bg, ctx.ck, opts));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<HoleContext> find_global_hole(const BasisGraph& bg, const HoleSearchOptions& opts) {
  for (VertexId id : default_schedule(bg.graph)) {
    const VertexIndex x = bg.graph.index_of_checked(id);
    for (const HoleContext& ctx : hole_contexts(bg, x, opts)) {
      if (is_global_hole(bg, ctx, opts)) return ctx;
    }
  }
  return std::nullopt;
}

}  // namespace pgg
