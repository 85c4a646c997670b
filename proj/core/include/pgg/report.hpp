#pragma once

#include <nlohmann/json.hpp>

#include "pgg/compare.hpp"
#include "pgg/decide.hpp"
#include "pgg/faces.hpp"
#include "pgg/grinberg.hpp"
#include "pgg/holes.hpp"
#include "pgg/oracle.hpp"
#include "pgg/structure.hpp"
#include "pgg/subbases.hpp"

// JSON views of the analysis results. Keys are sorted, so dumps are stable.
namespace pgg::report {

using nlohmann::json;

json face_json(const Face& f, const PlanarEmbedding& g);
json classification(const BasisGraph& bg);
json claw_json(const ClawReport& c);
json equation_json(const GrinbergEquation& eq);
json partition_json(const GrinbergPartition& p, const FaceBasis& basis);
json hole_context_json(const HoleContext& ctx);
json peel_json(const PeelTrace& t);
json vertex_holes_json(const VertexHoleReport& r);
json verdict_json(const Verdict& v, const PlanarEmbedding& g);
json decomposition_json(const SubbasisDecomposition& d);
json reduced_json(const ReducedGraph& r);
json oracle_json(const OracleResult& r, const PlanarEmbedding& g);
json agreement_json(const AgreementReport& r);

/// Edge list as [[u, v], ...] in vertex ids.
json edges_json(const EdgeSet& s, const PlanarEmbedding& g);

}  // namespace pgg::report
