#pragma once

// JSON formats for complexes, pieces, planes, embeddings, placements and heights.
// Every reader raises Error(ParseError) on malformed input.

#include <string>

#include <json.hpp>

#include "sparsemap/placement.hpp"
#include "sparsemap/verifier.hpp"
#include "sparsemap/width.hpp"

namespace sparsemap {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// {"d", "V", "simplices"}; only maximal simplices are written.
json complex_to_json(const SimplicialComplex& Y);
SimplicialComplex complex_from_json(const json& j);

json piece_to_json(const GeomPiece& p);
GeomPiece piece_from_json(const json& j);

json plane_to_json(const MPlane& h);
MPlane plane_from_json(const json& j, int n);

json box_to_json(const BoundingBox& b);
BoundingBox box_from_json(const json& j);

json certificate_to_json(const SparsityCertificate& c);
SparsityCertificate certificate_from_json(const json& j);

json level_log_to_json(const LevelLog& l);
LevelLog level_log_from_json(const json& j);

/// "0,1" style key of a simplex.
std::string simplex_key(const Simplex& s);
Simplex simplex_from_key(const std::string& key);

/// Embedding JSON, with the certificate attached when given.
json map_to_json(const LatticeMap& map, const SparsityCertificate* certificate = nullptr);
LatticeMap map_from_json(const json& j);

json placement_to_json(const VertexPlacement& p);
VertexPlacement placement_from_json(const json& j);

/// {"heights": {"v": [num, den]}}
json heights_to_json(const HeightFunction& h);
HeightFunction heights_from_json(const json& j, int vertex_count);

json width_report_to_json(const WidthReport& r);

}  // namespace sparsemap
