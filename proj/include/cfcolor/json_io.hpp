#pragma once

#include <string>

#include <json.hpp>

#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/planar.hpp"
#include "cfcolor/potential.hpp"
#include "cfcolor/refinement.hpp"

namespace cfcolor {

using Json = nlohmann::json;

// {"n": int, "edges": [[int,...],...]}, arrays ascending inside an edge
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

// {"lists": [[int,...],...]}
Json lists_to_json(const ColorListFamily& lists);
ColorListFamily lists_from_json(const Json& j);

// {"colors": [int,...]}
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

// {"points": [[x,y],...]}
Json points_to_json(const PointSet& p);
PointSet points_from_json(const Json& j);

// {"discs": [[cx,cy,r2],...]}
Json discs_to_json(const DiscFamily& d);
DiscFamily discs_from_json(const Json& j);

// {"n": int, "adj": [[int,...],...]}
Json graph_to_json(const PlanarGraph& g);
PlanarGraph graph_from_json(const Json& j);

// per iteration: {"t", "c", "Vc_size", "class_potentials", "chosen", "P"}
// with rationals rendered "p/q" and P the potential entering the iteration
Json trace_to_json(const PotentialTrace& trace);

Json witness_to_json(const PartitionWitness& w);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace cfcolor
