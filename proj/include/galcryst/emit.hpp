#pragma once

// JSON, DOT and SVG renderings. Key order in JSON objects is fixed, so the
// output is byte-for-byte reproducible.

#include <string>

#include <json.hpp>

#include "galcryst/affine_roots.hpp"
#include "galcryst/crystal_graph.hpp"
#include "galcryst/mv_map.hpp"

namespace galcryst {

using Json = nlohmann::ordered_json;

Json graph_to_json(const CrystalGraph& g);
std::string graph_to_dot(const CrystalGraph& g);
std::string graph_to_text(const CrystalGraph& g);

Json label_to_json(const MVLabel& z);
Json crossings_to_json(const CrossingSets& sets);
Json decomposition_to_json(const Decomposition& d);
Json path_to_json(const Gallery& g);

// Rank 3 only: eps_1, eps_2, eps_3 are drawn as unit vectors at 60, 180 and
// 300 degrees; the dominant chamber is shaded.
std::string path_to_svg(const Gallery& g);

}  // namespace galcryst
