#pragma once

#include <string>

#include "json.hpp"

#include "cpnum/competition.hpp"
#include "cpnum/graph.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

// Wire formats. All serializers emit sorted, deterministic JSON.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"n": int, "added": int, "arcs": [[u,v],...], "trail": [string,...]}
nlohmann::json witness_to_json(const CpWitness& w);
CpWitness witness_from_json(const Graph& base, const nlohmann::json& j);

// {"ordering": [...], "cliques": [[...],...]}
nlohmann::json lm_cover_to_json(const LMCover& l);
LMCover lm_cover_from_json(const nlohmann::json& j);

// {"host": graph, "phi": [...], "trees": [{"vertices": [...], "edges": [[..],..]},...]}
nlohmann::json reconstruction_to_json(const Reconstruction& r);
Reconstruction reconstruction_from_json(const nlohmann::json& j);

// Models carry a "kind" discriminator: circular, strip, strip-composition.
nlohmann::json circular_model_to_json(const CircularIntervalModel& m);
CircularIntervalModel circular_model_from_json(const nlohmann::json& j);
nlohmann::json strip_model_to_json(const StripModel& m);
StripModel strip_model_from_json(const nlohmann::json& j);
nlohmann::json strip_composition_to_json(const StripComposition& c);
StripComposition strip_composition_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cpnum
