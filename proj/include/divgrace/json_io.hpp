#pragma once

#include <string>

#include <json.hpp>

#include "divgrace/decompose.hpp"
#include "divgrace/hairy.hpp"

namespace divgrace {

nlohmann::json graph_to_json(const OrderedBipartiteGraph& g);
OrderedBipartiteGraph graph_from_json(const nlohmann::json& j);

nlohmann::json labeling_to_json(const Labeling& l);
nlohmann::json labeling_to_json(const Labeling& l, int d);
nlohmann::json provenance_to_json(const Provenance& p);
Labeling labeling_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& r);
nlohmann::json report_to_json(const DecompositionReport& r);

nlohmann::json decomposition_to_json(const Decomposition& dec, bool include_developed);
Decomposition decomposition_from_json(const nlohmann::json& j);

// One canonical serialization (sorted keys, fixed indentation) so that
// export -> import -> export is byte-identical.
std::string canonical_dump(const nlohmann::json& j);

// Graphviz export; A and B on separate ranks; edge labels are the
// differences when a labeling is given.
std::string to_dot(const OrderedBipartiteGraph& g);
std::string to_dot(const Labeling& l);

} // namespace divgrace
