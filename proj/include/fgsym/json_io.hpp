#pragma once

#include <string>

#include "fgsym/colour_passing.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

// Factor-graph file format (UTF-8 JSON):
//   {
//     "variables": [{"name": ..., "range": [labels...], "evidence": label|null}],
//     "factors":   [{"name": ..., "args": [variable names], "table": [decimal strings]}]
//   }
// Tables are row-major with the last argument varying fastest; potentials are
// decimal strings so values stay exact across a round trip.
FactorGraph factor_graph_from_json(const std::string& text);
FactorGraph load_factor_graph(const std::string& path);
std::string factor_graph_to_json(const FactorGraph& g);
void save_factor_graph(const FactorGraph& g, const std::string& path);

// {"variable_groups": [[names...]], "factor_groups": [[names...]]},
// groups and members sorted lexicographically.
std::string grouping_to_json(const Grouping& g);

} // namespace fgsym
