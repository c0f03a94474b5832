#pragma once

#include <dhenum/types.hpp>

#include <string>
#include <string_view>

namespace dhenum {

// Instance documents look like
//   {"n": 3, "d_plus": [1,0,0], "d_minus": [0,1,1],
//    "mu": [{"tail": 1, "head": 2, "count": 1}]}
// and dihypergraphs like
//   {"n": 3, "edges": [{"tail": [1], "head": [2,3]}]}
// with 1-indexed vertices, sorted vertex lists and canonically sorted edges.

Instance parse_instance(std::string_view json_text);
std::string instance_to_json(const Instance& inst);

Dihypergraph parse_dihypergraph(std::string_view json_text);
std::string dihypergraph_to_json(const Dihypergraph& h);

}  // namespace dhenum
