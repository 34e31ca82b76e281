// JSON and DOT serialization of forests; matrix text output.
#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "wqsym/forest.hpp"
#include "wqsym/linalg.hpp"

namespace wqsym {

nlohmann::json forest_to_json(const BiplaneForest& f);
BiplaneForest forest_from_json(const nlohmann::json& j);

// One digraph per forest; red edges color=red, blue edges color=blue.
std::string forest_to_dot(const BiplaneForest& f, const std::string& name = "forest");

// CSV with "." for zeros unless strict_zeros; header = the key order.
std::string matrix_to_csv(const ExactMatrix& m, const std::vector<PackedWord>& order,
                          bool strict_zeros = false);

}  // namespace wqsym
