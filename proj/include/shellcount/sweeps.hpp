#pragma once

#include "shellcount/graph.hpp"
#include "shellcount/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shellcount::sweeps {

inline constexpr int kDefaultTreeMaxN = 7;
inline constexpr int kDefaultBoundsMaxN = 8;

using report::CrossCheck;

/// Exhaustive checks behind `verify`. Each returns one CrossCheck per
/// property with the number of cases examined.
std::vector<CrossCheck> identities_suite();
std::vector<CrossCheck> trees_suite(int max_n = kDefaultTreeMaxN);
std::vector<CrossCheck> bipartite_suite(int max_dp_edges = 20);
std::vector<CrossCheck> bounds_suite(int max_n = kDefaultBoundsMaxN);

/// Connected graphs with at most 8 edges used for oracle self-consistency:
/// paths, cycles, stars, K_4 minus an edge, K_4, K_{2,3} and a few irregular ones.
std::vector<std::pair<std::string, Graph>> oracle_corpus();

}  // namespace shellcount::sweeps
