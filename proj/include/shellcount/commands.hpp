#pragma once

#include "shellcount/graph.hpp"
#include "shellcount/oracle.hpp"
#include "shellcount/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellcount::commands {

/// Bad subcommand arguments (unknown family, wrong parameter count, out of range).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CountOptions {
  /// Report the DP count as the answer even when a formula applies.
  bool brute = false;
  bool crosscheck = true;
  int max_dp_edges = oracle::kDefaultMaxDpEdges;
};

report::Report cmd_count(const Graph& g, const CountOptions& opts = {});
report::Report cmd_tree_roots(const Graph& g);
/// family: kn, kmn, stanley or path.
report::Report cmd_formula(const std::string& family, const std::vector<int>& params,
                           std::uint64_t stanley_limit = 1'000'000);
report::Report cmd_bounds(const Graph& g);
/// suite: identities, trees, bipartite, bounds or all. max_n overrides the
/// tree and bounds sweep limits.
report::Report cmd_verify(const std::string& suite, std::optional<int> max_n = std::nullopt,
                          int max_dp_edges = oracle::kDefaultMaxDpEdges);
/// kind: tree, all-trees, kmn, kn, path or mid-spider. Returns edge-list text.
std::string cmd_gen(const std::string& kind, const std::vector<int>& params, std::uint64_t seed = 0);

}  // namespace shellcount::commands
