#pragma once

#include "shellcount/bigmath.hpp"
#include "shellcount/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shellcount::oracle {

inline constexpr int kDefaultMaxDpEdges = 20;
inline constexpr int kMaxEnumerateEdges = 8;

class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// counts[S] = number of orderings of the edge subset S (bitmask over the
/// canonical edge indices) in which every prefix is connected; 0 when S is
/// disconnected. counts[0] = 1.
class SubsetTable {
 public:
  /// With a root, only edges incident to it may come first.
  explicit SubsetTable(const Graph& g, std::optional<Vertex> root = std::nullopt,
                       int max_edges = kDefaultMaxDpEdges);

  int edge_count() const { return m_; }
  const Nat& count(std::uint32_t subset) const { return counts_[subset]; }
  bool connected(std::uint32_t subset) const { return connected_[subset]; }
  const Nat& full() const { return counts_.back(); }

 private:
  void build(const Graph& g, std::optional<Vertex> root, int max_edges);

  int m_ = 0;
  std::vector<Nat> counts_;
  std::vector<bool> connected_;
};

/// F(g). 1 for a connected graph without edges, 0 for a disconnected graph.
Nat count_shellings_dp(const Graph& g, int max_edges = kDefaultMaxDpEdges);

/// Shellings whose first edge is incident to v.
Nat count_rooted_shellings_dp(const Graph& g, Vertex v, int max_edges = kDefaultMaxDpEdges);

struct Enumeration {
  /// Shellings as permutations of canonical edge indices, at most `limit` of them.
  std::vector<std::vector<int>> orderings;
  /// Number of shellings found, independent of the limit.
  std::uint64_t total = 0;
};

/// Backtracking enumeration; |E| <= 8.
Enumeration enumerate_shellings(const Graph& g, std::size_t limit = SIZE_MAX);

}  // namespace shellcount::oracle
