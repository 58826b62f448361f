#pragma once

#include "shellcount/bigmath.hpp"
#include "shellcount/graph.hpp"

#include <optional>
#include <vector>

namespace shellcount::bounds {

struct DegreeBound {
  Nat bound;
  /// True iff the tree is a path or a star, the only equality cases.
  bool equality_predicted = false;
};

/// prod_v d(v)! for a tree with n >= 2.
DegreeBound degree_lower_bound(const Graph& g);

/// Closed-form diameter upper bound, for 1 <= l <= n - 1:
///   l even: 2 (n-1-l/2)! / (l/2)! * [C(n-2, l/2) + sum_{i<l/2} C(n-1, i)]
///   l odd:  (n-(l+3)/2)! / ((l+1)/2)! * [(n-1-l) C(n-2, (l-1)/2) + n sum_{i<=(l-1)/2} C(n-1, i)]
Rat diameter_upper_bound_printed(int n, int l);

/// Path 0-1-...-l plus leaves l+1..n-1 on vertex floor(l/2).
Graph mid_spider(int n, int l);

/// True iff some longest path v_0..v_l has every other vertex as a leaf on v_{floor(l/2)}.
bool is_mid_spider_shape(const Graph& g);

/// sum_{k=0}^{l-1} C(n-2, k), l = eccentricity of v. Requires n >= 2.
Nat weight_bound_coefficient(const Graph& g, Vertex v);

/// One "move edges away from the root" step along the lexicographically
/// smallest longest descending path from v: the smallest off-path child v'
/// of the first v_i (i <= l-2) that has one becomes a leaf of v_{i+1}, and
/// its children are re-hung on v_{i+1}. nullopt when no such v_i exists.
std::optional<Graph> push_branch_from_root(const Graph& g, Vertex v);

/// Re-hangs every vertex off the lexicographically smallest longest path as a
/// leaf of the path vertex its branch grows from.
Graph normalize_to_caterpillar(const Graph& g);

/// One step towards the mid-spider. If the tree is not yet a caterpillar
/// around its longest path, the step is the normalisation. Otherwise the
/// pendant leaves of the outermost branching path vertex move one position
/// towards v_{floor(l/2)}: the leftmost branching v_i with i < floor(l/2)
/// first, then the rightmost v_j with j > floor(l/2). nullopt at the fixpoint.
std::optional<Graph> pull_branch_toward_middle(const Graph& g);

/// Iterates a step function to its fixpoint; throws if it fails to settle
/// within n^2 + 1 steps.
Graph push_to_fixpoint(const Graph& g, Vertex v);
Graph pull_to_fixpoint(const Graph& g);

struct BoundReport {
  Nat exact;
  Nat degree_lower;
  bool degree_equality_predicted = false;
  int diameter = 0;
  Rat diameter_upper_printed;
  Nat mid_spider_exact;
  bool mid_spider_shape = false;
  std::vector<Nat> root_counts;
  /// weight_bound_coefficient(g, v) per root; the bound is this times root_counts[v].
  std::vector<Nat> per_root_weight_bounds;

  bool degree_bound_holds() const { return degree_lower <= exact; }
  bool weight_bounds_hold() const;
  bool printed_bound_holds() const { return Rat(exact) <= diameter_upper_printed; }
  bool mid_spider_bound_holds() const { return exact <= mid_spider_exact; }
  /// printed / mid-spider exact.
  Rat printed_gap() const { return diameter_upper_printed / Rat(mid_spider_exact); }
};

BoundReport bound_report(const Graph& g);

}  // namespace shellcount::bounds
