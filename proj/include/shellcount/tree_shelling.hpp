#pragma once

#include "shellcount/bigmath.hpp"
#include "shellcount/graph.hpp"

#include <vector>

namespace shellcount::tree {

/// A tree rooted at `root`. parent[root] == root; subtree_size[u] counts u and
/// its descendants; order is BFS from the root over ascending neighbour lists.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<int> subtree_size;
  std::vector<Vertex> order;

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<Vertex> children(const Graph& g, Vertex u) const;
  /// Edges from the root down to the deepest vertex (tree height).
  int height() const;
  std::vector<int> depths() const;
};

RootedTree root_tree(const Graph& g, Vertex v);

/// n! / prod_u subtree_size[u].
Nat hook_count(const RootedTree& rt);

/// F(T_v) for every v: one hook product, then F(child) = F(parent) * s / (n - s)
/// along the edges, with s the child's subtree size.
std::vector<Nat> all_root_counts(const Graph& g);
/// Same, seeded from a chosen vertex.
std::vector<Nat> all_root_counts(const Graph& g, Vertex seed);

/// F(T) = (1/2) sum_v F(T_v); 1 for the single-vertex tree.
Nat tree_count(const Graph& g);

/// W(u) = F(T_u) / F(T_root), via products of s / (n - s) along the path from the root.
struct WeightVector {
  Vertex root = 0;
  std::vector<Rat> weights;
  Rat total() const;
};

WeightVector weights(const Graph& g, Vertex v);

}  // namespace shellcount::tree
