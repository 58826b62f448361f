#include "shellcount/tree_shelling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace shellcount::tree {

namespace {

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw NotATreeError(std::string(who) + ": input is not a tree");
}

}  // namespace

std::vector<Vertex> RootedTree::children(const Graph& g, Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u))
    if (w != root && parent[static_cast<std::size_t>(w)] == u) out.push_back(w);
  return out;
}

std::vector<int> RootedTree::depths() const {
  std::vector<int> depth(parent.size(), 0);
  for (Vertex u : order)
    if (u != root) depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])] + 1;
  return depth;
}

int RootedTree::height() const {
  auto d = depths();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

RootedTree root_tree(const Graph& g, Vertex v) {
  require_tree(g, "root_tree");
  if (!g.has_vertex(v)) throw std::out_of_range("root_tree: bad vertex " + std::to_string(v));
  const auto n = static_cast<std::size_t>(g.num_vertices());
  RootedTree rt;
  rt.root = v;
  rt.parent.assign(n, -1);
  rt.subtree_size.assign(n, 1);
  rt.order.reserve(n);
  rt.parent[static_cast<std::size_t>(v)] = v;
  rt.order.push_back(v);
  for (std::size_t i = 0; i < rt.order.size(); ++i) {
    for (Vertex w : g.neighbors(rt.order[i])) {
      if (rt.parent[static_cast<std::size_t>(w)] < 0) {
        rt.parent[static_cast<std::size_t>(w)] = rt.order[i];
        rt.order.push_back(w);
      }
    }
  }
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    if (*it != v) rt.subtree_size[static_cast<std::size_t>(rt.parent[static_cast<std::size_t>(*it)])] += rt.subtree_size[static_cast<std::size_t>(*it)];
  }
  return rt;
}

Nat hook_count(const RootedTree& rt) {
  Nat hooks = 1;
  for (int s : rt.subtree_size) hooks *= s;
  return bigmath::exact_div(bigmath::factorial(static_cast<unsigned>(rt.size())), hooks, "hook_count");
}

std::vector<Nat> all_root_counts(const Graph& g, Vertex seed) {
  const RootedTree rt = root_tree(g, seed);
  const int n = rt.size();
  std::vector<Nat> counts(static_cast<std::size_t>(n));
  counts[static_cast<std::size_t>(seed)] = hook_count(rt);
  for (Vertex u : rt.order) {
    if (u == seed) continue;
    const int s = rt.subtree_size[static_cast<std::size_t>(u)];
    const Nat& above = counts[static_cast<std::size_t>(rt.parent[static_cast<std::size_t>(u)])];
    counts[static_cast<std::size_t>(u)] = bigmath::exact_div(above * s, Nat(n - s), "all_root_counts");
  }
  return counts;
}

std::vector<Nat> all_root_counts(const Graph& g) { return all_root_counts(g, 0); }

Nat tree_count(const Graph& g) {
  require_tree(g, "tree_count");
  if (g.num_vertices() == 1) return 1;
  const auto counts = all_root_counts(g);
  const Nat sum = std::accumulate(counts.begin(), counts.end(), Nat(0));
  return bigmath::exact_div(sum, Nat(2), "tree_count");
}

Rat WeightVector::total() const { return std::accumulate(weights.begin(), weights.end(), Rat(0)); }

WeightVector weights(const Graph& g, Vertex v) {
  const RootedTree rt = root_tree(g, v);
  const int n = rt.size();
  WeightVector wv;
  wv.root = v;
  wv.weights.assign(static_cast<std::size_t>(n), Rat(0));
  wv.weights[static_cast<std::size_t>(v)] = 1;
  for (Vertex u : rt.order) {
    if (u == v) continue;
    const int s = rt.subtree_size[static_cast<std::size_t>(u)];
    wv.weights[static_cast<std::size_t>(u)] =
        wv.weights[static_cast<std::size_t>(rt.parent[static_cast<std::size_t>(u)])] * Rat(s, n - s);
  }
  return wv;
}

}  // namespace shellcount::tree
