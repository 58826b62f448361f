#include "shellcount/bounds.hpp"

#include "shellcount/tree_shelling.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace shellcount::bounds {

using bigmath::binomial;
using bigmath::factorial;

namespace {

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw NotATreeError(std::string(who) + ": input is not a tree");
}

Nat binom(int n, int k) { return binomial(Nat(n), Nat(k)); }

}  // namespace

DegreeBound degree_lower_bound(const Graph& g) {
  require_tree(g, "degree_lower_bound");
  if (g.num_vertices() < 2) throw DomainError("degree_lower_bound: needs n >= 2");
  DegreeBound out;
  out.bound = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.bound *= factorial(static_cast<unsigned>(g.degree(v)));
  const auto cls = classify(g);
  out.equality_predicted = cls.path || cls.star;
  return out;
}

Rat diameter_upper_bound_printed(int n, int l) {
  if (l < 1 || l > n - 1) {
    throw DomainError("diameter_upper_bound_printed: need 1 <= l <= n-1, got n=" + std::to_string(n) +
                      " l=" + std::to_string(l));
  }
  if (l % 2 == 0) {
    const int h = l / 2;
    Nat bracket = binom(n - 2, h);
    for (int i = 0; i <= h - 1; ++i) bracket += binom(n - 1, i);
    return Rat(2 * factorial(static_cast<unsigned>(n - 1 - h)) * bracket, factorial(static_cast<unsigned>(h)));
  }
  const int h = (l - 1) / 2;
  Nat bracket = Nat(n - 1 - l) * binom(n - 2, h);
  Nat tail = 0;
  for (int i = 0; i <= h; ++i) tail += binom(n - 1, i);
  bracket += Nat(n) * tail;
  return Rat(factorial(static_cast<unsigned>(n - (l + 3) / 2)) * bracket, factorial(static_cast<unsigned>((l + 1) / 2)));
}

Graph mid_spider(int n, int l) {
  if (l < 1 || l > n - 1 || (l == 1 && n != 2)) {
    throw DomainError("mid_spider: need 2 <= l <= n-1 (or n=2, l=1), got n=" + std::to_string(n) +
                      " l=" + std::to_string(l));
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < l; ++v) edges.emplace_back(v, v + 1);
  for (Vertex leaf = l + 1; leaf < n; ++leaf) edges.emplace_back(l / 2, leaf);
  return Graph(n, std::move(edges));
}

bool is_mid_spider_shape(const Graph& g) {
  if (!is_tree(g)) return false;
  const int n = g.num_vertices();
  if (n <= 2) return true;
  const int l = tree_diameter(g).length;
  for (Vertex a = 0; a < n; ++a) {
    // Parent pointers towards a give the unique path from any b back to a.
    std::vector<Vertex> parent(n, -1);
    std::vector<int> dist(n, -1);
    std::deque<Vertex> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    for (Vertex b = 0; b < n; ++b) {
      if (dist[b] != l) continue;
      std::vector<Vertex> path;
      for (Vertex v = b; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());  // path[0] == a
      std::vector<bool> on_path(n, false);
      for (Vertex v : path) on_path[v] = true;
      const Vertex hub = path[l / 2];
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u) {
        if (on_path[u]) continue;
        ok = g.degree(u) == 1 && g.neighbors(u).front() == hub;
      }
      if (ok) return true;
    }
  }
  return false;
}

Nat weight_bound_coefficient(const Graph& g, Vertex v) {
  require_tree(g, "weight_bound_coefficient");
  if (!g.has_vertex(v)) throw std::out_of_range("weight_bound_coefficient: bad vertex " + std::to_string(v));
  const int n = g.num_vertices();
  if (n < 2) throw DomainError("weight_bound_coefficient: needs n >= 2");
  const int l = eccentricity(g, v);
  Nat sum = 0;
  for (int k = 0; k <= l - 1; ++k) sum += binom(n - 2, k);
  return sum;
}

std::optional<Graph> push_branch_from_root(const Graph& g, Vertex v) {
  require_tree(g, "push_branch_from_root");
  const auto rt = tree::root_tree(g, v);
  const auto path = longest_path_from(g, v);
  const int l = static_cast<int>(path.size()) - 1;
  for (int i = 0; i <= l - 2; ++i) {
    const Vertex vi = path[i];
    const Vertex next = path[i + 1];
    Vertex moved = -1;
    for (Vertex c : rt.children(g, vi)) {
      if (c != next) {
        moved = c;
        break;
      }
    }
    if (moved < 0) continue;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [a, b] : g.edges()) {
      if (a > b) std::swap(a, b);
      const bool touches_moved = a == moved || b == moved;
      const Vertex other = a == moved ? b : a;
      if (touches_moved && other == vi) {
        edges.emplace_back(moved, next);
      } else if (touches_moved) {
        edges.emplace_back(next, other);  // a child of `moved`
      } else {
        edges.emplace_back(a, b);
      }
    }
    return Graph(g.num_vertices(), std::move(edges));
  }
  return std::nullopt;
}

Graph normalize_to_caterpillar(const Graph& g) {
  require_tree(g, "normalize_to_caterpillar");
  const int n = g.num_vertices();
  const auto path = longest_path_lex(g);
  std::vector<Vertex> anchor(n, -1);
  std::deque<Vertex> queue;
  for (Vertex v : path) {
    anchor[v] = v;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (anchor[w] < 0) {
        anchor[w] = anchor[u];
        queue.push_back(w);
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  for (Vertex u = 0; u < n; ++u)
    if (anchor[u] != u) edges.emplace_back(anchor[u], u);
  return Graph(n, std::move(edges));
}

std::optional<Graph> pull_branch_toward_middle(const Graph& g) {
  Graph normal = normalize_to_caterpillar(g);
  if (!(normal == g)) return normal;

  const auto path = longest_path_lex(g);
  const int l = static_cast<int>(path.size()) - 1;
  const int mid = l / 2;
  std::vector<bool> on_path(g.num_vertices(), false);
  for (Vertex v : path) on_path[v] = true;

  auto move_pendants = [&](int from, int to) {
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
      if ((a == path[from] && !on_path[b]) || (b == path[from] && !on_path[a])) {
        edges.emplace_back(path[to], a == path[from] ? b : a);
      } else {
        edges.emplace_back(a, b);
      }
    }
    return Graph(g.num_vertices(), std::move(edges));
  };

  for (int i = 1; i < l; ++i) {
    if (g.degree(path[i]) < 3) continue;
    if (i < mid) return move_pendants(i, i + 1);
    break;
  }
  for (int j = l - 1; j > 0; --j) {
    if (g.degree(path[j]) < 3) continue;
    if (j > mid) return move_pendants(j, j - 1);
    break;
  }
  return std::nullopt;
}

namespace {

template <typename Step>
Graph iterate_to_fixpoint(Graph g, Step step, const char* who) {
  const long long limit = static_cast<long long>(g.num_vertices()) * g.num_vertices() + 1;
  for (long long k = 0; k <= limit; ++k) {
    auto next = step(g);
    if (!next) return g;
    g = std::move(*next);
  }
  throw std::logic_error(std::string(who) + ": no fixpoint within n^2 + 1 steps");
}

}  // namespace

Graph push_to_fixpoint(const Graph& g, Vertex v) {
  return iterate_to_fixpoint(g, [v](const Graph& t) { return push_branch_from_root(t, v); }, "push_to_fixpoint");
}

Graph pull_to_fixpoint(const Graph& g) {
  return iterate_to_fixpoint(g, [](const Graph& t) { return pull_branch_toward_middle(t); }, "pull_to_fixpoint");
}

bool BoundReport::weight_bounds_hold() const {
  for (std::size_t v = 0; v < root_counts.size(); ++v)
    if (exact > per_root_weight_bounds[v] * root_counts[v]) return false;
  return true;
}

BoundReport bound_report(const Graph& g) {
  require_tree(g, "bound_report");
  const int n = g.num_vertices();
  if (n < 2) throw DomainError("bound_report: needs n >= 2");
  BoundReport r;
  r.root_counts = tree::all_root_counts(g);
  r.exact = tree::tree_count(g);
  auto degree = degree_lower_bound(g);
  r.degree_lower = std::move(degree.bound);
  r.degree_equality_predicted = degree.equality_predicted;
  r.diameter = tree_diameter(g).length;
  r.diameter_upper_printed = diameter_upper_bound_printed(n, r.diameter);
  r.mid_spider_exact = tree::tree_count(mid_spider(n, r.diameter));
  r.mid_spider_shape = is_mid_spider_shape(g);
  r.per_root_weight_bounds.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) r.per_root_weight_bounds.push_back(weight_bound_coefficient(g, v));
  return r;
}

}  // namespace shellcount::bounds
