#include "shellcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <queue>
#include <sstream>

namespace shellcount {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) {
      throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for " + std::to_string(n_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  }
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

// --- edge-list format ------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<int> parse_id(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  int max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (declared) throw ParseError(line_no, "second header line (first on line " + std::to_string(header_line) + ")");
      auto count = parse_id(tokens[1]);
      if (!count) throw ParseError(line_no, "bad vertex count '" + std::string(tokens[1]) + "'");
      declared = *count;
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    auto u = parse_id(tokens[0]);
    auto v = parse_id(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "vertex ids must be nonnegative integers");
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    edges.emplace_back(std::min(*u, *v), std::max(*u, *v));
    edge_lines.push_back(line_no);
    max_id = std::max({max_id, *u, *v});
  }

  if (declared) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].second >= *declared) {
        throw ParseError(edge_lines[i], "vertex id " + std::to_string(edges[i].second) +
                                            " >= declared n = " + std::to_string(*declared));
      }
    }
  }
  // Duplicates are reported at their second occurrence.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
  std::optional<std::size_t> first_dup;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]] && (!first_dup || edge_lines[order[i]] < *first_dup)) {
      first_dup = edge_lines[order[i]];
    }
  }
  if (first_dup) throw ParseError(*first_dup, "duplicate edge");

  int n = std::max(declared.value_or(0), max_id + 1);
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  int max_id = -1;
  for (const auto& [u, v] : g.edges()) max_id = std::max(max_id, v);
  if (max_id + 1 != g.num_vertices()) out << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// --- structure ---------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Disconnected: return "Disconnected";
    case GraphKind::GeneralConnected: return "GeneralConnected";
    case GraphKind::Tree: return "Tree";
    case GraphKind::Path: return "Path";
    case GraphKind::Star: return "Star";
    case GraphKind::Complete: return "Complete";
    case GraphKind::CompleteBipartite: return "CompleteBipartite";
  }
  return "?";
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  const int n = g.num_vertices();
  const long long m = g.num_edges();
  c.connected = is_connected(g);
  if (!c.connected) {
    c.kind = GraphKind::Disconnected;
    return c;
  }
  if (n == 0) return c;

  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));

  c.tree = m == n - 1;
  c.path = c.tree && max_deg <= 2;
  if (c.path) {
    std::vector<Vertex> ends;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) <= 1) ends.push_back(v);
    c.path_ends = ends.size() == 1 ? std::pair{ends[0], ends[0]} : std::pair{ends[0], ends[1]};
  }
  c.star = c.tree && n >= 2 && max_deg == n - 1;
  c.complete = m == static_cast<long long>(n) * (n - 1) / 2;

  // Two-colour by BFS; connected, so one sweep from vertex 0 suffices.
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  side[0] = 0;
  std::deque<Vertex> queue{0};
  bool bipartite = true;
  while (!queue.empty() && bipartite) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      auto& sw = side[static_cast<std::size_t>(w)];
      if (sw < 0) {
        sw = 1 - side[static_cast<std::size_t>(u)];
        queue.push_back(w);
      } else if (sw == side[static_cast<std::size_t>(u)]) {
        bipartite = false;
        break;
      }
    }
  }
  if (bipartite && n >= 2) {
    long long a = std::count(side.begin(), side.end(), 0);
    long long b = n - a;
    if (a * b == m) {
      if (b < a) {
        for (auto& s : side) s = 1 - s;
        std::swap(a, b);
      }
      c.bipartite_parts = std::pair{static_cast<int>(a), static_cast<int>(b)};
      c.part_of = std::move(side);
    }
  }

  if (c.path) c.kind = GraphKind::Path;
  else if (c.star) c.kind = GraphKind::Star;
  else if (c.tree) c.kind = GraphKind::Tree;
  else if (c.complete) c.kind = GraphKind::Complete;
  else if (c.bipartite_parts) c.kind = GraphKind::CompleteBipartite;
  else c.kind = GraphKind::GeneralConnected;
  return c;
}

namespace {

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw NotATreeError(std::string(who) + ": input is not a tree");
}

// Farthest vertex from `source`, smallest id among ties.
Vertex farthest(const std::vector<int>& dist) {
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

Diameter tree_diameter(const Graph& g) {
  require_tree(g, "tree_diameter");
  Vertex a = farthest(bfs_distances(g, 0));

  std::vector<Vertex> parent(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<Vertex> queue{a};
  dist[static_cast<std::size_t>(a)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  Vertex b = farthest(dist);
  Diameter d;
  d.length = dist[static_cast<std::size_t>(b)];
  for (Vertex v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) d.path.push_back(v);
  std::reverse(d.path.begin(), d.path.end());
  return d;
}

int eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::vector<Vertex> longest_path_from(const Graph& g, Vertex start) {
  require_tree(g, "longest_path_from");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  // Heights of the subtrees hanging below each vertex when rooted at start.
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  order.push_back(start);
  parent[static_cast<std::size_t>(start)] = start;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> height(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    if (u != start) {
      auto& ph = height[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])];
      ph = std::max(ph, height[static_cast<std::size_t>(u)] + 1);
    }
  }
  std::vector<Vertex> path{start};
  Vertex cur = start;
  while (height[static_cast<std::size_t>(cur)] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (w != parent[static_cast<std::size_t>(cur)] &&
          height[static_cast<std::size_t>(w)] == height[static_cast<std::size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> longest_path_lex(const Graph& g) {
  require_tree(g, "longest_path_lex");
  const int diameter = tree_diameter(g).length;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (eccentricity(g, v) == diameter) return longest_path_from(g, v);
  }
  return {};  // unreachable for a tree
}

// --- Prüfer codes --------------------------------------------------------

std::vector<int> prufer_encode(const Graph& tree) {
  require_tree(tree, "prufer_encode");
  const int n = tree.num_vertices();
  if (n <= 2) return {};
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = tree.degree(v);
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n - 2));
  while (static_cast<int>(seq.size()) < n - 2) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[static_cast<std::size_t>(leaf)] = true;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      seq.push_back(w);
      if (--degree[static_cast<std::size_t>(w)] == 1) leaves.push(w);
    }
  }
  return seq;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 1) throw std::invalid_argument("prufer_decode: n must be >= 1");
  const std::size_t want = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;
  if (seq.size() != want) {
    throw std::invalid_argument("prufer_decode: sequence length " + std::to_string(seq.size()) +
                                " != n - 2 = " + std::to_string(want));
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("prufer_decode: entry " + std::to_string(x) + " out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int x : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  if (n >= 2) {
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

LabeledTrees::LabeledTrees(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("all_labeled_trees: n = " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxVertices));
  }
  seq_.assign(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
}

std::optional<Graph> LabeledTrees::next() {
  if (done_) return std::nullopt;
  Graph tree = prufer_decode(seq_, n_);
  // Odometer step, last position fastest.
  std::size_t i = seq_.size();
  while (i > 0) {
    --i;
    if (++seq_[i] < n_) return tree;
    seq_[i] = 0;
  }
  done_ = true;
  return tree;
}

std::uint64_t LabeledTrees::total() const {
  std::uint64_t t = 1;
  for (int i = 0; i < n_ - 2; ++i) t *= static_cast<std::uint64_t>(n_);
  return t;
}

std::vector<Graph> all_labeled_trees(int n) {
  LabeledTrees gen(n);
  std::vector<Graph> out;
  out.reserve(gen.total());
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
  for (auto& x : seq) x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
  return prufer_decode(seq, n);
}

// --- families ------------------------------------------------------------

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int m, int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) edges.emplace_back(u, v);
  return Graph(m + n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph broom_graph(int path_vertices, int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < path_vertices; ++v) edges.emplace_back(v, v + 1);
  for (int i = 0; i < leaves; ++i) edges.emplace_back(path_vertices - 1, path_vertices + i);
  return Graph(path_vertices + leaves, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace shellcount
