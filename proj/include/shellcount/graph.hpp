#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shellcount {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when an operation that needs a tree receives something else.
class NotATreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph in canonical form: edges (u, v) with u < v,
/// sorted lexicographically, no duplicates. Two graphs are equal iff their
/// vertex counts and edge lists are equal.
class Graph {
 public:
  Graph() = default;
  /// Canonicalises `edges`; throws std::invalid_argument on self-loops,
  /// duplicates or out-of-range endpoints.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbours of v, ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Parses the edge-list text format: blank lines, '#' comments, an optional
/// "n <k>" header and "u v" lines. LF and CRLF are both accepted.
Graph parse_edge_list(std::string_view text);

/// Canonical text form accepted by parse_edge_list. The "n <k>" header is
/// written only when isolated vertices make it necessary.
std::string format_edge_list(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

enum class GraphKind { Disconnected, GeneralConnected, Tree, Path, Star, Complete, CompleteBipartite };

std::string to_string(GraphKind kind);

/// Classification result. `kind` is the most specific tag; the flags list
/// every tag that applies.
struct GraphClass {
  GraphKind kind = GraphKind::GeneralConnected;
  bool connected = false;
  bool tree = false;
  bool path = false;
  bool star = false;
  bool complete = false;
  /// Part sizes (m <= n) when the graph is complete bipartite.
  std::optional<std::pair<int, int>> bipartite_parts;
  /// Side (0 or 1) of each vertex when bipartite_parts is set; side 0 is the smaller part.
  std::vector<int> part_of;
  /// Endpoints when the graph is a path.
  std::optional<std::pair<Vertex, Vertex>> path_ends;
};

GraphClass classify(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct Diameter {
  int length = 0;
  std::vector<Vertex> path;
};

/// Double BFS with ties broken by smallest vertex id.
Diameter tree_diameter(const Graph& g);

/// Number of edges on a longest path starting at v (tree eccentricity).
int eccentricity(const Graph& g, Vertex v);

/// Lexicographically smallest vertex sequence among the longest paths that
/// start at `start` in a tree.
std::vector<Vertex> longest_path_from(const Graph& g, Vertex start);

/// Lexicographically smallest vertex sequence among all longest paths.
std::vector<Vertex> longest_path_lex(const Graph& g);

std::vector<int> prufer_encode(const Graph& tree);
Graph prufer_decode(const std::vector<int>& seq, int n);

/// Enumerates every labeled tree on n vertices (1 <= n <= 9) by walking
/// Prüfer sequences in lexicographic order.
class LabeledTrees {
 public:
  static constexpr int kMaxVertices = 9;
  explicit LabeledTrees(int n);

  /// Next tree, or nullopt once all n^(n-2) have been produced.
  std::optional<Graph> next();
  std::uint64_t total() const;

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
};

std::vector<Graph> all_labeled_trees(int n);

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// the xor-shift-multiply finaliser. Fixed so sweeps reproduce across builds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [0, bound) by rejection of the biased tail.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Uniform labeled tree from a uniform random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

Graph path_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
/// Part A = 0..m-1, part B = m..m+n-1.
Graph complete_bipartite_graph(int m, int n);
Graph cycle_graph(int n);
/// Path 0-1-...-(path_vertices-1) with `leaves` extra leaves on its last vertex.
Graph broom_graph(int path_vertices, int leaves);

/// Applies a vertex relabeling: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace shellcount
