#include "shellcount/graph.hpp"

#include <doctest.h>

#include <set>

using namespace shellcount;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("edge-list parsing") {
  CHECK(parse_edge_list("n 3\n0 1\n1 2\n") == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(parse_edge_list("# comment\r\n1 0\r\n\r\n  2\t1 \r\n") == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(parse_edge_list("n 5\n0 1\n").num_vertices() == 5);
  CHECK_THROWS_AS(parse_edge_list("0 1\nn 1\n"), ParseError);
  CHECK(parse_edge_list("") == Graph(0, {}));
  CHECK(parse_edge_list("n 1\n") == Graph(1, {}));

  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\nn 3\n"), ParseError);

  CHECK(parse_error_line("# c\n0 1\n0 1\n") == 3);
  CHECK(parse_error_line("0 1\n\n2 2\n") == 3);
}

TEST_CASE("edge-list formatting round-trips") {
  for (const Graph& g : {path_graph(5), complete_graph(4), Graph(4, {{0, 1}}), Graph(1, {}), Graph(3, {{1, 2}})}) {
    CHECK(parse_edge_list(format_edge_list(g)) == g);
  }
  CHECK(format_edge_list(path_graph(3)) == "0 1\n1 2\n");
  CHECK(format_edge_list(Graph(3, {{0, 1}})).rfind("n 3", 0) == 0);
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  const Graph g(3, {{2, 1}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
}

TEST_CASE("connectivity and classification") {
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_connected(Graph(0, {})));

  const auto c4 = classify(cycle_graph(4));
  CHECK(c4.kind == GraphKind::CompleteBipartite);
  CHECK(c4.bipartite_parts == std::pair{2, 2});

  const auto star = classify(star_graph(6));
  CHECK(star.kind == GraphKind::Star);
  CHECK(star.tree);
  CHECK(star.bipartite_parts == std::pair{1, 5});

  const auto tri = classify(complete_graph(3));
  CHECK(tri.kind == GraphKind::Complete);
  CHECK(tri.complete);

  CHECK(classify(path_graph(5)).kind == GraphKind::Path);
  CHECK(classify(path_graph(5)).path_ends == std::pair<Vertex, Vertex>{0, 4});
  CHECK(classify(Graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}})).kind == GraphKind::Tree);
  CHECK(classify(cycle_graph(5)).kind == GraphKind::GeneralConnected);
  CHECK(classify(Graph(3, {{0, 1}})).kind == GraphKind::Disconnected);

  const auto k23 = classify(relabel(complete_bipartite_graph(3, 2), {4, 0, 2, 1, 3}));
  CHECK(k23.kind == GraphKind::CompleteBipartite);
  CHECK(k23.bipartite_parts == std::pair{2, 3});
}

TEST_CASE("diameter and longest paths") {
  CHECK(tree_diameter(path_graph(7)).length == 6);
  CHECK(tree_diameter(star_graph(6)).length == 2);
  CHECK(tree_diameter(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}})).length == 3);
  CHECK(eccentricity(path_graph(5), 2) == 2);
  CHECK(longest_path_from(path_graph(4), 1) == std::vector<Vertex>{1, 2, 3});
  CHECK(longest_path_from(star_graph(4), 2) == std::vector<Vertex>{2, 0, 1});
  CHECK(bfs_distances(path_graph(3), 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("Pruefer codes and labeled tree enumeration") {
  CHECK(prufer_decode({}, 2) == path_graph(2));
  CHECK(prufer_decode({0, 0}, 4) == star_graph(4));
  CHECK(prufer_decode({1}, 3) == path_graph(3));
  CHECK(prufer_decode({}, 1) == Graph(1, {}));

  CHECK(all_labeled_trees(3).size() == 3);
  CHECK(all_labeled_trees(4).size() == 16);
  CHECK(all_labeled_trees(5).size() == 125);
  CHECK(LabeledTrees(7).total() == 16807);

  std::set<std::vector<Edge>> distinct;
  for (const Graph& t : all_labeled_trees(5)) {
    CHECK(is_tree(t));
    CHECK(prufer_decode(prufer_encode(t), 5) == t);
    distinct.insert(t.edges());
  }
  CHECK(distinct.size() == 125);
}

TEST_CASE("random trees are deterministic per seed") {
  CHECK(random_tree(1, 3) == Graph(1, {}));
  CHECK(random_tree(2, 3) == path_graph(2));
  CHECK(random_tree(8, 42) == random_tree(8, 42));
  CHECK(is_tree(random_tree(30, 7)));
  bool differs = false;
  for (std::uint64_t s = 1; s < 10; ++s) differs = differs || random_tree(8, s) != random_tree(8, 0);
  CHECK(differs);

  SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(rng.uniform(7) < 7);
}

TEST_CASE("graph families") {
  CHECK(complete_graph(5).num_edges() == 10);
  CHECK(complete_bipartite_graph(2, 3).num_edges() == 6);
  CHECK(cycle_graph(5).num_edges() == 5);
  const Graph broom = broom_graph(3, 2);
  CHECK(broom == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}));
  CHECK(relabel(path_graph(3), {2, 0, 1}) == Graph(3, {{0, 2}, {0, 1}}));
}
