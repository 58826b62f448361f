#include "shellcount/oracle.hpp"
#include "shellcount/tree_shelling.hpp"

#include <doctest.h>

using namespace shellcount;
using namespace shellcount::tree;

namespace {
const Graph kDoubleStar(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("rooted tree structure") {
  const auto star = root_tree(star_graph(5), 0);
  CHECK(star.subtree_size == std::vector<int>{5, 1, 1, 1, 1});
  CHECK(star.parent[0] == 0);
  CHECK(star.height() == 1);

  const auto chain = root_tree(path_graph(5), 0);
  CHECK(chain.subtree_size == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(chain.depths() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(chain.children(path_graph(5), 2) == std::vector<Vertex>{3});

  CHECK_THROWS_AS(root_tree(cycle_graph(4), 0), NotATreeError);
}

TEST_CASE("hook products") {
  CHECK(hook_count(root_tree(Graph(1, {}), 0)) == 1);
  CHECK(hook_count(root_tree(path_graph(4), 0)) == 1);
  CHECK(hook_count(root_tree(path_graph(4), 1)) == 3);
  CHECK(hook_count(root_tree(star_graph(6), 0)) == 120);
  CHECK(hook_count(root_tree(kDoubleStar, 0)) == 8);
}

TEST_CASE("all root counts") {
  CHECK(all_root_counts(path_graph(5)) == std::vector<Nat>{1, 4, 6, 4, 1});
  CHECK(all_root_counts(star_graph(4)) == std::vector<Nat>{6, 2, 2, 2});
  CHECK(all_root_counts(kDoubleStar) == std::vector<Nat>{8, 12, 2, 3, 3});
  CHECK(all_root_counts(Graph(1, {})) == std::vector<Nat>{1});
  for (Vertex seed = 0; seed < 5; ++seed) CHECK(all_root_counts(kDoubleStar, seed) == all_root_counts(kDoubleStar));
}

TEST_CASE("tree counts") {
  CHECK(tree_count(Graph(1, {})) == 1);
  CHECK(tree_count(path_graph(2)) == 1);
  CHECK(tree_count(path_graph(12)) == 1024);
  CHECK(tree_count(star_graph(7)) == 720);
  CHECK(tree_count(kDoubleStar) == 14);
  CHECK(tree_count(broom_graph(4, 2)) == 30);
  CHECK_THROWS_AS(tree_count(cycle_graph(5)), NotATreeError);
}

TEST_CASE("tree formulas agree with the DP oracle on random trees up to 14 vertices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph t = random_tree(8 + static_cast<int>(seed % 7), seed);
    const auto counts = all_root_counts(t);
    CHECK(tree_count(t) == oracle::count_shellings_dp(t));
    for (Vertex v = 0; v < t.num_vertices(); v += 3) CHECK(counts[v] == oracle::count_rooted_shellings_dp(t, v));
  }
}

TEST_CASE("weights") {
  const auto w = weights(path_graph(4), 0);
  CHECK(w.weights == std::vector<Rat>{1, 3, 3, 1});
  CHECK(w.total() == 8);
  const auto counts = all_root_counts(kDoubleStar);
  for (Vertex v = 0; v < 5; ++v) {
    const auto wv = weights(kDoubleStar, v);
    CHECK(wv.weights[v] == 1);
    for (Vertex u = 0; u < 5; ++u) CHECK(wv.weights[u] == Rat(counts[u], counts[v]));
  }
}

TEST_CASE("subtree sizes on the 15-vertex definition example") {
  // v = 0 with children u = 1, w = 2 and a leaf 3.
  const Graph t(15, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 6}, {4, 7}, {5, 8},
                     {2, 9}, {2, 10}, {2, 11}, {9, 12}, {9, 13}, {10, 14}});
  const auto rt = root_tree(t, 0);
  CHECK(rt.subtree_size[1] == 6);
  CHECK(rt.subtree_size[2] == 7);
  CHECK(rt.subtree_size[3] == 1);
  CHECK(rt.subtree_size[0] == 15);
  // Adjacent-root ratio: F(T_u) / F(T_v) = |T_v(u)| / (n - |T_v(u)|).
  const auto counts = all_root_counts(t);
  CHECK(counts[1] * 9 == counts[0] * 6);
}
