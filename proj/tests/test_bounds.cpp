#include "shellcount/bounds.hpp"
#include "shellcount/tree_shelling.hpp"

#include <doctest.h>

using namespace shellcount;
using namespace shellcount::bounds;

TEST_CASE("degree lower bound") {
  const auto path = degree_lower_bound(path_graph(6));
  CHECK(path.bound == 16);
  CHECK(path.equality_predicted);
  const auto star = degree_lower_bound(star_graph(6));
  CHECK(star.bound == 120);
  CHECK(star.equality_predicted);

  const Graph b = broom_graph(4, 2);  // the (2,3) broom on 6 vertices
  CHECK(degree_lower_bound(b).bound == 24);
  CHECK_FALSE(degree_lower_bound(b).equality_predicted);
  CHECK(tree::tree_count(b) == 30);
  CHECK_THROWS_AS(degree_lower_bound(cycle_graph(4)), NotATreeError);
}

TEST_CASE("printed diameter bound") {
  CHECK(diameter_upper_bound_printed(3, 2) == 4);
  CHECK(diameter_upper_bound_printed(5, 4) == 16);
  CHECK(diameter_upper_bound_printed(4, 3) == 8);
  CHECK(diameter_upper_bound_printed(6, 3) == 132);
  CHECK(diameter_upper_bound_printed(8, 4) == 2760);
  CHECK_THROWS(diameter_upper_bound_printed(4, 4));
  CHECK_THROWS(diameter_upper_bound_printed(4, 0));
}

TEST_CASE("mid-spiders") {
  CHECK(mid_spider(5, 2) == relabel(star_graph(5), {1, 0, 2, 3, 4}));
  CHECK(mid_spider(6, 5) == path_graph(6));
  CHECK(mid_spider(5, 3) == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}));
  CHECK(mid_spider(7, 4) == Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}}));
  CHECK(tree::tree_count(mid_spider(6, 3)) == 66);
  CHECK(tree::tree_count(mid_spider(8, 4)) == 1380);
  CHECK(is_mid_spider_shape(mid_spider(8, 5)));
  CHECK(is_mid_spider_shape(relabel(mid_spider(7, 4), {6, 5, 4, 3, 2, 1, 0})));
  CHECK_FALSE(is_mid_spider_shape(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}})));
  CHECK_THROWS(mid_spider(5, 5));
}

TEST_CASE("weight bound coefficient") {
  for (int n = 2; n <= 9; ++n) {
    const Graph star = star_graph(n);
    CHECK(weight_bound_coefficient(star, 0) == 1);
    CHECK(tree::tree_count(star) == tree::hook_count(tree::root_tree(star, 0)));
    const Graph path = path_graph(n);
    CHECK(weight_bound_coefficient(path, 0) == Nat(1) << (n - 2));
    CHECK(tree::tree_count(path) == weight_bound_coefficient(path, 0));
    for (Vertex v = 0; v < n; ++v) CHECK(weight_bound_coefficient(path, v) <= Nat(1) << (n - 2));
  }
  CHECK_THROWS(weight_bound_coefficient(Graph(1, {}), 0));
}

TEST_CASE("push step") {
  CHECK_FALSE(push_branch_from_root(star_graph(6), 0));
  CHECK_FALSE(push_branch_from_root(path_graph(6), 0));
  // Leaf 5 on v_0 of the path 0-1-2-3-4 moves to v_1.
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}});
  const auto next = push_branch_from_root(g, 0);
  REQUIRE(next);
  CHECK(*next == Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}}));
  CHECK(tree::weights(*next, 0).total() >= tree::weights(g, 0).total());

  const Graph fix = push_to_fixpoint(g, 0);
  CHECK(fix == Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}));
}

TEST_CASE("pull step") {
  CHECK_FALSE(pull_branch_toward_middle(mid_spider(7, 4)));
  CHECK_FALSE(pull_branch_toward_middle(path_graph(7)));
  // Leaves at v_1 of a diameter-4 spider move to v_2.
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}});
  const auto next = pull_branch_toward_middle(g);
  REQUIRE(next);
  CHECK(*next == mid_spider(7, 4));
  CHECK(tree::tree_count(*next) >= tree::tree_count(g));

  // A branch of depth two is first flattened onto the path.
  const Graph deep(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
  CHECK(pull_branch_toward_middle(deep) == normalize_to_caterpillar(deep));
  CHECK(pull_to_fixpoint(deep) == mid_spider(7, 4));
}

TEST_CASE("bound report") {
  const auto r = bound_report(path_graph(5));
  CHECK(r.exact == 8);
  CHECK(r.diameter == 4);
  CHECK(r.diameter_upper_printed == 16);
  CHECK(r.mid_spider_exact == 8);
  CHECK(r.mid_spider_shape);
  CHECK(r.printed_gap() == 2);
  CHECK(r.degree_bound_holds());
  CHECK(r.weight_bounds_hold());
  CHECK(r.printed_bound_holds());
  CHECK(r.mid_spider_bound_holds());

  const auto s = bound_report(star_graph(4));
  CHECK(s.degree_lower == 6);
  CHECK(s.exact == 6);
  CHECK(s.degree_equality_predicted);
}
