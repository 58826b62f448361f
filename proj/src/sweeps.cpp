#include "shellcount/sweeps.hpp"

#include "shellcount/bigmath.hpp"
#include "shellcount/bounds.hpp"
#include "shellcount/closed_forms.hpp"
#include "shellcount/identities.hpp"
#include "shellcount/oracle.hpp"
#include "shellcount/tree_shelling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace shellcount::sweeps {

using bigmath::binomial;
using report::Status;

namespace {

// Counts cases and keeps the first failure's description.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = describe();
    }
  }
  void record(bool ok) {
    record(ok, [] { return std::string("check failed"); });
  }
  void note(std::string text) { note_ = std::move(text); }

  CrossCheck result() const {
    CrossCheck c;
    c.name = name_;
    c.cases = cases_;
    if (cases_ == 0) {
      c.status = Status::Skipped;
      c.detail = "no cases";
    } else if (failures_ == 0) {
      c.status = Status::Pass;
      c.detail = note_;
    } else {
      c.status = Status::Fail;
      c.detail = std::to_string(failures_) + " failing; first: " + first_failure_;
      if (!note_.empty()) c.detail += "; " + note_;
    }
    return c;
  }

 private:
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
  std::string note_;
};

// Runs `body`, turning an exception into a failing case of `tally`.
template <typename Body>
void guarded(Tally& tally, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.record(false, [&] { return std::string("exception: ") + e.what(); });
  }
}

std::string edges_str(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " [";
  for (const auto& [u, v] : g.edges()) out << "(" << u << "," << v << ")";
  out << "]";
  return out.str();
}

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
  LabeledTrees gen(n);
  while (auto t = gen.next()) fn(*t);
}

}  // namespace

std::vector<std::pair<std::string, Graph>> oracle_corpus() {
  return {
      {"single vertex", Graph(1, {})},
      {"single edge", path_graph(2)},
      {"path P3", path_graph(3)},
      {"path P5", path_graph(5)},
      {"path P9", path_graph(9)},
      {"star K_{1,4}", star_graph(5)},
      {"star K_{1,8}", star_graph(9)},
      {"triangle", complete_graph(3)},
      {"4-cycle", cycle_graph(4)},
      {"5-cycle", cycle_graph(5)},
      {"8-cycle", cycle_graph(8)},
      {"theta (K_4 minus an edge)", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"K_4", complete_graph(4)},
      {"K_{2,3}", complete_bipartite_graph(2, 3)},
      {"K_{2,4}", complete_bipartite_graph(2, 4)},
      {"paw (triangle plus pendant)", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})},
      {"bull", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}})},
      {"house", Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})},
      {"two triangles sharing a vertex", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})},
      {"double star (2,3)", Graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}})},
      {"4-cycle with chord and tail", Graph(6, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}})},
  };
}

// --- identities -------------------------------------------------------------

std::vector<CrossCheck> identities_suite() {
  using namespace identities;
  std::vector<CrossCheck> out;

  {
    Tally t("story identity grid (x,y<=4, w-z in x..x+4, z in {1,2,3/2,5/2,7/3})");
    const std::vector<Rat> zs{Rat(1), Rat(2), Rat(3, 2), Rat(5, 2), Rat(7, 3)};
    for (int x = 1; x <= 4; ++x)
      for (int y = 1; y <= 4; ++y)
        for (int zp = x; zp <= x + 4; ++zp)
          for (const auto& z : zs) guarded(t, [&] {
            auto c = verify_story(x, y, z, z + zp);
            t.record(c.holds, [&] { return c.describe(); });
          });
    out.push_back(t.result());
  }
  {
    Tally t("story identity as a polynomial in w (z'+2 non-integer points each)");
    for (int x = 1; x <= 4; ++x)
      for (int y = 1; y <= 4; ++y)
        for (int zp = x; zp <= x + 4; ++zp)
          for (int p = 0; p < zp + 2; ++p) guarded(t, [&] {
            auto c = verify_story_polynomial(x, y, zp, Rat(2 * p + 1, 2) - 3);
            t.record(c.holds, [&] { return c.describe(); });
          });
    out.push_back(t.result());
  }
  {
    Tally t("binomial-sum lemma, full legal grid m,n<=6");
    for (int m = 1; m <= 6; ++m)
      for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
          for (int s = 0; s < m + n - k - 1; ++s) guarded(t, [&] {
            auto c = verify_binomial_sum(m, n, k, s);
            t.record(c.holds, [&] { return c.describe(); });
          });
    out.push_back(t.result());
  }
  {
    Tally t("induction lemma, full legal grid m,n<=5");
    Tally ends("induction lemma l=k endpoint scaling, m,n<=5");
    std::uint64_t zero_branch = 0, positive_branch = 0;
    for (int m = 1; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
          for (int s = 0; s < m + n - k - 1; ++s) {
            const int i0 = std::max(0, s + 2 * k + 2 - m - n);
            for (int l = i0; l <= k; ++l) guarded(t, [&] {
              auto c = verify_induction_lemma(m, n, k, s, l);
              (i0 == 0 ? zero_branch : positive_branch)++;
              t.record(c.holds, [&] { return c.describe(); });
            });
            guarded(ends, [&] {
              auto c = verify_induction_lemma_endpoint(m, n, k, s);
              ends.record(c.holds, [&] { return c.describe(); });
            });
          }
    t.note("i0=0 cases: " + std::to_string(zero_branch) + ", i0>0 cases: " + std::to_string(positive_branch));
    if (zero_branch == 0 || positive_branch == 0) t.record(false, [] { return std::string("a branch of i0 is uncovered"); });
    out.push_back(t.result());
    out.push_back(ends.result());
  }
  {
    Tally t("induction theorem, all 1<=k<=n-1, m,n<=4");
    Tally closed("induction theorem sides equal (mn)!/(m+n-1)! and (mn-1)! * Stanley inner sum, m,n<=4");
    for (int m = 1; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n) {
        guarded(closed, [&] {
          const auto lhs = induction_theorem_lhs(m, n).as_rational();
          const Rat target(bigmath::factorial(static_cast<unsigned>(m * n)),
                           bigmath::factorial(static_cast<unsigned>(m + n - 1)));
          const Rat via_stanley =
              Rat(bigmath::factorial(static_cast<unsigned>(m * n - 1))) * closed_forms::stanley_sum(m, n).inner_sum;
          closed.record(lhs && *lhs == target && *lhs == via_stanley, [&] {
            return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lhs=" +
                   (lhs ? bigmath::to_string(*lhs) : std::string("irreducible"));
          });
        });
        for (int k = 1; k <= n - 1; ++k) guarded(t, [&] {
          auto c = verify_induction_theorem(m, n, k);
          t.record(c.holds, [&] { return c.describe(); });
        });
      }
    out.push_back(t.result());
    out.push_back(closed.result());
  }
  {
    Tally t("lemma_a1_check iff all entries are 1 (d<=6, entries<=5)");
    for (int d = 3; d <= 6; ++d) {
      std::vector<int> s(static_cast<std::size_t>(d - 1), 1);
      // Nondecreasing sequences over 1..5 in lexicographic order.
      for (;;) {
        const bool all_ones = std::all_of(s.begin(), s.end(), [](int v) { return v == 1; });
        const bool holds = lemma_a1_check(s, d);
        t.record(holds == all_ones, [&] {
          std::string out = "d=" + std::to_string(d) + " s=(";
          for (int v : s) out += std::to_string(v) + ",";
          return out + ")";
        });
        int i = d - 2;
        while (i >= 0 && s[i] == 5) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < d - 1; ++j) s[j] = s[i];
      }
    }
    out.push_back(t.result());
  }
  {
    Tally a2("lemma_a2_check holds for 2<=d1<=d2<=12");
    Tally a3("lemma_a3_check iff d1=2 and d2<=4, for d1<=d2<=12");
    for (int d1 = 2; d1 <= 12; ++d1)
      for (int d2 = d1; d2 <= 12; ++d2) {
        auto where = [&] { return "d1=" + std::to_string(d1) + " d2=" + std::to_string(d2); };
        a2.record(lemma_a2_check(d1, d2), where);
        a3.record(lemma_a3_check(d1, d2) == (d1 == 2 && d2 <= 4), where);
      }
    out.push_back(a2.result());
    out.push_back(a3.result());
  }
  return out;
}

// --- trees ----------------------------------------------------------------

std::vector<CrossCheck> trees_suite(int max_n) {
  std::vector<CrossCheck> out;
  Tally hook("hook product vs rooted DP, every root of every labeled tree n<=" + std::to_string(max_n));
  Tally roots("root-ratio propagation vs rooted DP, n<=" + std::to_string(max_n));
  Tally total("half-sum tree count vs DP, n<=" + std::to_string(max_n));
  Tally seeds("propagation independent of seed vertex (3 seeds per tree)");
  Tally ratio("adjacent-root ratio as an integer identity, every edge");
  Tally weights("weights: W(u) F(T_v) = F(T_u) and F(T_v) sum W = 2 F(T)");

  for (int n = 1; n <= max_n; ++n) {
    SplitMix64 rng(0x5eedULL + static_cast<std::uint64_t>(n));
    for_each_tree(n, [&](const Graph& g) {
      auto where = [&] { return edges_str(g); };
      std::vector<Nat> rooted_dp(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) rooted_dp[v] = oracle::count_rooted_shellings_dp(g, v);
      const Nat dp = oracle::count_shellings_dp(g);

      for (Vertex v = 0; v < n; ++v) hook.record(tree::hook_count(tree::root_tree(g, v)) == rooted_dp[v], where);
      const auto counts = tree::all_root_counts(g);
      roots.record(counts == rooted_dp, where);
      const Nat tc = tree::tree_count(g);
      total.record(tc == dp, where);

      for (int i = 0; i < 3; ++i) {
        const auto seed = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(n)));
        seeds.record(tree::all_root_counts(g, seed) == counts, where);
      }
      for (const auto& [u, v] : g.edges()) {
        const int s = tree::root_tree(g, u).subtree_size[v];  // |T_u(v)|
        ratio.record(counts[v] * (n - s) == counts[u] * s, where);
      }
      const auto w = tree::weights(g, 0);
      bool ok = true;
      for (Vertex u = 0; u < n; ++u) ok = ok && w.weights[u] * Rat(counts[0]) == Rat(counts[u]);
      ok = ok && (n == 1 || Rat(counts[0]) * w.total() == Rat(2 * tc));
      weights.record(ok, where);
    });
  }
  for (auto* t : {&hook, &roots, &total, &seeds, &ratio, &weights}) out.push_back(t->result());

  Tally paths("path anchors: F = 2^(n-2), F(T_{v_i}) = C(n-1,i-1), n<=20");
  for (int n = 2; n <= 20; ++n) {
    const Graph p = path_graph(n);
    const auto counts = tree::all_root_counts(p);
    bool ok = tree::tree_count(p) == closed_forms::path_count(n);
    for (int i = 1; i <= n; ++i) ok = ok && counts[i - 1] == closed_forms::rooted_path_count(n, i);
    paths.record(ok, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(paths.result());

  Tally oracle_agree("enumeration count vs subset DP on the <=8-edge corpus");
  Tally relabel_inv("subset DP invariant under random relabeling (corpus, 5 permutations each)");
  SplitMix64 rng(2024);
  for (const auto& [name, g] : oracle_corpus()) {
    guarded(oracle_agree, [&] {
      const auto e = oracle::enumerate_shellings(g, 0);
      const Nat dp = oracle::count_shellings_dp(g);
      oracle_agree.record(Nat(e.total) == dp, [&] { return name + ": " + std::to_string(e.total) + " vs " + dp.str(); });
    });
    const Nat base = oracle::count_shellings_dp(g);
    for (int i = 0; i < 5; ++i) {
      std::vector<Vertex> perm(static_cast<std::size_t>(g.num_vertices()));
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t j = perm.size(); j > 1; --j) std::swap(perm[j - 1], perm[rng.uniform(j)]);
      relabel_inv.record(oracle::count_shellings_dp(relabel(g, perm)) == base, [&] { return name; });
    }
  }
  out.push_back(oracle_agree.result());
  out.push_back(relabel_inv.result());
  return out;
}

// --- bipartite and complete ------------------------------------------------

std::vector<CrossCheck> bipartite_suite(int max_dp_edges) {
  std::vector<CrossCheck> out;
  Tally dp("K_{m,n} closed form vs subset DP, mn<=16");
  for (int m = 1; m <= 16; ++m)
    for (int n = m; m * n <= 16; ++n) {
      if (m * n > max_dp_edges) continue;
      const Nat formula = closed_forms::complete_bipartite_count(m, n);
      const Nat brute = oracle::count_shellings_dp(complete_bipartite_graph(m, n), max_dp_edges);
      dp.record(formula == brute, [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + formula.str() + " vs " + brute.str();
      });
    }
  out.push_back(dp.result());

  Tally stanley("K_{m,n} closed form vs Stanley sum, 1<=m<=n<=5");
  Tally symmetric("K_{m,n} closed form symmetric in (m,n), m,n<=8");
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 5; ++n) {
      guarded(stanley, [&] {
        stanley.record(closed_forms::stanley_sum_count(m, n) == closed_forms::complete_bipartite_count(m, n),
                       [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
      });
    }
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      symmetric.record(closed_forms::complete_bipartite_count(m, n) == closed_forms::complete_bipartite_count(n, m));
  out.push_back(stanley.result());
  out.push_back(symmetric.result());

  Tally kn("K_n formula vs subset DP, n in 2..5 (K_4 = 576)");
  for (int n = 2; n <= 5; ++n) {
    const Nat formula = closed_forms::complete_graph_count(n);
    kn.record(formula == oracle::count_shellings_dp(complete_graph(n)), [&] { return "n=" + std::to_string(n); });
  }
  kn.record(closed_forms::complete_graph_count(4) == 576, [] { return std::string("K_4 anchor"); });
  out.push_back(kn.result());
  return out;
}

// --- bounds ---------------------------------------------------------------

std::vector<CrossCheck> bounds_suite(int max_n) {
  std::vector<CrossCheck> out;
  const std::string range = "n<=" + std::to_string(max_n);
  Tally degree("degree lower bound holds, " + range);
  Tally degree_eq("degree bound tight exactly on paths and stars, " + range);
  Tally weight("weight bound F(T) <= [sum_{k<l} C(n-2,k)] F(T_v), every root, " + range);
  Tally push("push-away-from-root step keeps n and descending length, never decreases sum W, " + range);
  Tally push_fix("push fixpoint: off-path vertices hang on v_{l-1}, sum W = 2 sum_{i<l} C(n-2,i), " + range);
  Tally pull("pull-toward-middle step keeps diameter, never decreases F, " + range);
  Tally pull_fix("pull fixpoint is the mid-spider, " + range);
  Tally printed("printed diameter bound holds, " + range);
  Tally spider("F(T) <= F(mid-spider(n, diameter)), equality iff mid-spider shape, " + range);

  std::map<std::pair<int, int>, Nat> spider_count;
  std::map<std::pair<int, int>, Rat> spider_gap;
  auto spider_exact = [&](int n, int l) -> const Nat& {
    auto key = std::pair{n, l};
    auto it = spider_count.find(key);
    if (it == spider_count.end()) it = spider_count.emplace(key, tree::tree_count(bounds::mid_spider(n, l))).first;
    return it->second;
  };

  for (int n = 2; n <= max_n; ++n) {
    for_each_tree(n, [&](const Graph& g) {
      auto where = [&] { return edges_str(g); };
      guarded(degree, [&] {
        const auto counts = tree::all_root_counts(g);
        const Nat exact = std::accumulate(counts.begin(), counts.end(), Nat(0)) / 2;
        const auto lower = bounds::degree_lower_bound(g);
        degree.record(lower.bound <= exact, where);
        degree_eq.record((lower.bound == exact) == lower.equality_predicted, where);

        for (Vertex v = 0; v < n; ++v) {
          weight.record(exact <= bounds::weight_bound_coefficient(g, v) * counts[v], where);

          const int ecc = eccentricity(g, v);
          if (auto next = bounds::push_branch_from_root(g, v)) {
            const bool ok = next->num_vertices() == n && is_tree(*next) && eccentricity(*next, v) == ecc &&
                            tree::weights(*next, v).total() >= tree::weights(g, v).total();
            push.record(ok, [&] { return where() + " root " + std::to_string(v); });
          }
        }

        const int l = tree_diameter(g).length;
        printed.record(Rat(exact) <= bounds::diameter_upper_bound_printed(n, l), where);
        const Nat& best = spider_exact(n, l);
        spider.record(exact <= best && ((exact == best) == bounds::is_mid_spider_shape(g)), where);
        spider_gap.emplace(std::pair{n, l}, bounds::diameter_upper_bound_printed(n, l) / Rat(best));

        if (auto next = bounds::pull_branch_toward_middle(g)) {
          pull.record(tree_diameter(*next).length == l && tree::tree_count(*next) >= exact, where);
        }
      });
    });
  }

  // Fixpoints: every tree, every root for push; every tree for pull.
  for (int n = 2; n <= max_n; ++n) {
    for_each_tree(n, [&](const Graph& g) {
      auto where = [&] { return edges_str(g); };
      guarded(pull_fix, [&] {
        const Graph fix = bounds::pull_to_fixpoint(g);
        const int l = tree_diameter(g).length;
        pull_fix.record(bounds::is_mid_spider_shape(fix) && tree::tree_count(fix) == spider_exact(n, l), where);
      });
      for (Vertex v = 0; v < n; ++v) guarded(push_fix, [&] {
        const Graph fix = bounds::push_to_fixpoint(g, v);
        const auto path = longest_path_from(fix, v);
        const int l = static_cast<int>(path.size()) - 1;
        std::vector<bool> on_path(static_cast<std::size_t>(n), false);
        for (Vertex u : path) on_path[u] = true;
        bool ok = l == eccentricity(g, v);
        for (Vertex u = 0; u < n && ok; ++u)
          ok = on_path[u] || (fix.degree(u) == 1 && fix.neighbors(u).front() == path[l - 1]);
        Nat expect = 0;
        for (int i = 0; i < l; ++i) expect += binomial(Nat(n - 2), Nat(i));
        ok = ok && tree::weights(fix, v).total() == Rat(2 * expect);
        push_fix.record(ok, [&] { return where() + " root " + std::to_string(v); });
      });
    });
  }

  std::string gaps;
  for (const auto& [key, gap] : spider_gap) {
    if (!gaps.empty()) gaps += ", ";
    gaps += "(n=" + std::to_string(key.first) + ",l=" + std::to_string(key.second) + "):" + bigmath::to_string(gap);
  }
  printed.note("printed/mid-spider ratio " + gaps);

  for (auto* t : {&degree, &degree_eq, &weight, &push, &push_fix, &pull, &pull_fix, &printed, &spider})
    out.push_back(t->result());

  Tally brooms("broom families: (2,3) broom F = 2^(n-1)-2, (2,4) broom F = 6(2^(n-2)-n+1), n<=10");
  for (int n = 5; n <= 10; ++n) {
    const Graph b3 = broom_graph(n - 2, 2);
    brooms.record(tree::tree_count(b3) == (Nat(1) << (n - 1)) - 2 &&
                      bounds::degree_lower_bound(b3).bound == 6 * (Nat(1) << (n - 4)),
                  [&] { return "(2,3) n=" + std::to_string(n); });
    if (n >= 6) {
      const Graph b4 = broom_graph(n - 3, 3);
      brooms.record(tree::tree_count(b4) == 6 * ((Nat(1) << (n - 2)) - n + 1) &&
                        bounds::degree_lower_bound(b4).bound == 24 * (Nat(1) << (n - 5)),
                    [&] { return "(2,4) n=" + std::to_string(n); });
    }
  }
  out.push_back(brooms.result());

  Tally tight("weight bound tight at star centers and path ends, n in 2.." + std::to_string(max_n));
  for (int n = 2; n <= max_n; ++n) {
    const Graph star = star_graph(n);
    const Graph path = path_graph(n);
    tight.record(tree::tree_count(star) == bounds::weight_bound_coefficient(star, 0) * tree::hook_count(tree::root_tree(star, 0)),
                 [&] { return "star n=" + std::to_string(n); });
    tight.record(tree::tree_count(path) == bounds::weight_bound_coefficient(path, 0) * tree::hook_count(tree::root_tree(path, 0)),
                 [&] { return "path n=" + std::to_string(n); });
  }
  out.push_back(tight.result());

  Tally pins("printed-vs-exact regression pins: (3,2) 4 vs 2, (4,3) 8 vs 4, (5,4) 16 vs 8");
  for (auto [n, l, printed_value, exact] : {std::tuple{3, 2, 4, 2}, std::tuple{4, 3, 8, 4}, std::tuple{5, 4, 16, 8}}) {
    pins.record(bounds::diameter_upper_bound_printed(n, l) == printed_value &&
                    tree::tree_count(bounds::mid_spider(n, l)) == exact,
                [&] { return "n=" + std::to_string(n) + " l=" + std::to_string(l); });
  }
  out.push_back(pins.result());
  return out;
}

}  // namespace shellcount::sweeps
