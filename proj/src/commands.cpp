#include "shellcount/commands.hpp"

#include "shellcount/bigmath.hpp"
#include "shellcount/bounds.hpp"
#include "shellcount/closed_forms.hpp"
#include "shellcount/sweeps.hpp"
#include "shellcount/tree_shelling.hpp"

#include <chrono>
#include <numeric>

namespace shellcount::commands {

using nlohmann::json;
using report::CrossCheck;
using report::Report;
using report::Status;

namespace {

template <typename Fn>
auto timed(Report& r, const std::string& key, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto value = fn();
  r.timing_ms[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return value;
}

report::InputSummary summarize(const Graph& g) {
  return {g.num_vertices(), g.num_edges(), to_string(classify(g).kind), {}};
}

CrossCheck agree(const std::string& name, const Nat& a, const Nat& b) {
  const bool ok = a == b;
  return {name, ok ? Status::Pass : Status::Fail, a.str() + (ok ? " == " : " != ") + b.str(), 1};
}

CrossCheck predicate(const std::string& name, bool ok, std::string detail) {
  return {name, ok ? Status::Pass : Status::Fail, std::move(detail), 1};
}

json strings(const std::vector<Nat>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

void expect_params(const std::string& what, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw UsageError(what + ": expected " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
}

void expect_range(const std::string& what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw UsageError(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                     std::to_string(value));
}

void require_tree_input(const Graph& g) {
  if (!is_tree(g)) throw NotATreeError("input is not a tree");
}

}  // namespace

Report cmd_count(const Graph& g, const CountOptions& opts) {
  Report r;
  r.command = "count";
  r.input = summarize(g);
  const GraphClass cls = classify(g);

  if (!cls.connected) {
    r.results["count"] = "0";
    r.results["method"] = "disconnected";
    return r;
  }

  const bool dp_fits = g.num_edges() <= opts.max_dp_edges;
  std::optional<Nat> formula;
  std::string method;
  if (cls.tree) {
    const bool path = cls.path && g.num_vertices() >= 2;
    method = path ? "path" : "tree";
    formula = timed(r, method, [&] { return path ? closed_forms::path_count(g.num_vertices()) : tree::tree_count(g); });
    if (path) r.results["tree"] = tree::tree_count(g).str();
  } else if (cls.complete) {
    method = "complete";
    formula = timed(r, method, [&] { return closed_forms::complete_graph_count(g.num_vertices()); });
  } else if (cls.bipartite_parts) {
    method = "complete_bipartite";
    const auto [m, n] = *cls.bipartite_parts;
    formula = timed(r, method, [&] { return closed_forms::complete_bipartite_count(m, n); });
  }
  if (formula) r.results[method] = formula->str();

  const bool run_dp = opts.brute || !formula || (opts.crosscheck && dp_fits);
  std::optional<Nat> dp;
  if (run_dp) {
    dp = timed(r, "dp", [&] { return oracle::count_shellings_dp(g, opts.max_dp_edges); });
    r.results["dp"] = dp->str();
  }
  if (formula && dp) r.cross_checks.push_back(agree(method + " vs dp", *formula, *dp));
  if (formula && !dp && opts.crosscheck)
    r.cross_checks.push_back({method + " vs dp", Status::Skipped,
                              std::to_string(g.num_edges()) + " edges exceed the DP guard of " +
                                  std::to_string(opts.max_dp_edges),
                              0});
  if (method == "path") r.cross_checks.push_back(agree("path vs tree", *formula, tree::tree_count(g)));

  const bool use_dp = opts.brute || !formula;
  r.results["count"] = (use_dp ? *dp : *formula).str();
  r.results["method"] = use_dp ? "dp" : method;
  return r;
}

Report cmd_tree_roots(const Graph& g) {
  require_tree_input(g);
  Report r;
  r.command = "tree-roots";
  r.input = summarize(g);
  const int n = g.num_vertices();

  const auto counts = timed(r, "propagation", [&] { return tree::all_root_counts(g); });
  const Nat sum = std::accumulate(counts.begin(), counts.end(), Nat(0));
  const Nat total = n == 1 ? Nat(1) : sum / 2;
  r.results["rootCounts"] = strings(counts);
  r.results["total"] = total.str();

  const auto direct = timed(r, "hook", [&] {
    std::vector<Nat> out;
    for (Vertex v = 0; v < n; ++v) out.push_back(tree::hook_count(tree::root_tree(g, v)));
    return out;
  });
  r.cross_checks.push_back(predicate("propagation vs per-root hook product", direct == counts,
                                     std::to_string(n) + " roots compared"));
  if (n >= 2) {
    r.cross_checks.push_back(
        predicate("root counts sum to twice the total", sum % 2 == 0 && sum == 2 * total, "sum " + sum.str()));
  }
  return r;
}

Report cmd_formula(const std::string& family, const std::vector<int>& params, std::uint64_t stanley_limit) {
  Report r;
  r.command = "formula";
  for (std::size_t i = 0; i < params.size(); ++i) r.input.params["p" + std::to_string(i + 1)] = std::to_string(params[i]);
  r.input.params["family"] = family;

  if (family == "kn") {
    expect_params("kn", params, 1);
    const int n = params[0];
    expect_range("n", n, 2, 2000);
    r.input = {n, n * (n - 1) / 2, to_string(GraphKind::Complete), r.input.params};
    r.results["count"] = timed(r, "complete", [&] { return closed_forms::complete_graph_count(n); }).str();
  } else if (family == "kmn" || family == "stanley") {
    expect_params(family, params, 2);
    const int m = params[0], n = params[1];
    expect_range("m", m, 1, 2000);
    expect_range("n", n, 1, 2000);
    r.input = {m + n, m * n, to_string(GraphKind::CompleteBipartite), r.input.params};
    const Nat closed = timed(r, "complete_bipartite", [&] { return closed_forms::complete_bipartite_count(m, n); });
    if (family == "kmn") {
      r.results["count"] = closed.str();
    } else {
      const auto st = timed(r, "stanley", [&] { return closed_forms::stanley_sum(m, n, stanley_limit); });
      r.results["count"] = st.count.str();
      r.results["innerSum"] = bigmath::to_string(st.inner_sum);
      r.results["terms"] = std::to_string(st.terms);
      r.results["complete_bipartite"] = closed.str();
      r.cross_checks.push_back(agree("stanley vs complete_bipartite", st.count, closed));
    }
  } else if (family == "path") {
    expect_params("path", params, 1);
    const int n = params[0];
    expect_range("n", n, 2, 100000);
    r.input = {n, n - 1, to_string(GraphKind::Path), r.input.params};
    r.results["count"] = timed(r, "path", [&] { return closed_forms::path_count(n); }).str();
  } else {
    throw UsageError("unknown formula family '" + family + "' (expected kn, kmn, stanley or path)");
  }
  return r;
}

Report cmd_bounds(const Graph& g) {
  require_tree_input(g);
  if (g.num_vertices() < 2) throw UsageError("bounds: need a tree with at least 2 vertices");
  Report r;
  r.command = "bounds";
  r.input = summarize(g);
  const auto b = timed(r, "bounds", [&] { return bounds::bound_report(g); });

  r.results["exact"] = b.exact.str();
  r.results["degreeLower"] = b.degree_lower.str();
  r.results["degreeEqualityPredicted"] = b.degree_equality_predicted;
  r.results["diameter"] = std::to_string(b.diameter);
  r.results["diameterUpperPrinted"] = bigmath::to_string(b.diameter_upper_printed);
  r.results["midSpiderExact"] = b.mid_spider_exact.str();
  r.results["midSpiderShape"] = b.mid_spider_shape;
  r.results["rootCounts"] = strings(b.root_counts);
  r.results["weightCoefficients"] = strings(b.per_root_weight_bounds);
  r.results["printedGap"] = bigmath::to_string(b.printed_gap());

  r.cross_checks.push_back(predicate("degree lower bound", b.degree_bound_holds(),
                                     b.degree_lower.str() + " <= " + b.exact.str() +
                                         (b.degree_equality_predicted ? " (equality predicted)" : "")));
  if (b.degree_equality_predicted != (b.degree_lower == b.exact))
    r.cross_checks.push_back(predicate("degree bound equality case", false, "equality prediction mismatch"));
  r.cross_checks.push_back(predicate("weight bound at every root", b.weight_bounds_hold(),
                                     std::to_string(b.root_counts.size()) + " roots"));
  r.cross_checks.push_back(predicate("printed diameter bound", b.printed_bound_holds(),
                                     b.exact.str() + " <= " + bigmath::to_string(b.diameter_upper_printed)));
  r.cross_checks.push_back(predicate("mid-spider bound", b.mid_spider_bound_holds(),
                                     b.exact.str() + " <= " + b.mid_spider_exact.str() + ", printed/extremal " +
                                         bigmath::to_string(b.printed_gap())));
  return r;
}

Report cmd_verify(const std::string& suite, std::optional<int> max_n, int max_dp_edges) {
  Report r;
  r.command = "verify";
  r.input.graph_class = "none";
  r.input.params["suite"] = suite;
  if (max_n) r.input.params["maxN"] = std::to_string(*max_n);
  if (max_n) expect_range("--max-n", *max_n, 1, 10);

  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "trees" && suite != "bipartite" && suite != "bounds")
    throw UsageError("unknown suite '" + suite + "' (expected identities, trees, bipartite, bounds or all)");

  auto run = [&](const std::string& name, auto&& fn) {
    if (!all && suite != name) return;
    auto checks = timed(r, name, fn);
    r.cross_checks.insert(r.cross_checks.end(), checks.begin(), checks.end());
  };
  run("identities", [] { return sweeps::identities_suite(); });
  run("trees", [&] { return sweeps::trees_suite(max_n.value_or(sweeps::kDefaultTreeMaxN)); });
  run("bipartite", [&] { return sweeps::bipartite_suite(max_dp_edges); });
  run("bounds", [&] { return sweeps::bounds_suite(max_n.value_or(sweeps::kDefaultBoundsMaxN)); });

  std::uint64_t cases = 0, failed = 0;
  for (const auto& c : r.cross_checks) {
    cases += c.cases;
    failed += c.status == Status::Fail;
  }
  r.results["checks"] = std::to_string(r.cross_checks.size());
  r.results["cases"] = std::to_string(cases);
  r.results["failedChecks"] = std::to_string(failed);
  return r;
}

std::string cmd_gen(const std::string& kind, const std::vector<int>& params, std::uint64_t seed) {
  if (kind == "tree") {
    expect_params("tree", params, 1);
    expect_range("n", params[0], 1, 100000);
    return format_edge_list(random_tree(params[0], seed));
  }
  if (kind == "all-trees") {
    expect_params("all-trees", params, 1);
    expect_range("n", params[0], 1, 9);
    std::string out;
    LabeledTrees gen(params[0]);
    std::uint64_t i = 0;
    while (auto t = gen.next()) out += "# tree " + std::to_string(++i) + "\n" + format_edge_list(*t);
    return out;
  }
  if (kind == "kmn") {
    expect_params("kmn", params, 2);
    expect_range("m", params[0], 1, 1000);
    expect_range("n", params[1], 1, 1000);
    return format_edge_list(complete_bipartite_graph(params[0], params[1]));
  }
  if (kind == "kn") {
    expect_params("kn", params, 1);
    expect_range("n", params[0], 1, 1000);
    return format_edge_list(complete_graph(params[0]));
  }
  if (kind == "path") {
    expect_params("path", params, 1);
    expect_range("n", params[0], 1, 100000);
    return format_edge_list(path_graph(params[0]));
  }
  if (kind == "mid-spider") {
    expect_params("mid-spider", params, 2);
    expect_range("n", params[0], 2, 100000);
    expect_range("l", params[1], 1, params[0] - 1);
    return format_edge_list(bounds::mid_spider(params[0], params[1]));
  }
  throw UsageError("unknown generator '" + kind + "' (expected tree, all-trees, kmn, kn, path or mid-spider)");
}

}  // namespace shellcount::commands
