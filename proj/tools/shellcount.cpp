// shellcount: count and verify graph shellings in exact arithmetic.
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include "shellcount/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace shellcount;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw commands::UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const report::Report& r, bool table) {
  std::cout << nlohmann::json(r).dump(2) << "\n";
  if (table) std::cerr << report::render_table(r);
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shelling counts for graphs"};
  app.require_subcommand(1);
  bool no_table = false;
  app.add_flag("--no-table", no_table, "Do not print the summary table to stderr");

  std::string file;
  commands::CountOptions count_opts;
  bool no_crosscheck = false;
  auto* count = app.add_subcommand("count", "Count shellings of the graph in an edge-list file");
  count->add_option("file", file, "Edge-list file, or - for stdin")->required();
  count->add_flag("--brute", count_opts.brute, "Answer with the subset DP even when a formula applies");
  count->add_flag("--no-crosscheck", no_crosscheck, "Skip the DP cross-check");
  count->add_option("--max-dp-edges", count_opts.max_dp_edges, "Edge limit for the subset DP")
      ->check(CLI::Range(1, 30));

  auto* roots = app.add_subcommand("tree-roots", "Per-root shelling counts of a tree");
  roots->add_option("file", file, "Edge-list file, or - for stdin")->required();

  std::string family;
  std::vector<int> params;
  std::uint64_t stanley_limit = 1'000'000;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form: kn N | kmn M N | stanley M N | path N");
  formula->add_option("family", family, "kn, kmn, stanley or path")->required();
  formula->add_option("params", params, "Integer parameters")->required();
  formula->add_option("--stanley-limit", stanley_limit, "Maximum number of Stanley-sum terms");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the tree bounds against the exact count");
  bounds->add_option("file", file, "Edge-list file, or - for stdin")->required();

  std::string suite;
  std::optional<int> max_n;
  int verify_dp_edges = oracle::kDefaultMaxDpEdges;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", suite, "identities, trees, bipartite, bounds or all")->required();
  verify->add_option("--max-n", max_n, "Vertex limit for the tree and bounds sweeps");
  verify->add_option("--max-dp-edges", verify_dp_edges, "Edge limit for the subset DP")->check(CLI::Range(1, 30));

  std::string kind;
  std::vector<int> gen_params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Write an edge list: tree N | all-trees N | kmn M N | kn N | path N | mid-spider N L");
  gen->add_option("kind", kind, "tree, all-trees, kmn, kn, path or mid-spider")->required();
  gen->add_option("params", gen_params, "Integer parameters")->required();
  gen->add_option("--seed", seed, "Seed for random trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool table = !no_table;
  try {
    if (*count) {
      count_opts.crosscheck = !no_crosscheck;
      return emit(commands::cmd_count(parse_edge_list(read_input(file)), count_opts), table);
    }
    if (*roots) return emit(commands::cmd_tree_roots(parse_edge_list(read_input(file))), table);
    if (*formula) return emit(commands::cmd_formula(family, params, stanley_limit), table);
    if (*bounds) return emit(commands::cmd_bounds(parse_edge_list(read_input(file))), table);
    if (*verify) return emit(commands::cmd_verify(suite, max_n, verify_dp_edges), table);
    if (*gen) {
      std::cout << commands::cmd_gen(kind, gen_params, seed);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
