#include "shellcount/oracle.hpp"

#include <bit>
#include <string>

namespace shellcount::oracle {

namespace {

std::vector<std::uint32_t> endpoint_masks(const Graph& g) {
  std::vector<std::uint32_t> ends;
  ends.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) ends.push_back((1u << u) | (1u << v));
  return ends;
}

void check_guard(const Graph& g, int max_edges) {
  if (g.num_edges() > max_edges) {
    throw GuardError("subset DP: " + std::to_string(g.num_edges()) + " edges exceeds the guard of " +
                     std::to_string(max_edges));
  }
  if (g.num_edges() > 0 && g.num_vertices() > 32) {
    throw GuardError("subset DP: more than 32 vertices");
  }
}

}  // namespace

SubsetTable::SubsetTable(const Graph& g, std::optional<Vertex> root, int max_edges) {
  if (root && !g.has_vertex(*root)) throw std::out_of_range("subset DP: bad root vertex " + std::to_string(*root));
  build(g, root, max_edges);
}

void SubsetTable::build(const Graph& g, std::optional<Vertex> root, int max_edges) {
  check_guard(g, max_edges);
  m_ = g.num_edges();
  const std::size_t size = std::size_t{1} << m_;
  const auto ends = endpoint_masks(g);

  counts_.assign(size, Nat(0));
  connected_.assign(size, false);
  std::vector<std::uint32_t> touched(size, 0);  // vertex set of each subset
  counts_[0] = 1;
  connected_[0] = true;

  // S \ {e} < S numerically, so ascending order visits predecessors first.
  for (std::uint32_t s = 1; s < size; ++s) {
    const std::uint32_t low = s & (0u - s);
    touched[s] = touched[s & (s - 1)] | ends[static_cast<std::size_t>(std::countr_zero(low))];
    if (std::has_single_bit(s)) {
      connected_[s] = true;
      const auto e = static_cast<std::size_t>(std::countr_zero(s));
      counts_[s] = !root || ((ends[e] >> *root) & 1u) ? 1 : 0;
      continue;
    }
    Nat total = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (0u - rest);
      const std::uint32_t prev = s ^ bit;
      if (!connected_[prev]) continue;
      const auto e = static_cast<std::size_t>(std::countr_zero(bit));
      if ((touched[prev] & ends[e]) == 0) continue;
      connected_[s] = true;
      total += counts_[prev];
    }
    counts_[s] = std::move(total);
  }
}

Nat count_shellings_dp(const Graph& g, int max_edges) {
  if (!is_connected(g)) return 0;
  return SubsetTable(g, std::nullopt, max_edges).full();
}

Nat count_rooted_shellings_dp(const Graph& g, Vertex v, int max_edges) {
  if (!g.has_vertex(v)) throw std::out_of_range("count_rooted_shellings_dp: bad vertex " + std::to_string(v));
  if (!is_connected(g)) return 0;
  return SubsetTable(g, v, max_edges).full();
}

namespace {

struct Backtracker {
  const std::vector<std::uint32_t>& ends;
  std::size_t limit;
  Enumeration& out;
  std::vector<int> prefix;
  std::uint32_t used = 0;
  std::uint32_t touched = 0;

  void run() {
    if (prefix.size() == ends.size()) {
      ++out.total;
      if (out.orderings.size() < limit) out.orderings.push_back(prefix);
      return;
    }
    for (std::size_t e = 0; e < ends.size(); ++e) {
      if ((used >> e) & 1u) continue;
      if (!prefix.empty() && (touched & ends[e]) == 0) continue;
      const std::uint32_t saved = touched;
      used |= 1u << e;
      touched |= ends[e];
      prefix.push_back(static_cast<int>(e));
      run();
      prefix.pop_back();
      touched = saved;
      used &= ~(1u << e);
    }
  }
};

}  // namespace

Enumeration enumerate_shellings(const Graph& g, std::size_t limit) {
  if (g.num_edges() > kMaxEnumerateEdges) {
    throw GuardError("enumerate_shellings: " + std::to_string(g.num_edges()) + " edges exceeds the guard of " +
                     std::to_string(kMaxEnumerateEdges));
  }
  check_guard(g, kMaxEnumerateEdges);
  Enumeration out;
  if (!is_connected(g)) return out;
  const auto ends = endpoint_masks(g);
  Backtracker bt{ends, limit, out, {}, 0, 0};
  bt.run();
  return out;
}

}  // namespace shellcount::oracle
