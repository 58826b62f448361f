#pragma once

#include "shellcount/bigmath.hpp"

#include <cstdint>
#include <vector>

namespace shellcount::closed_forms {

inline constexpr std::uint64_t kDefaultStanleyTermLimit = 1'000'000;

/// 0/1 sequence with m-1 zeros and n-1 ones.
using ZeroOneSequence = std::vector<int>;
/// b_i = 1 + #{j <= i : a_j != a_i}.
using BSequence = std::vector<unsigned>;

/// F(K_n) = 2^(n-2) C(n,2)! / Catalan(n-1), n >= 2.
Nat complete_graph_count(int n);

/// F(K_{m,n}) = m! n! (mn)! / (m+n-1)!, m, n >= 1.
Nat complete_bipartite_count(int m, int n);

BSequence b_sequence(const ZeroOneSequence& alpha);

struct StanleySum {
  /// sum over alpha of prod b_i / prod (suffix sums of b).
  Rat inner_sum;
  /// m! n! (mn-1)! * inner_sum.
  Nat count;
  std::uint64_t terms = 0;
};

/// Evaluates the sum over all 0/1 sequences term by term in exact arithmetic.
StanleySum stanley_sum(int m, int n, std::uint64_t term_limit = kDefaultStanleyTermLimit);
Nat stanley_sum_count(int m, int n, std::uint64_t term_limit = kDefaultStanleyTermLimit);

/// 2^(n-2), n >= 2.
Nat path_count(int n);

/// C(n-1, i-1): shellings of the n-path rooted at its i-th vertex (1-based).
Nat rooted_path_count(int n, int i);

}  // namespace shellcount::closed_forms
