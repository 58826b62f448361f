#include "shellcount/closed_forms.hpp"

#include <algorithm>
#include <string>

namespace shellcount::closed_forms {

using bigmath::binomial;
using bigmath::exact_div;
using bigmath::factorial;

Nat complete_graph_count(int n) {
  if (n < 2) throw DomainError("complete_graph_count: n must be >= 2");
  const auto edges = static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2;
  Nat numerator = Nat(1) << (n - 2);
  numerator *= factorial(edges);
  return exact_div(numerator, bigmath::catalan(static_cast<unsigned>(n - 1)), "complete_graph_count");
}

Nat complete_bipartite_count(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("complete_bipartite_count: part sizes must be >= 1");
  const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
  Nat numerator = factorial(um) * factorial(un) * factorial(um * un);
  return exact_div(numerator, factorial(um + un - 1), "complete_bipartite_count");
}

BSequence b_sequence(const ZeroOneSequence& alpha) {
  BSequence b(alpha.size());
  unsigned seen[2] = {0, 0};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const int a = alpha[i];
    if (a != 0 && a != 1) throw DomainError("b_sequence: entries must be 0 or 1");
    ++seen[a];
    b[i] = 1 + seen[1 - a];
  }
  return b;
}

StanleySum stanley_sum(int m, int n, std::uint64_t term_limit) {
  if (m < 1 || n < 1) throw DomainError("stanley_sum: part sizes must be >= 1");
  const Nat terms = binomial(Nat(m + n - 2), Nat(n - 1));
  if (terms > term_limit) {
    throw DomainError("stanley_sum: " + terms.str() + " sequences exceed the limit of " + std::to_string(term_limit));
  }
  ZeroOneSequence alpha(static_cast<std::size_t>(m - 1), 0);
  alpha.insert(alpha.end(), static_cast<std::size_t>(n - 1), 1);

  StanleySum result;
  do {
    const BSequence b = b_sequence(alpha);
    Nat top = 1, bottom = 1, suffix = 0;
    for (auto i = b.size(); i-- > 0;) {
      top *= b[i];
      suffix += b[i];
      bottom *= suffix;
    }
    result.inner_sum += Rat(top, bottom);
    ++result.terms;
  } while (std::next_permutation(alpha.begin(), alpha.end()));

  const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
  const Rat total = Rat(factorial(um) * factorial(un) * factorial(um * un - 1)) * result.inner_sum;
  result.count = bigmath::to_nat(total, "stanley_sum");
  return result;
}

Nat stanley_sum_count(int m, int n, std::uint64_t term_limit) { return stanley_sum(m, n, term_limit).count; }

Nat path_count(int n) {
  if (n < 2) throw DomainError("path_count: n must be >= 2");
  return Nat(1) << (n - 2);
}

Nat rooted_path_count(int n, int i) {
  if (n < 2) throw DomainError("rooted_path_count: n must be >= 2");
  if (i < 1 || i > n) throw DomainError("rooted_path_count: i must lie in 1..n");
  return binomial(Nat(n - 1), Nat(i - 1));
}

}  // namespace shellcount::closed_forms
