#pragma once

#include "shellcount/bigmath.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shellcount::identities {

/// One instance of an identity, both sides evaluated exactly.
struct IdentityCase {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bigmath::GammaSum lhs;
  bigmath::GammaSum rhs;
  bool holds = false;

  std::string describe() const;
};

/// sum_{j=x}^{w-z} C(j,y) C(w-j,z) = sum_{i=max(0,x+y+z-w)}^{y} C(x,i) C(w-x+1, z+y-i+1)
/// for integers x, y >= 1, rational z > 0 and w - z an integer >= x.
IdentityCase verify_story(int x, int y, const Rat& z, const Rat& w);

/// The same identity with z' = w - z fixed, written with the lower entries
/// z'-j and z'-x-y+i so both sides are polynomials in w of degree <= z' - x.
/// Valid at any rational w.
IdentityCase verify_story_polynomial(int x, int y, int zprime, const Rat& w);

/// For 1 <= k < n, 0 <= s < m+n-k-1, with A = mk/(n-k), B = mn/(n-k):
///   sum_{t=s+1}^{m+n-k-1} (t-n+k+1)(t+2)...(t+k) C(B+n-k-t-2, A-1)
///     = m/(m+n-k) (s+2)...(s+k+1) C(B+n-k-s-2, A)
IdentityCase verify_binomial_sum(int m, int n, int k, int s);

/// The partial-sum identity behind the previous one, for i0 <= l <= k with
/// i0 = max(0, s+2k+2-m-n), i1 = max(0, s+2k+1-m-n), X = B+n-k-s-2:
///   sum_{i=i0}^{l} C(s+k+1,i) C(X, A+k-i) + (k-n)/k sum_{i=i1+1}^{l} C(s+k+1,i-1) C(X, A+k-i)
///     = (A+k-l)/(A+k) C(s+k+1,l) C(X, A+k-l)
IdentityCase verify_induction_lemma(int m, int n, int k, int s, int l);

/// The l = k right side equals 1/k! times the right side of verify_binomial_sum.
IdentityCase verify_induction_lemma_endpoint(int m, int n, int k, int s);

inline constexpr unsigned long long kDefaultTheoremTermLimit = 100'000;

/// R_j = (r_j-j+1) Gamma(mn/j+j-1-r_j) / Gamma(mn/(j+1)+j-r_j). For 1 <= k <= n-1:
///   1/(n-1)! sum_{1<=r_1<...<r_{n-1}<=m+n-2} prod_{j<n} R_j
///     = (m+k)! Gamma(m(n-k)/k) / ((m+n-1)! k! (n-k-1)!)
///       * sum_{1<=r_1<...<r_k<=m+k-1} (r_k-k+1) (r_k+n-k)!/(r_k+1)! C(mn/k+k-2-r_k, m(n-k)/k-1) prod_{j<k} R_j
/// Both sides are sums of Gamma products compared by exact reduction.
IdentityCase verify_induction_theorem(int m, int n, int k,
                                      unsigned long long term_limit = kDefaultTheoremTermLimit);

/// Left side of the previous identity on its own (independent of k).
bigmath::GammaSum induction_theorem_lhs(int m, int n, unsigned long long term_limit = kDefaultTheoremTermLimit);

/// C(s_1+...+s_{d-1}, s_1) < 2^(s_1-1) d, for d >= 3 and s nondecreasing positive of length d-1.
bool lemma_a1_check(const std::vector<int>& s, int d);
/// 2 (d1+d2-2)! >= d1! d2!, for 2 <= d1 <= d2.
bool lemma_a2_check(int d1, int d2);
/// C(d1+d2, d1) <= 2 d1 d2, for 2 <= d1 <= d2.
bool lemma_a3_check(int d1, int d2);

}  // namespace shellcount::identities
