#include "shellcount/identities.hpp"

#include <algorithm>
#include <functional>

namespace shellcount::identities {

using bigmath::binomial;
using bigmath::factorial;
using bigmath::gbinom_int_diff;
using bigmath::gbinom_lower_int;
using bigmath::GammaProduct;
using bigmath::GammaSum;
using bigmath::to_string;

namespace {

std::string str(int v) { return std::to_string(v); }

Rat C(int n, int k) { return Rat(binomial(Nat(n), Nat(k))); }

IdentityCase finish(std::string name, std::vector<std::pair<std::string, std::string>> params, GammaSum lhs,
                    GammaSum rhs) {
  IdentityCase c{std::move(name), std::move(params), std::move(lhs), std::move(rhs), false};
  GammaSum diff = c.lhs;
  diff -= c.rhs;
  c.holds = diff.is_zero();
  return c;
}

IdentityCase finish(std::string name, std::vector<std::pair<std::string, std::string>> params, const Rat& lhs,
                    const Rat& rhs) {
  return finish(std::move(name), std::move(params), GammaSum(lhs), GammaSum(rhs));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// Calls fn on every strictly increasing tuple of `size` values in [1, top].
void for_each_increasing(int size, int top, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> r(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) r[i] = i + 1;
  if (size > top) return;
  for (;;) {
    fn(r);
    int i = size - 1;
    while (i >= 0 && r[i] == top - (size - 1 - i)) --i;
    if (i < 0) return;
    ++r[i];
    for (int j = i + 1; j < size; ++j) r[j] = r[j - 1] + 1;
  }
}

// Gamma-product form of R_j at 1-based index j.
GammaProduct r_factor(int m, int n, int j, int rj) {
  const Rat mn(m * n);
  return GammaProduct(Rat(rj - j + 1), {mn / j + j - 1 - rj}, {mn / (j + 1) + j - rj});
}

}  // namespace

std::string IdentityCase::describe() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].first + "=" + params[i].second;
  }
  out += "): lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string() + (holds ? " [holds]" : " [FAILS]");
  return out;
}

IdentityCase verify_story(int x, int y, const Rat& z, const Rat& w) {
  require(x >= 1 && y >= 1, "verify_story: x, y must be positive integers");
  require(z > 0, "verify_story: z must be positive");
  const Rat zprime_r = w - z;
  require(bigmath::is_integer(zprime_r) && zprime_r >= x, "verify_story: w - z must be an integer >= x");
  const int zprime = boost::multiprecision::numerator(zprime_r).convert_to<int>();

  Rat lhs = 0;
  for (int j = x; j <= zprime; ++j) lhs += gbinom_lower_int(Rat(j), static_cast<unsigned>(y)) * gbinom_int_diff(w - j, z);
  Rat rhs = 0;
  for (int i = std::max(0, x + y - zprime); i <= y; ++i) rhs += C(x, i) * gbinom_int_diff(w - x + 1, z + y - i + 1);

  return finish("story", {{"x", str(x)}, {"y", str(y)}, {"z", to_string(z)}, {"w", to_string(w)}}, lhs, rhs);
}

IdentityCase verify_story_polynomial(int x, int y, int zprime, const Rat& w) {
  require(x >= 1 && y >= 1, "verify_story_polynomial: x, y must be positive integers");
  require(zprime >= x, "verify_story_polynomial: z' must be >= x");
  Rat lhs = 0;
  for (int j = x; j <= zprime; ++j) lhs += C(j, y) * gbinom_lower_int(w - j, static_cast<unsigned>(zprime - j));
  Rat rhs = 0;
  for (int i = std::max(0, x + y - zprime); i <= y; ++i)
    rhs += C(x, i) * gbinom_lower_int(w - x + 1, static_cast<unsigned>(zprime - x - y + i));
  return finish("story_polynomial", {{"x", str(x)}, {"y", str(y)}, {"zprime", str(zprime)}, {"w", to_string(w)}},
                lhs, rhs);
}

namespace {

void require_lemma_params(int m, int n, int k, int s, const char* who) {
  require(m >= 1 && k >= 1 && k < n && s >= 0 && s < m + n - k - 1,
          std::string(who) + ": need m >= 1, 1 <= k < n, 0 <= s < m+n-k-1");
}

}  // namespace

IdentityCase verify_binomial_sum(int m, int n, int k, int s) {
  require_lemma_params(m, n, k, s, "verify_binomial_sum");
  const Rat A(m * k, n - k);
  const Rat B(m * n, n - k);

  Rat lhs = 0;
  for (int t = s + 1; t <= m + n - k - 1; ++t) {
    Rat term(t - n + k + 1);
    for (int j = 2; j <= k; ++j) term *= t + j;
    lhs += term * gbinom_int_diff(B + n - k - t - 2, A - 1);
  }
  Rat rhs(m, m + n - k);
  for (int j = 2; j <= k + 1; ++j) rhs *= s + j;
  rhs *= gbinom_int_diff(B + n - k - s - 2, A);

  return finish("binomial_sum", {{"m", str(m)}, {"n", str(n)}, {"k", str(k)}, {"s", str(s)}}, lhs, rhs);
}

IdentityCase verify_induction_lemma(int m, int n, int k, int s, int l) {
  require_lemma_params(m, n, k, s, "verify_induction_lemma");
  const int i0 = std::max(0, s + 2 * k + 2 - m - n);
  const int i1 = std::max(0, s + 2 * k + 1 - m - n);
  require(i0 <= l && l <= k, "verify_induction_lemma: need i0 <= l <= k");
  const Rat A(m * k, n - k);
  const Rat X = Rat(m * n, n - k) + n - k - s - 2;

  Rat lhs = 0;
  for (int i = i0; i <= l; ++i) lhs += C(s + k + 1, i) * gbinom_int_diff(X, A + k - i);
  Rat second = 0;
  for (int i = i1 + 1; i <= l; ++i) second += C(s + k + 1, i - 1) * gbinom_int_diff(X, A + k - i);
  lhs += Rat(k - n, k) * second;
  const Rat rhs = (A + k - l) / (A + k) * C(s + k + 1, l) * gbinom_int_diff(X, A + k - l);

  return finish("induction_lemma",
                {{"m", str(m)}, {"n", str(n)}, {"k", str(k)}, {"s", str(s)}, {"l", str(l)}, {"i0", str(i0)}}, lhs,
                rhs);
}

IdentityCase verify_induction_lemma_endpoint(int m, int n, int k, int s) {
  require_lemma_params(m, n, k, s, "verify_induction_lemma_endpoint");
  const Rat A(m * k, n - k);
  const Rat X = Rat(m * n, n - k) + n - k - s - 2;
  const Rat at_k = (A + k - k) / (A + k) * C(s + k + 1, k) * gbinom_int_diff(X, A);
  Rat scaled(m, m + n - k);
  for (int j = 2; j <= k + 1; ++j) scaled *= s + j;
  scaled *= gbinom_int_diff(X, A);
  scaled /= Rat(factorial(static_cast<unsigned>(k)));
  return finish("induction_lemma_endpoint", {{"m", str(m)}, {"n", str(n)}, {"k", str(k)}, {"s", str(s)}}, at_k,
                scaled);
}

namespace {

void require_theorem_params(int m, int n, unsigned long long term_limit, const char* who) {
  require(m >= 1 && n >= 2, std::string(who) + ": need m >= 1, n >= 2");
  const Nat terms = binomial(Nat(m + n - 2), Nat(n - 1));
  if (terms > term_limit) {
    throw DomainError(std::string(who) + ": " + terms.str() + " index tuples exceed the limit of " +
                      std::to_string(term_limit));
  }
}

}  // namespace

GammaSum induction_theorem_lhs(int m, int n, unsigned long long term_limit) {
  require_theorem_params(m, n, term_limit, "induction_theorem_lhs");
  GammaSum lhs;
  for_each_increasing(n - 1, m + n - 2, [&](const std::vector<int>& r) {
    GammaProduct term(Rat(1));
    for (int j = 1; j <= n - 1; ++j) term *= r_factor(m, n, j, r[j - 1]);
    lhs += term;
  });
  lhs *= Rat(1) / Rat(factorial(static_cast<unsigned>(n - 1)));
  return lhs;
}

IdentityCase verify_induction_theorem(int m, int n, int k, unsigned long long term_limit) {
  require_theorem_params(m, n, term_limit, "verify_induction_theorem");
  require(1 <= k && k <= n - 1, "verify_induction_theorem: need 1 <= k <= n-1");
  GammaSum lhs = induction_theorem_lhs(m, n, term_limit);

  const Rat mn(m * n);
  const Rat tail_arg = Rat(m * (n - k), k);  // m(n-k)/k
  GammaSum rhs;
  for_each_increasing(k, m + k - 1, [&](const std::vector<int>& r) {
    const int rk = r[k - 1];
    // (r_k+n-k)! / (r_k+1)! = (r_k+2)(r_k+3)...(r_k+n-k)
    Rat falling = 1;
    for (int v = rk + 2; v <= rk + n - k; ++v) falling *= v;
    // C(mn/k+k-2-r_k, m(n-k)/k - 1) = Gamma(mn/k+k-1-r_k) / (Gamma(m(n-k)/k) Gamma(m+k-r_k)).
    // The prefactor's Gamma(m(n-k)/k) is kept inside each term so it cancels there.
    GammaProduct term(Rat(rk - k + 1) * falling, {mn / k + k - 1 - rk, tail_arg}, {tail_arg, Rat(m + k - rk)});
    for (int j = 1; j <= k - 1; ++j) term *= r_factor(m, n, j, r[j - 1]);
    rhs += term;
  });
  rhs *= Rat(factorial(static_cast<unsigned>(m + k)),
             factorial(static_cast<unsigned>(m + n - 1)) * factorial(static_cast<unsigned>(k)) *
                 factorial(static_cast<unsigned>(n - k - 1)));
  return finish("induction_theorem", {{"m", str(m)}, {"n", str(n)}, {"k", str(k)}}, std::move(lhs), std::move(rhs));
}

bool lemma_a1_check(const std::vector<int>& s, int d) {
  require(d >= 3, "lemma_a1_check: need d >= 3");
  require(static_cast<int>(s.size()) == d - 1, "lemma_a1_check: need d - 1 entries");
  require(std::is_sorted(s.begin(), s.end()) && s.front() >= 1,
          "lemma_a1_check: entries must be positive and nondecreasing");
  int total = 0;
  for (int v : s) total += v;
  return binomial(Nat(total), Nat(s.front())) < (Nat(1) << (s.front() - 1)) * d;
}

bool lemma_a2_check(int d1, int d2) {
  require(2 <= d1 && d1 <= d2, "lemma_a2_check: need 2 <= d1 <= d2");
  return 2 * factorial(static_cast<unsigned>(d1 + d2 - 2)) >=
         factorial(static_cast<unsigned>(d1)) * factorial(static_cast<unsigned>(d2));
}

bool lemma_a3_check(int d1, int d2) {
  require(2 <= d1 && d1 <= d2, "lemma_a3_check: need 2 <= d1 <= d2");
  return binomial(Nat(d1 + d2), Nat(d1)) <= Nat(2 * d1 * d2);
}

}  // namespace shellcount::identities
