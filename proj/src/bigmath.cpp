#include "shellcount/bigmath.hpp"

#include <algorithm>
#include <sstream>

namespace shellcount::bigmath {

namespace mp = boost::multiprecision;

Nat factorial(unsigned n) {
  Nat result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Nat binomial(const Nat& n, const Nat& k) {
  if (k < 0 || n < 0) throw DomainError("binomial: negative argument");
  if (k > n) return 0;
  Nat kk = std::min<Nat>(k, n - k);
  const auto steps = kk.convert_to<unsigned long long>();
  Nat result = 1;
  Nat top = n - kk;
  for (unsigned long long i = 1; i <= steps; ++i) {
    result *= top + i;
    result /= i;  // exact: product of i consecutive integers
  }
  return result;
}

Nat catalan(unsigned n) { return binomial(2 * Nat(n), Nat(n)) / (n + 1); }

Rat pochhammer(const Rat& x, unsigned count) {
  Rat result = 1;
  for (unsigned i = 0; i < count; ++i) result *= x + i;
  return result;
}

Rat gbinom_lower_int(const Rat& x, unsigned y) {
  Rat result = 1;
  for (unsigned i = 0; i < y; ++i) result *= x - i;
  return result / Rat(factorial(y));
}

bool is_integer(const Rat& r) { return mp::denominator(r) == 1; }

Rat gbinom_int_diff(const Rat& x, const Rat& y) {
  const Rat diff = x - y;
  if (!is_integer(diff) || diff < 0) {
    throw DomainError("gbinom_int_diff: x - y = " + to_string(diff) +
                      " is not a nonnegative integer");
  }
  if (y <= -1) throw DomainError("gbinom_int_diff: y = " + to_string(y) + " hits a Gamma pole");
  const auto steps = mp::numerator(diff).convert_to<unsigned>();
  return pochhammer(y + 1, steps) / Rat(factorial(steps));
}

Nat exact_div(const Nat& num, const Nat& den, const char* what) {
  if (den == 0) throw ExactnessError(std::string(what) + ": division by zero");
  Nat q, r;
  mp::divide_qr(num, den, q, r);
  if (r != 0) {
    throw ExactnessError(std::string(what) + ": " + to_string(num) + " / " + to_string(den) +
                         " is not exact");
  }
  return q;
}

Nat to_nat(const Rat& r, const char* what) {
  if (!is_integer(r)) throw ExactnessError(std::string(what) + ": " + to_string(r) + " is not an integer");
  return mp::numerator(r);
}

std::string to_string(const Nat& n) { return n.str(); }

std::string to_string(const Rat& r) {
  if (is_integer(r)) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rat parse_rat(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Nat(text));
    Nat den(text.substr(slash + 1));
    if (den == 0) throw DomainError("parse_rat: zero denominator in '" + text + "'");
    return Rat(Nat(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw DomainError("parse_rat: cannot parse '" + text + "'");
  }
}

// --- GammaProduct -----------------------------------------------------------

namespace {

void require_positive(const std::vector<Rat>& args) {
  for (const auto& a : args) {
    if (a <= 0) throw DomainError("GammaProduct: argument " + to_string(a) + " is a pole or negative");
  }
}

// Splits a > 0 into base in (0, 1] and the integer shift k = a - base.
std::pair<Rat, unsigned> split_argument(const Rat& a) {
  const Nat& num = mp::numerator(a);
  const Nat& den = mp::denominator(a);
  Nat ceil_a = (num + den - 1) / den;
  Nat shift = ceil_a - 1;
  return {a - Rat(shift), shift.convert_to<unsigned>()};
}

std::string join_args(const std::vector<Rat>& args) {
  std::string out;
  for (const auto& a : args) out += "Gamma(" + to_string(a) + ")";
  return out;
}

}  // namespace

GammaProduct::GammaProduct(Rat coeff, std::vector<Rat> numer, std::vector<Rat> denom)
    : coeff_(std::move(coeff)), numer_(std::move(numer)), denom_(std::move(denom)) {
  require_positive(numer_);
  require_positive(denom_);
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& other) {
  coeff_ *= other.coeff_;
  numer_.insert(numer_.end(), other.numer_.begin(), other.numer_.end());
  denom_.insert(denom_.end(), other.denom_.begin(), other.denom_.end());
  return *this;
}

GammaProduct& GammaProduct::operator*=(const Rat& factor) {
  coeff_ *= factor;
  return *this;
}

GammaProduct GammaProduct::reduced() const {
  Rat coeff = coeff_;
  std::vector<Rat> top, bottom;
  for (const auto& a : numer_) {
    auto [base, shift] = split_argument(a);
    coeff *= pochhammer(base, shift);
    if (base != 1) top.push_back(base);
  }
  for (const auto& b : denom_) {
    auto [base, shift] = split_argument(b);
    coeff /= pochhammer(base, shift);
    if (base != 1) bottom.push_back(base);
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  std::vector<Rat> res_top, res_bottom;
  std::set_difference(top.begin(), top.end(), bottom.begin(), bottom.end(), std::back_inserter(res_top));
  std::set_difference(bottom.begin(), bottom.end(), top.begin(), top.end(), std::back_inserter(res_bottom));
  GammaProduct out;
  out.coeff_ = std::move(coeff);
  if (out.coeff_ != 0) {
    out.numer_ = std::move(res_top);
    out.denom_ = std::move(res_bottom);
  }
  return out;
}

bool GammaProduct::is_rational() const { return as_rational().has_value(); }

std::optional<Rat> GammaProduct::as_rational() const {
  auto r = reduced();
  if (!r.numer_.empty() || !r.denom_.empty()) return std::nullopt;
  return r.coeff_;
}

Rat GammaProduct::to_rational() const {
  auto r = as_rational();
  if (!r) throw ExactnessError("GammaProduct does not reduce to a rational: " + reduced().to_string());
  return *r;
}

bool GammaProduct::equals(const GammaProduct& other) const {
  if (coeff_ == 0 || other.coeff_ == 0) return coeff_ == other.coeff_;
  GammaProduct quotient(coeff_ / other.coeff_, numer_, denom_);
  quotient.numer_.insert(quotient.numer_.end(), other.denom_.begin(), other.denom_.end());
  quotient.denom_.insert(quotient.denom_.end(), other.numer_.begin(), other.numer_.end());
  auto q = quotient.as_rational();
  return q && *q == 1;
}

std::string GammaProduct::to_string() const {
  std::string out = bigmath::to_string(coeff_);
  if (!numer_.empty()) out += " * " + join_args(numer_);
  if (!denom_.empty()) out += " / (" + join_args(denom_) + ")";
  return out;
}

// --- GammaSum ----------------------------------------------------------------

GammaSum& GammaSum::operator+=(const GammaProduct& term) {
  auto r = term.reduced();
  if (r.coeff() == 0) return *this;
  Residual key{r.numer(), r.denom()};
  auto [it, inserted] = terms_.try_emplace(key, r.coeff());
  if (!inserted) {
    it->second += r.coeff();
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GammaSum& GammaSum::operator+=(const GammaSum& other) {
  for (const auto& [key, c] : other.terms_) *this += GammaProduct(c, key.first, key.second);
  return *this;
}

GammaSum& GammaSum::operator-=(const GammaSum& other) {
  for (const auto& [key, c] : other.terms_) *this += GammaProduct(-c, key.first, key.second);
  return *this;
}

GammaSum& GammaSum::operator*=(const Rat& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= factor;
  return *this;
}

std::optional<Rat> GammaSum::as_rational() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.first.empty() && terms_.begin()->first.second.empty()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

std::string GammaSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += GammaProduct(c, key.first, key.second).to_string();
  }
  return out;
}

}  // namespace shellcount::bigmath
