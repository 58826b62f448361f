#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellcount {

/// Arbitrary-precision nonnegative integer. Every shelling count lives here.
using Nat = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an argument leaves the domain where a value is exactly defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a quantity that must be exact (a theorem) is not.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace bigmath {

Nat factorial(unsigned n);
Nat binomial(const Nat& n, const Nat& k);
Nat catalan(unsigned n);

/// Rising product x (x+1) ... (x+count-1).
Rat pochhammer(const Rat& x, unsigned count);

/// x (x-1) ... (x-y+1) / y!
Rat gbinom_lower_int(const Rat& x, unsigned y);

/// Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1)) for x - y a nonnegative integer,
/// evaluated as prod_{i=1}^{x-y} (y+i) / (x-y)!. Requires y > -1.
Rat gbinom_int_diff(const Rat& x, const Rat& y);

bool is_integer(const Rat& r);
/// Exact quotient; throws ExactnessError if den does not divide num.
Nat exact_div(const Nat& num, const Nat& den, const char* what);
/// Converts an integral Rat to Nat; throws ExactnessError otherwise.
Nat to_nat(const Rat& r, const char* what);

std::string to_string(const Nat& n);
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& text);

/// coeff * prod Gamma(numer) / prod Gamma(denom), all arguments positive.
///
/// Reduction writes each argument a as base + k with base in (0, 1] and k a
/// nonnegative integer, so Gamma(a) = Gamma(base) * (base)_k. Gamma(1) = 1
/// drops out, equal bases above and below cancel, and what survives is the
/// irreducible residual: bases in (0, 1) that have no partner.
class GammaProduct {
 public:
  GammaProduct() = default;
  explicit GammaProduct(Rat coeff, std::vector<Rat> numer = {}, std::vector<Rat> denom = {});

  const Rat& coeff() const { return coeff_; }
  const std::vector<Rat>& numer() const { return numer_; }
  const std::vector<Rat>& denom() const { return denom_; }

  GammaProduct& operator*=(const GammaProduct& other);
  GammaProduct& operator*=(const Rat& factor);
  friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }

  /// Fully reduced form: residual arguments sorted, coefficient absorbed.
  GammaProduct reduced() const;
  bool is_rational() const;
  /// The value as a Rat, or nullopt if irreducible Gamma factors remain.
  std::optional<Rat> as_rational() const;
  /// Throws ExactnessError with the residual in the message when irreducible.
  Rat to_rational() const;

  /// Equality via the quotient: equal iff this / other reduces to exactly 1.
  bool equals(const GammaProduct& other) const;

  std::string to_string() const;

 private:
  Rat coeff_{1};
  std::vector<Rat> numer_;
  std::vector<Rat> denom_;
};

/// Exact linear combination of Gamma products, grouped by irreducible residual.
class GammaSum {
 public:
  using Residual = std::pair<std::vector<Rat>, std::vector<Rat>>;

  GammaSum() = default;
  explicit GammaSum(const Rat& value) { *this += GammaProduct(value); }

  GammaSum& operator+=(const GammaProduct& term);
  GammaSum& operator+=(const GammaSum& other);
  GammaSum& operator-=(const GammaSum& other);
  GammaSum& operator*=(const Rat& factor);

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rat> as_rational() const;
  const std::map<Residual, Rat>& terms() const { return terms_; }
  std::string to_string() const;

  friend bool operator==(const GammaSum& a, const GammaSum& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Residual, Rat> terms_;
};

}  // namespace bigmath
}  // namespace shellcount
