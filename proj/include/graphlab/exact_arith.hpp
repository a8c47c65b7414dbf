#pragma once

// Exact number types used for every index value: arbitrary-precision
// integers, reduced rationals, and canonical sums of square roots.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace graphlab {

using BigInt = mpz_class;

/// Rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "37" or "47/2".
  std::string to_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// m = c^2 * d with d squarefree.
struct SquarefreeSplit {
  std::uint64_t square_root_part;
  std::uint64_t squarefree_part;

  friend bool operator==(const SquarefreeSplit&, const SquarefreeSplit&) = default;
};

/// Trial division up to sqrt(m). Throws std::invalid_argument for m == 0.
SquarefreeSplit sqf_decompose(std::uint64_t m);

bool is_squarefree(std::uint64_t m);

/// Finite sum of c_i * sqrt(d_i) over distinct squarefree d_i with nonzero
/// rational c_i. Radicand 1 carries the rational part. Because square roots
/// of distinct squarefree integers are linearly independent over Q, two sums
/// are equal exactly when their term maps are equal.
class RadicalSum {
 public:
  using Terms = std::map<std::uint64_t, BigRational>;

  RadicalSum() = default;

  static RadicalSum rational(const BigRational& value);
  /// coefficient * sqrt(radicand); the radicand need not be squarefree.
  /// Throws std::invalid_argument for radicand == 0.
  static RadicalSum term(const BigRational& coefficient, std::uint64_t radicand);
  /// Builds from arbitrary (coefficient, radicand) pairs, merging and
  /// reducing as needed.
  static RadicalSum from_terms(const std::vector<std::pair<BigRational, std::uint64_t>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of sqrt(1); zero when absent.
  BigRational rational_part() const;

  /// Rebuilds the sum term by term; a no-op on any value produced by this class.
  RadicalSum canonicalize() const;

  RadicalSum& operator+=(const RadicalSum& rhs);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  RadicalSum scaled(const BigRational& factor) const;
  /// Full product; sqrt(a)*sqrt(b) is reduced through sqf_decompose(a*b).
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

  /// "23/14 + 6/7*sqrt(7)"; "0" for the empty sum.
  std::string to_string() const;

 private:
  void add_term(const BigRational& coefficient, std::uint64_t squarefree_radicand);

  Terms terms_;
};

RadicalSum radsum_add(const RadicalSum& a, const RadicalSum& b);
RadicalSum radsum_scale(const RadicalSum& a, const BigRational& factor);

/// Canonical RadicalSum equal to 1/sqrt(q); for q = a/b this is sqrt(ab)/a.
/// Throws std::domain_error when q <= 0 and std::overflow_error when a*b does
/// not fit in 64 bits.
RadicalSum inv_sqrt(const BigRational& q);

/// Exact index value, always stored under its most constrained tag.
class IndexValue {
 public:
  enum class Kind { integer, rational, radical };

  IndexValue() : value_(BigInt(0)) {}
  IndexValue(long value) : value_(BigInt(value)) {}  // NOLINT(google-explicit-constructor)
  IndexValue(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  IndexValue(const BigRational& value);               // NOLINT(google-explicit-constructor)
  IndexValue(const RadicalSum& value);                // NOLINT(google-explicit-constructor)

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  const BigInt& as_integer() const { return std::get<BigInt>(value_); }
  const BigRational& as_rational() const { return std::get<BigRational>(value_); }
  const RadicalSum& as_radical() const { return std::get<RadicalSum>(value_); }

  /// Any value, widened to a RadicalSum.
  RadicalSum to_radical() const;

  /// Exact text: "37", "47/2", "23/14 + 6/7*sqrt(7)".
  std::string to_string() const;

  friend bool operator==(const IndexValue& a, const IndexValue& b);

 private:
  std::variant<BigInt, BigRational, RadicalSum> value_;
};

std::string_view kind_name(IndexValue::Kind kind);

/// Decimal rendering with `digits` fractional digits, rounded half to even.
/// Integers print without a fractional part. Throws std::invalid_argument
/// when digits == 0.
std::string to_decimal(const IndexValue& value, unsigned digits);

/// Correctly rounded decimal string of an exact rational (round half to even).
std::string rational_to_decimal(const BigRational& value, unsigned digits);

}  // namespace graphlab
