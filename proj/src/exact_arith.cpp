#include "graphlab/exact_arith.hpp"

#include <limits>
#include <stdexcept>

#include "factor.hpp"

namespace graphlab {

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("BigRational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::string BigRational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("BigRational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

SquarefreeSplit sqf_decompose(std::uint64_t m) {
  if (m == 0) {
    throw std::invalid_argument("sqf_decompose: argument must be positive");
  }
  std::uint64_t square_part = 1;
  std::uint64_t free_part = 1;
  for (const auto& [prime, exponent] : detail::factor_u64(m)) {
    for (unsigned i = 0; i < exponent / 2; ++i) {
      square_part *= prime;
    }
    if (exponent % 2 == 1) {
      free_part *= prime;
    }
  }
  return {square_part, free_part};
}

bool is_squarefree(std::uint64_t m) { return m != 0 && sqf_decompose(m).square_root_part == 1; }

// ---------------------------------------------------------------------------
// RadicalSum

RadicalSum RadicalSum::rational(const BigRational& value) {
  RadicalSum out;
  out.add_term(value, 1);
  return out;
}

RadicalSum RadicalSum::term(const BigRational& coefficient, std::uint64_t radicand) {
  const auto [square, free] = sqf_decompose(radicand);
  RadicalSum out;
  out.add_term(coefficient * BigRational(BigInt(static_cast<unsigned long>(square))), free);
  return out;
}

RadicalSum RadicalSum::from_terms(const std::vector<std::pair<BigRational, std::uint64_t>>& terms) {
  RadicalSum out;
  for (const auto& [coefficient, radicand] : terms) {
    out += term(coefficient, radicand);
  }
  return out;
}

void RadicalSum::add_term(const BigRational& coefficient, std::uint64_t squarefree_radicand) {
  if (coefficient.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(squarefree_radicand, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

BigRational RadicalSum::rational_part() const {
  const auto it = terms_.find(1);
  return it == terms_.end() ? BigRational() : it->second;
}

RadicalSum RadicalSum::canonicalize() const {
  RadicalSum out;
  for (const auto& [radicand, coefficient] : terms_) {
    out += term(coefficient, radicand);
  }
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& rhs) {
  for (const auto& [radicand, coefficient] : rhs.terms_) {
    add_term(coefficient, radicand);
  }
  return *this;
}

RadicalSum RadicalSum::scaled(const BigRational& factor) const {
  RadicalSum out;
  if (factor.is_zero()) {
    return out;
  }
  for (const auto& [radicand, coefficient] : terms_) {
    out.terms_.emplace(radicand, coefficient * factor);
  }
  return out;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      if (rb != 0 && ra > std::numeric_limits<std::uint64_t>::max() / rb) {
        throw std::overflow_error("RadicalSum: radicand product exceeds 64 bits");
      }
      out += RadicalSum::term(ca * cb, ra * rb);
    }
  }
  return out;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [radicand, coefficient] : terms_) {
    BigRational magnitude = coefficient;
    if (coefficient.sign() < 0) {
      out += first ? "-" : " - ";
      magnitude = -coefficient;
    } else if (!first) {
      out += " + ";
    }
    if (radicand == 1) {
      out += magnitude.to_string();
    } else {
      if (magnitude != BigRational(1)) {
        out += magnitude.to_string() + "*";
      }
      out += "sqrt(" + std::to_string(radicand) + ")";
    }
    first = false;
  }
  return out;
}

RadicalSum radsum_add(const RadicalSum& a, const RadicalSum& b) { return a + b; }

RadicalSum radsum_scale(const RadicalSum& a, const BigRational& factor) { return a.scaled(factor); }

RadicalSum inv_sqrt(const BigRational& q) {
  if (q.sign() <= 0) {
    throw std::domain_error("inv_sqrt: argument must be positive");
  }
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  const BigInt product = num * den;
  if (!product.fits_ulong_p()) {
    throw std::overflow_error("inv_sqrt: radicand exceeds 64 bits");
  }
  return RadicalSum::term(BigRational(BigInt(1), num), product.get_ui());
}

// ---------------------------------------------------------------------------
// IndexValue

namespace {

std::variant<BigInt, BigRational, RadicalSum> collapse(const BigRational& value) {
  if (value.is_integer()) {
    return value.numerator();
  }
  return value;
}

std::variant<BigInt, BigRational, RadicalSum> collapse(const RadicalSum& value) {
  if (value.is_rational()) {
    return collapse(value.rational_part());
  }
  return value;
}

}  // namespace

IndexValue::IndexValue(const BigRational& value) : value_(collapse(value)) {}

IndexValue::IndexValue(const RadicalSum& value) : value_(collapse(value)) {}

RadicalSum IndexValue::to_radical() const {
  switch (kind()) {
    case Kind::integer:
      return RadicalSum::rational(BigRational(as_integer()));
    case Kind::rational:
      return RadicalSum::rational(as_rational());
    case Kind::radical:
      return as_radical();
  }
  return {};
}

std::string IndexValue::to_string() const {
  switch (kind()) {
    case Kind::integer:
      return as_integer().get_str();
    case Kind::rational:
      return as_rational().to_string();
    case Kind::radical:
      return as_radical().to_string();
  }
  return {};
}

bool operator==(const IndexValue& a, const IndexValue& b) {
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case IndexValue::Kind::integer:
      return a.as_integer() == b.as_integer();
    case IndexValue::Kind::rational:
      return a.as_rational() == b.as_rational();
    case IndexValue::Kind::radical:
      return a.as_radical() == b.as_radical();
  }
  return false;
}

std::string_view kind_name(IndexValue::Kind kind) {
  switch (kind) {
    case IndexValue::Kind::integer:
      return "integer";
    case IndexValue::Kind::rational:
      return "rational";
    case IndexValue::Kind::radical:
      return "radical";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Decimal output

namespace {

BigInt pow10(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

BigInt floor_of(const mpq_class& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

// Nearest integer to an exact rational, ties to even.
BigInt round_half_even(const mpq_class& value) {
  BigInt floor = floor_of(value);
  const mpq_class twice_fraction = 2 * (value - mpq_class(floor));
  const int c = cmp(twice_fraction, 1);
  if (c > 0 || (c == 0 && mpz_odd_p(floor.get_mpz_t()) != 0)) {
    floor += 1;
  }
  return floor;
}

// Formats scaled / 10^digits with exactly `digits` fractional digits.
std::string format_scaled(const BigInt& scaled, unsigned digits) {
  const bool negative = scaled < 0;
  std::string text = BigInt(abs(scaled)).get_str();
  if (text.size() <= digits) {
    text.insert(0, digits + 1 - text.size(), '0');
  }
  text.insert(text.size() - digits, ".");
  if (negative) {
    text.insert(0, "-");
  }
  return text;
}

// Nearest integer to value * 10^digits for an irrational radical sum. Each
// sqrt(d) * 10^(digits + guard) is bracketed by an integer square root; the
// guard grows until both ends of the bracket round to the same integer. The
// true value is irrational, so it is never a tie and the loop terminates.
BigInt round_radical(const RadicalSum& value, unsigned digits) {
  const mpq_class scale(pow10(digits));
  for (unsigned guard = 8;; guard *= 2) {
    const BigInt guard_scale = pow10(guard);
    const BigInt fine_scale = pow10(digits + guard);
    mpq_class lo = 0;
    mpq_class hi = 0;
    for (const auto& [radicand, coefficient] : value.terms()) {
      const mpq_class& c = coefficient.raw();
      if (radicand == 1) {
        lo += c * scale;
        hi += c * scale;
        continue;
      }
      BigInt root;
      const BigInt square = BigInt(static_cast<unsigned long>(radicand)) * fine_scale * fine_scale;
      mpz_sqrt(root.get_mpz_t(), square.get_mpz_t());
      const mpq_class below(root, guard_scale);
      const mpq_class above(BigInt(root + 1), guard_scale);
      if (sgn(c) > 0) {
        lo += c * below;
        hi += c * above;
      } else {
        lo += c * above;
        hi += c * below;
      }
    }
    const BigInt lo_round = floor_of(lo + mpq_class(1, 2));
    const BigInt hi_round = floor_of(hi + mpq_class(1, 2));
    if (lo_round == hi_round) {
      return lo_round;
    }
  }
}

}  // namespace

std::string rational_to_decimal(const BigRational& value, unsigned digits) {
  if (digits == 0) {
    throw std::invalid_argument("to_decimal: digits must be at least 1");
  }
  return format_scaled(round_half_even(value.raw() * mpq_class(pow10(digits))), digits);
}

std::string to_decimal(const IndexValue& value, unsigned digits) {
  if (digits == 0) {
    throw std::invalid_argument("to_decimal: digits must be at least 1");
  }
  switch (value.kind()) {
    case IndexValue::Kind::integer:
      return value.as_integer().get_str();
    case IndexValue::Kind::rational:
      return rational_to_decimal(value.as_rational(), digits);
    case IndexValue::Kind::radical:
      return format_scaled(round_radical(value.as_radical(), digits), digits);
  }
  return {};
}

}  // namespace graphlab
