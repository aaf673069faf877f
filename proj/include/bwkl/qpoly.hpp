#pragma once

// Exact Laurent polynomials in q with 64-bit integer coefficients.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwkl {

class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

class QPoly {
public:
  using Terms = std::map<int, std::int64_t>;

  QPoly() = default;
  /// Constant polynomial.
  explicit QPoly(std::int64_t c);
  /// Arbitrary terms; zero coefficients are dropped.
  explicit QPoly(const Terms &terms);

  static QPoly monomial(int exponent, std::int64_t coeff = 1);
  static QPoly q() { return monomial(1); }
  static QPoly one() { return QPoly(1); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  QPoly operator+(const QPoly &o) const;
  QPoly operator-(const QPoly &o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly &o) const;
  QPoly &operator+=(const QPoly &o) { return *this = *this + o; }
  QPoly &operator-=(const QPoly &o) { return *this = *this - o; }
  QPoly &operator*=(const QPoly &o) { return *this = *this * o; }

  bool operator==(const QPoly &o) const = default;

  /// Value at q = x. Throws std::domain_error for negative exponents at 0.
  std::int64_t eval(std::int64_t x) const;
  /// p(-q).
  QPoly substitute_negated() const;

  /// Ascending coefficient list c_0..c_max; requires no negative exponents.
  std::vector<std::int64_t> coefficients() const;

  /// Text form, highest exponent first, e.g. "q^11+q^9+2q^7+q^3", "0", "-q", "q^-2".
  std::string to_string() const;

private:
  Terms terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace bwkl
