#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace goldknot {

using Integer = mpz_class;

/// Integer Laurent polynomial in t.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  static LaurentPolynomial monomial(const Integer& coeff, int exponent);
  static LaurentPolynomial t() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coefficient(int exponent) const;
  Integer leading_coefficient() const;
  Integer content() const;

  /// Value at t = 1.
  Integer at_one() const;
  /// p(1/t).
  LaurentPolynomial reciprocal() const;
  LaurentPolynomial shifted(int by) const;
  /// Lowest exponent 0 and positive leading coefficient; 0 stays 0.
  LaurentPolynomial normalized() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& coeff);
  Terms terms_;
};

/// Parses expressions such as "t^2-3t+1", "-t^-1+2", "1".
LaurentPolynomial parse_laurent(std::string_view text);

/// Equality up to multiplication by a unit +-t^k.
bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact quotient a / b; throws if b does not divide a.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Greatest common divisor in Z[t, 1/t], normalized.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Fraction-free (Bareiss) determinant of a square matrix.
LaurentPolynomial determinant(LaurentMatrix m);

/// det(t I - M) for an integer matrix.
LaurentPolynomial characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace goldknot
