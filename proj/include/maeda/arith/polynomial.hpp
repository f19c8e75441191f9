#pragma once

#include "maeda/arith/scalar.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace maeda {

/// Univariate polynomial over the integers, coefficients lowest degree first,
/// never carrying trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int degree);
  static IntPolynomial x_minus(const Integer& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coeff(int i) const;
  const Integer& leading() const;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  Integer evaluate(const Integer& x) const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Degree first, then coefficients compared lowest degree first.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  IntPolynomial pow(int e) const;

  /// Human readable, highest degree first, e.g. "x^2 - 3*x + 1".
  std::string to_string() const;
  /// Space-separated coefficients, lowest degree first.
  std::string coefficient_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b when b divides a in Z[x], nullopt otherwise. b nonzero.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// gcd in Z[x], positive leading coefficient (zero only if both inputs are zero).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& f);

}  // namespace maeda
