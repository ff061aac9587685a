#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclosum {

/// Coefficient type for all exact polynomial arithmetic. Arbitrary
/// precision: reduction coefficients are unbounded in general.
using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over the integers, index = degree.
/// Normalized: no stored trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one();
  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);
  /// x^m - 1.
  static IntPolynomial power_minus_one(std::uint64_t m);

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^d; zero beyond the degree.
  const BigInt& coeff(std::size_t d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;

  /// Quotient and remainder with a monic divisor; exact over the
  /// integers, deg(remainder) < deg(divisor).
  /// Throws std::invalid_argument if the divisor is not monic.
  static std::pair<IntPolynomial, IntPolynomial> div_rem_monic(const IntPolynomial& numerator,
                                                               const IntPolynomial& divisor);

  /// Exact quotient by a monic divisor; throws std::domain_error if the
  /// division leaves a remainder.
  static IntPolynomial divide_exact(const IntPolynomial& numerator, const IntPolynomial& divisor);

  /// Render as e.g. "x^4 - x^2 + 1".
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;

  void normalize();
};

}  // namespace cyclosum
