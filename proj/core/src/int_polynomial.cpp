#include "cyclosum/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclosum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return monomial(0); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::power_minus_one(std::uint64_t m) {
  std::vector<BigInt> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(std::size_t d) const {
  static const BigInt kZero = 0;
  return d < coeffs_.size() ? coeffs_[d] : kZero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::div_rem_monic(
    const IntPolynomial& numerator, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) {
    throw std::invalid_argument("div_rem_monic: divisor must be monic");
  }
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  if (numerator.coeffs_.size() <= dd) return {IntPolynomial(), numerator};
  std::vector<BigInt> rem = numerator.coeffs_;
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    BigInt c = std::move(rem[k]);
    rem[k] = 0;
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j < dd; ++j) {
      rem[k - dd + j] -= c * divisor.coeffs_[j];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& numerator,
                                          const IntPolynomial& divisor) {
  auto [quot, rem] = div_rem_monic(numerator, divisor);
  if (!rem.is_zero()) {
    throw std::domain_error("divide_exact: division left a nonzero remainder");
  }
  return quot;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || i == 0) out << abs_c;
    if (i >= 1) {
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace cyclosum
