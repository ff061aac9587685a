#include "cyclosum/int_polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace cyclosum;

namespace {

// Test-local evaluation: checking div_rem through the substitution
// homomorphism keeps the check independent of the arithmetic under test.
BigInt eval(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("normalization and degree") {
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial({BigInt(0), BigInt(0)}).is_zero());
  CHECK(IntPolynomial({BigInt(3), BigInt(0)}).degree() == 0);
  CHECK(IntPolynomial::power_minus_one(5).degree() == 5);
  CHECK(IntPolynomial::monomial(4).to_string() == "x^4");
}

TEST_CASE("ring identities at evaluation points") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPolynomial a = random_poly(rng, 8, 9);
    const IntPolynomial b = random_poly(rng, 8, 9);
    for (int x = -3; x <= 3; ++x) {
      CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
      CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
      CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
    }
  }
}

TEST_CASE("div_rem_monic: identity, remainder degree, exactness") {
  std::mt19937 rng(987654321);
  for (int iter = 0; iter < 300; ++iter) {
    const IntPolynomial num = random_poly(rng, 12, 20);
    IntPolynomial div = random_poly(rng, 5, 5);
    // force monic of degree >= 1
    std::vector<BigInt> dc = div.coeffs();
    dc.resize(std::max<std::size_t>(dc.size(), 2));
    dc.back() = 1;
    div = IntPolynomial(std::move(dc));

    const auto [quot, rem] = IntPolynomial::div_rem_monic(num, div);
    CHECK(rem.degree() < div.degree());
    for (int x = -3; x <= 3; ++x) {
      CHECK(eval(num, x) == eval(quot, x) * eval(div, x) + eval(rem, x));
    }
  }
}

TEST_CASE("div_rem_monic rejects non-monic divisors") {
  CHECK_THROWS_AS(
      IntPolynomial::div_rem_monic(IntPolynomial::monomial(3), IntPolynomial({BigInt(1), BigInt(2)})),
      std::invalid_argument);
}

TEST_CASE("divide_exact flags nonzero remainders") {
  // x^2 + 1 is not divisible by x - 1
  CHECK_THROWS_AS(IntPolynomial::divide_exact(IntPolynomial({BigInt(1), BigInt(0), BigInt(1)}),
                                              IntPolynomial({BigInt(-1), BigInt(1)})),
                  std::domain_error);
}

TEST_CASE("to_string rendering") {
  CHECK(IntPolynomial({BigInt(1), BigInt(0), BigInt(-1), BigInt(0), BigInt(1)}).to_string() ==
        "x^4 - x^2 + 1");
  CHECK(IntPolynomial({BigInt(-1), BigInt(1)}).to_string() == "x - 1");
  CHECK(IntPolynomial({BigInt(2)}).to_string() == "2");
  CHECK(IntPolynomial().to_string() == "0");
}
