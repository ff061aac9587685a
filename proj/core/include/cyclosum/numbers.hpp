#pragma once

#include <cstdint>
#include <vector>

namespace cyclosum {

/// Deterministic primality by trial division. Intended for desk-scale
/// inputs; worst case O(sqrt(n)).
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending. prime_support(1) = {}.
std::vector<std::uint64_t> prime_support(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler totient, via the prime factorization of n.
std::uint64_t totient(std::uint64_t n);

/// Modular inverse of a mod m by extended Euclid.
/// Throws std::invalid_argument unless gcd(a mod m, m) = 1 and m >= 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace cyclosum
