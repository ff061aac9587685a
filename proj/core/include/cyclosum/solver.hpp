#pragma once

#include "cyclosum/semigroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclosum {

/// Does some list of n m-th roots of unity have vanishing ell-th power sum?
struct WQuery {
  std::uint64_t n = 1;
  std::uint64_t ell = 1;
  std::uint64_t m = 1;
};

/// The gcd reduction underlying every decision: the ell-th power sums over
/// the order-m roots are exactly the plain sums over the order-(m/d) roots,
/// d = gcd(m, ell).
struct WReduction {
  std::uint64_t d = 1;
  std::uint64_t m_prime = 1;
  std::vector<std::uint64_t> primes;  // prime support of m_prime, ascending
};

WReduction reduce(std::uint64_t ell, std::uint64_t m);

/// True iff n lies in the monoid generated by the prime support of
/// m / gcd(m, ell); false for every n when m divides ell.
bool decide(const WQuery& query);

/// Structural description of the full solution set for fixed (ell, m).
struct WSetDescription {
  enum class Shape {
    kEmpty,             // m divides ell: no n works
    kMultiplesOfPrime,  // single prime support: exactly the positive multiples
    kCofinite,          // all n >= 2 except a finite gap list
  };
  Shape shape = Shape::kEmpty;
  std::vector<std::uint64_t> generators;  // prime support, ascending
  std::vector<std::uint64_t> gaps;        // sorted, for kCofinite

  /// Table rendering, e.g. "2N + 3N = N \ {1}", "5N", "empty".
  std::string to_string() const;
};

WSetDescription describe(std::uint64_t ell, std::uint64_t m);

}  // namespace cyclosum
