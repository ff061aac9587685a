#pragma once

#include "cyclosum/int_polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cyclosum {

/// Multiset of residues mod m with positive multiplicities: the canonical
/// encoding of a list of m-th roots of unity, repetition allowed.
/// Immutable iteration order is ascending by exponent.
class ExponentMultiset {
 public:
  explicit ExponentMultiset(std::uint64_t modulus);

  /// Adds `count` copies of the root with the given exponent.
  /// Throws std::out_of_range if exponent >= modulus, std::invalid_argument
  /// if count = 0, std::overflow_error if the total size would wrap.
  void add(std::uint64_t exponent, std::uint64_t count = 1);

  std::uint64_t modulus() const { return modulus_; }
  /// Total size n = sum of multiplicities.
  std::uint64_t size() const { return total_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t multiplicity(std::uint64_t exponent) const;
  std::uint64_t max_multiplicity() const;
  bool all_distinct() const { return total_ == entries_.size(); }

  /// The multiset with every exponent shifted by c mod m (i.e. the list
  /// multiplied by a fixed m-th root of unity).
  ExponentMultiset rotated(std::uint64_t c) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

 private:
  std::uint64_t modulus_;
  std::uint64_t total_ = 0;
  std::map<std::uint64_t, std::uint64_t> entries_;
};

/// Element of Z[x]/(x^m - 1) as a length-m coefficient vector; the
/// coefficient at index e multiplies the root with exponent e.
class CyclotomicElement {
 public:
  CyclotomicElement(std::uint64_t modulus, std::vector<BigInt> coeffs);

  static CyclotomicElement zero(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<BigInt> coeffs_;  // length = modulus, exactly
};

/// The m-th cyclotomic polynomial, by exact division:
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
/// Memoized per process; safe to call concurrently.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t m);

/// Applies the ell-th power map: each exponent e contributes its
/// multiplicity at (ell * e) mod m. Depends only on ell mod m.
CyclotomicElement from_power_map(const ExponentMultiset& s, std::uint64_t ell);

/// Exact vanishing test: true iff the element reduces to zero mod Phi_m.
bool is_zero(const CyclotomicElement& v);

}  // namespace cyclosum
