#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclosum {

/// Description of the non-members of a prime-generated monoid.
struct GapSet {
  enum class Kind {
    kAllPositive,   // no generators: every positive integer is a gap
    kNonMultiples,  // one generator q: gaps are exactly the non-multiples
    kFinite,        // two or more generators: finitely many gaps
  };
  Kind kind = Kind::kAllPositive;
  std::uint64_t prime = 0;            // set for kNonMultiples
  std::vector<std::uint64_t> values;  // sorted, set for kFinite
};

/// The additive monoid generated by a set of distinct primes:
/// membership, canonical representations, gaps and the Frobenius number.
/// Immutable after build; all queries are const and thread-safe.
class PrimeSemigroup {
 public:
  /// Validates that every generator is prime (trial division) and that
  /// there are no duplicates, then fills membership tables by the
  /// coin-problem dynamic program up to max(table_bound, q1*q2) for two
  /// or more generators.
  /// Throws std::invalid_argument naming the offending generator.
  static PrimeSemigroup build(std::vector<std::uint64_t> primes, std::uint64_t table_bound = 0);

  const std::vector<std::uint64_t>& generators() const { return generators_; }

  /// True iff n is a non-negative integer combination of the generators.
  /// Exact for every n: queries beyond the table resolve through the
  /// Frobenius number (two or more generators) or divisibility (one).
  bool contains(std::uint64_t n) const;

  /// Canonical representation of n, or nullopt for non-members: the
  /// coefficient vector (aligned with generators()) that is
  /// lexicographically greatest read from the largest prime down.
  std::optional<std::vector<std::uint64_t>> representation(std::uint64_t n) const;

  /// Largest non-member, defined when there are at least two generators.
  std::optional<std::uint64_t> frobenius() const;

  /// All positive non-members, structurally.
  GapSet gaps() const;

 private:
  PrimeSemigroup() = default;

  bool prefix_contains(std::size_t count, std::uint64_t n) const;

  std::vector<std::uint64_t> generators_;  // sorted ascending
  std::uint64_t table_bound_ = 0;
  // member_[i][v]: v representable using the first i+1 generators.
  std::vector<std::vector<char>> member_;
  std::vector<std::uint64_t> prefix_frobenius_;  // per prefix of >= 2 generators
  bool closed_form_pair_ = false;  // two generators too large for a table
};

}  // namespace cyclosum
