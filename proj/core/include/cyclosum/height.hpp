#pragma once

#include "cyclosum/certificate.hpp"
#include "cyclosum/oracle.hpp"

#include <cstdint>
#include <optional>

namespace cyclosum {

/// Minimal achievable maximum multiplicity over all witnesses, with the
/// witness that attains it.
struct HeightResult {
  enum class Status {
    kDefined,    // h and witness set
    kUndefined,  // no witness of any multiplicity exists
    kUnknown,    // search budget exhausted; h >= lower_bound
  };
  enum class Method {
    kSivek,       // gcd(m, ell) = 1: semigroup criterion on n and m - n
    kReduction,   // gcd(m, ell) > 1: bounded height in the reduced order
    kExhaustive,  // direct search with increasing multiplicity bound
  };

  std::uint64_t n = 0;
  std::uint64_t ell = 0;
  std::uint64_t m = 0;
  Status status = Status::kUndefined;
  std::uint64_t h = 0;            // when kDefined
  std::uint64_t lower_bound = 0;  // when kUnknown: h is at least this
  std::optional<WitnessCertificate> witness;
  Method method = Method::kExhaustive;
};

/// Do both n and m - n lie in the monoid generated by the prime factors
/// of m? Equivalent to the existence of a distinct plain-sum witness.
/// Requires m >= 2 and 2 <= n <= m (throws std::domain_error otherwise).
bool sivek_criterion(std::uint64_t n, std::uint64_t m);

/// Does a witness of n distinct roots with vanishing ell-th power sum
/// exist? Decided through the reduced order m/d: for d = 1 by the
/// semigroup criterion, else by bounded search for a vanishing sum with
/// multiplicities at most d. Requires 2 <= n <= m.
bool height_one(std::uint64_t n, std::uint64_t ell, std::uint64_t m,
                std::uint64_t node_budget = kDefaultNodeBudget);

/// The full height: undefined when no witness exists; otherwise the least
/// bound h admitting a witness, found by raising h from ceil(n/m). Budget
/// exhaustion yields an explicit kUnknown, never a wrong answer.
HeightResult compute_height(std::uint64_t n, std::uint64_t ell, std::uint64_t m,
                            std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace cyclosum
