#pragma once

#include "cyclosum/certificate.hpp"
#include "cyclosum/oracle.hpp"
#include "cyclosum/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclosum {

/// A vanishing sum of size n = sum rep[i]*primes[i] in the order-m_prime
/// roots: for each i, rep[i] copies of the primes[i]-cycle, successive
/// copies rotated by offsets 0, 1, 2, ... to spread multiplicity.
/// Throws std::invalid_argument unless m_prime > 1, every prime divides
/// m_prime, and the representation sums to n.
ExponentMultiset base_vanishing_sum(std::uint64_t n, std::uint64_t m_prime,
                                    const std::vector<std::uint64_t>& primes,
                                    const std::vector<std::uint64_t>& rep);

/// Lifts a vanishing sum over the order-(m/d) roots, d = gcd(m, ell), to a
/// certificate for the ell-th power sum over the order-m roots. Each base
/// exponent t maps to the solution e0 of (ell/d)*e = t (mod m/d); the full
/// preimage is {e0 + k*(m/d) : 0 <= k < d}, all with equal ell-th power.
/// A distinct lift places multiplicity a on the fiber elements k = 0..a-1
/// (requires a <= d, else std::invalid_argument); otherwise multiplicity a
/// stays on e0.
WitnessCertificate lift_witness(const ExponentMultiset& base, std::uint64_t ell, std::uint64_t m,
                                bool distinct);

/// End-to-end construction: decide, represent, build the base sum, lift.
/// Returns nullopt when no witness (or no distinct witness) exists. When a
/// distinct witness is requested and the rotation-spread base still has a
/// multiplicity above d, falls back to the bounded exhaustive search for a
/// base with multiplicities <= d before giving up.
/// Every returned certificate passes verify_certificate.
/// Throws BudgetExceeded if the fallback search runs out of nodes.
std::optional<WitnessCertificate> construct(const WQuery& query, bool want_distinct,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

/// Raised when a bounded search cannot settle the question within budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyclosum
