#include "cyclosum/height.hpp"

#include "cyclosum/numbers.hpp"
#include "cyclosum/semigroup.hpp"
#include "cyclosum/solver.hpp"
#include "cyclosum/witness.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclosum {

namespace {

void require_distinct_range(std::uint64_t n, std::uint64_t m) {
  if (m < 2) throw std::domain_error("distinct witnesses need m >= 2");
  if (n < 2 || n > m) {
    throw std::domain_error("distinct witnesses exist only for 2 <= n <= m; got n = " +
                            std::to_string(n) + ", m = " + std::to_string(m));
  }
}

}  // namespace

bool sivek_criterion(std::uint64_t n, std::uint64_t m) {
  require_distinct_range(n, m);
  const PrimeSemigroup sg = PrimeSemigroup::build(prime_support(m));
  return sg.contains(n) && sg.contains(m - n);
}

bool height_one(std::uint64_t n, std::uint64_t ell, std::uint64_t m, std::uint64_t node_budget) {
  require_distinct_range(n, m);
  if (ell == 0) throw std::invalid_argument("height_one: ell must be positive");
  const WReduction red = reduce(ell, m);
  if (red.m_prime == 1) return false;
  if (red.d == 1) return sivek_criterion(n, m);
  if (!decide({n, ell, m})) return false;
  // A distinct witness exists iff the reduced order admits a vanishing
  // plain sum with multiplicities at most d (then every repeated root
  // spreads over its d-element power-map fiber).
  SearchSpec spec;
  spec.m = red.m_prime;
  spec.n = n;
  spec.ell = 1;
  spec.max_multiplicity = red.d;
  spec.distinct_only = (red.d == 1);
  spec.node_budget = node_budget;
  const SearchOutcome outcome = exists_witness(spec);
  if (outcome.status == SearchStatus::kBudgetExceeded) {
    throw BudgetExceeded("height_one: search exceeded " + std::to_string(node_budget) + " nodes");
  }
  return outcome.status == SearchStatus::kFound;
}

HeightResult compute_height(std::uint64_t n, std::uint64_t ell, std::uint64_t m,
                            std::uint64_t node_budget) {
  if (n == 0 || ell == 0 || m == 0) {
    throw std::invalid_argument("compute_height: n, ell, m must be positive");
  }
  HeightResult result;
  result.n = n;
  result.ell = ell;
  result.m = m;
  if (!decide({n, ell, m})) {
    result.status = HeightResult::Status::kUndefined;
    return result;
  }

  const std::uint64_t d = std::gcd(m, ell);
  // Settle h = 1 by the distinct-witness characterization when it applies.
  if (n >= 2 && n <= m) {
    try {
      if (height_one(n, ell, m, node_budget)) {
        result.status = HeightResult::Status::kDefined;
        result.h = 1;
        result.method =
            d == 1 ? HeightResult::Method::kSivek : HeightResult::Method::kReduction;
        result.witness = construct({n, ell, m}, /*want_distinct=*/true, node_budget);
        if (!result.witness) {
          throw std::logic_error("compute_height: height_one true but no distinct construction");
        }
        return result;
      }
    } catch (const BudgetExceeded&) {
      result.status = HeightResult::Status::kUnknown;
      result.lower_bound = std::max<std::uint64_t>((n + m - 1) / m, 1);
      return result;
    }
  }

  result.method = HeightResult::Method::kExhaustive;
  std::uint64_t h = std::max<std::uint64_t>((n + m - 1) / m, 1);
  if (n >= 2 && n <= m) h = std::max<std::uint64_t>(h, 2);  // h = 1 just refuted
  for (; h <= n; ++h) {
    SearchSpec spec;
    spec.m = m;
    spec.n = n;
    spec.ell = ell;
    spec.max_multiplicity = h;
    spec.distinct_only = false;
    spec.node_budget = node_budget;
    const SearchOutcome outcome = exists_witness(spec);
    if (outcome.status == SearchStatus::kBudgetExceeded) {
      result.status = HeightResult::Status::kUnknown;
      result.lower_bound = h;
      return result;
    }
    if (outcome.status == SearchStatus::kFound) {
      result.status = HeightResult::Status::kDefined;
      result.h = h;
      WitnessCertificate cert;
      cert.m = m;
      cert.ell = ell;
      cert.n = n;
      cert.exponents = *outcome.witness;
      cert.distinct = cert.exponents.all_distinct();
      cert.derivation = {"exhaustive search: minimal multiplicity bound h=" + std::to_string(h)};
      std::string why;
      if (!verify_certificate(cert, &why)) {
        throw std::logic_error("compute_height: search witness failed verification: " + why);
      }
      // Bounds below h are refuted and the pigeonhole floor is h's start,
      // so the found witness must use the full bound.
      if (cert.exponents.max_multiplicity() != h) {
        throw std::logic_error("compute_height: witness multiplicity does not match h");
      }
      result.witness = std::move(cert);
      return result;
    }
  }
  // Some witness exists (decide said so) and any witness has
  // multiplicities <= n, so the loop cannot fall through.
  throw std::logic_error("compute_height: exhausted h <= n without a witness");
}

}  // namespace cyclosum
