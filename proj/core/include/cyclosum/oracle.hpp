#pragma once

#include "cyclosum/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclosum {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Exhaustive-search problem: does a size-n multiset of exponents mod m,
/// multiplicities at most max_multiplicity, have vanishing ell-th power sum?
struct SearchSpec {
  std::uint64_t m = 1;
  std::uint64_t n = 0;
  std::uint64_t ell = 1;
  std::uint64_t max_multiplicity = 1;
  bool distinct_only = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Restrict to multisets containing exponent 0. Sound (rotation maps
  /// witnesses to witnesses) and lossless for the canonical minimum; the
  /// switch exists so tests can compare against the unrestricted search.
  bool use_rotation_symmetry = true;
};

enum class SearchStatus {
  kFound,
  kNotFound,
  kBudgetExceeded,
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kNotFound;
  /// The lexicographically smallest witness (as a sorted exponent list),
  /// present iff status is kFound.
  std::optional<ExponentMultiset> witness;
  std::uint64_t nodes_visited = 0;
};

/// Depth-first exhaustive search, independent of the decision machinery:
/// only the exact cyclotomic zero test is shared. Deterministic.
/// Throws std::invalid_argument on inconsistent specs (distinct_only with
/// max_multiplicity != 1, or distinct_only with n > m).
SearchOutcome exists_witness(const SearchSpec& spec);

/// Entry i (0-based) answers the size n = i+1 with unbounded multiplicity.
/// Budget exhaustion is reported per entry.
std::vector<SearchStatus> enumerate_W(std::uint64_t m, std::uint64_t ell, std::uint64_t n_max,
                                      std::uint64_t node_budget_per_entry = kDefaultNodeBudget);

}  // namespace cyclosum
