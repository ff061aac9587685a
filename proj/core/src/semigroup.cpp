#include "cyclosum/semigroup.hpp"

#include "cyclosum/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclosum {

namespace {

// Largest membership table we are willing to allocate. Beyond this, a
// two-generator monoid falls back to the closed form; more generators
// with such a spread are out of scope.
constexpr std::uint64_t kMaxTableBound = std::uint64_t{1} << 26;

}  // namespace

PrimeSemigroup PrimeSemigroup::build(std::vector<std::uint64_t> primes,
                                     std::uint64_t table_bound) {
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw std::invalid_argument("PrimeSemigroup: generator " + std::to_string(primes[i]) +
                                  " is not prime");
    }
    if (i > 0 && primes[i] == primes[i - 1]) {
      throw std::invalid_argument("PrimeSemigroup: duplicate generator " +
                                  std::to_string(primes[i]));
    }
  }

  PrimeSemigroup sg;
  sg.generators_ = std::move(primes);
  const std::size_t s = sg.generators_.size();

  std::uint64_t bound = std::max<std::uint64_t>(table_bound, 1);
  if (s >= 2) {
    // q1*q2 exceeds the Frobenius number of the pair, hence of the whole
    // set, so the table alone answers every query up to closed-form range.
    std::uint64_t pair_bound = sg.generators_[0] * sg.generators_[1];
    bound = std::max(bound, pair_bound);
    if (bound > kMaxTableBound) {
      if (s == 2) {
        sg.closed_form_pair_ = true;
        sg.table_bound_ = 0;
        return sg;
      }
      throw std::length_error("PrimeSemigroup: generators too large for membership table");
    }
  }
  sg.table_bound_ = bound;

  sg.member_.assign(s, std::vector<char>(bound + 1, 0));
  for (std::size_t i = 0; i < s; ++i) {
    if (i == 0) {
      for (std::uint64_t v = 0; v <= bound; v += sg.generators_[0]) sg.member_[0][v] = 1;
    } else {
      sg.member_[i] = sg.member_[i - 1];
      const std::uint64_t q = sg.generators_[i];
      for (std::uint64_t v = q; v <= bound; ++v) {
        if (sg.member_[i][v - q]) sg.member_[i][v] = 1;
      }
    }
  }

  sg.prefix_frobenius_.assign(s, 0);
  for (std::size_t i = 1; i < s; ++i) {
    std::uint64_t frob = 0;
    for (std::uint64_t v = bound + 1; v-- > 1;) {
      if (!sg.member_[i][v]) {
        frob = v;
        break;
      }
    }
    sg.prefix_frobenius_[i] = frob;
  }
  return sg;
}

bool PrimeSemigroup::prefix_contains(std::size_t count, std::uint64_t n) const {
  if (count == 0) return n == 0;
  if (count == 1) return n % generators_[0] == 0;
  if (closed_form_pair_) {
    // n = x*p + y*q solvable with x, y >= 0 iff the least non-negative
    // y with y*q = n (mod p) still fits under n.
    const std::uint64_t p = generators_[0], q = generators_[1];
    const std::uint64_t y =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(mod_inverse(q, p)) * (n % p)) % p);
    return static_cast<unsigned __int128>(y) * q <= n;
  }
  if (n <= table_bound_) return member_[count - 1][n];
  return n > prefix_frobenius_[count - 1];
}

bool PrimeSemigroup::contains(std::uint64_t n) const {
  return prefix_contains(generators_.size(), n);
}

std::optional<std::vector<std::uint64_t>> PrimeSemigroup::representation(std::uint64_t n) const {
  const std::size_t s = generators_.size();
  if (!contains(n)) return std::nullopt;
  std::vector<std::uint64_t> rep(s, 0);
  std::uint64_t rest = n;
  // Greedy from the largest prime down: take the biggest coefficient that
  // leaves a remainder representable by the smaller primes. Membership of
  // every candidate remainder is exact, so no backtracking is needed.
  for (std::size_t i = s; i-- > 1;) {
    const std::uint64_t q = generators_[i];
    std::uint64_t k = rest / q;
    while (!prefix_contains(i, rest - k * q)) --k;
    rep[i] = k;
    rest -= k * q;
  }
  if (s >= 1) {
    rep[0] = rest / generators_[0];
    rest %= generators_[0];
  }
  if (rest != 0) throw std::logic_error("PrimeSemigroup: representation bookkeeping failed");
  return rep;
}

std::optional<std::uint64_t> PrimeSemigroup::frobenius() const {
  const std::size_t s = generators_.size();
  if (s < 2) return std::nullopt;
  if (closed_form_pair_) {
    return generators_[0] * generators_[1] - generators_[0] - generators_[1];
  }
  return prefix_frobenius_[s - 1];
}

GapSet PrimeSemigroup::gaps() const {
  GapSet out;
  const std::size_t s = generators_.size();
  if (s == 0) {
    out.kind = GapSet::Kind::kAllPositive;
    return out;
  }
  if (s == 1) {
    out.kind = GapSet::Kind::kNonMultiples;
    out.prime = generators_[0];
    return out;
  }
  out.kind = GapSet::Kind::kFinite;
  const std::uint64_t frob = *frobenius();
  if (closed_form_pair_) {
    if (frob > kMaxTableBound) {
      throw std::length_error("PrimeSemigroup: gap list too large to enumerate");
    }
    for (std::uint64_t v = 1; v <= frob; ++v) {
      if (!prefix_contains(2, v)) out.values.push_back(v);
    }
    return out;
  }
  for (std::uint64_t v = 1; v <= frob; ++v) {
    if (!member_[s - 1][v]) out.values.push_back(v);
  }
  return out;
}

}  // namespace cyclosum
