#include "cyclosum/semigroup.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

using namespace cyclosum;

namespace {

// Brute-force membership up to bound: enumerate every combination.
std::vector<char> brute_members(const std::vector<std::uint64_t>& primes, std::uint64_t bound) {
  std::set<std::uint64_t> seen{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t v : std::set<std::uint64_t>(seen)) {
      for (std::uint64_t q : primes) {
        if (v + q <= bound && seen.insert(v + q).second) grew = true;
      }
    }
  }
  std::vector<char> table(bound + 1, 0);
  for (std::uint64_t v : seen) table[v] = 1;
  return table;
}

// All representations of n, to pin down the canonical one independently.
void all_reps(const std::vector<std::uint64_t>& primes, std::uint64_t n, std::size_t i,
              std::vector<std::uint64_t>& current, std::vector<std::vector<std::uint64_t>>& out) {
  if (i == primes.size()) {
    if (n == 0) out.push_back(current);
    return;
  }
  for (std::uint64_t k = 0; k * primes[i] <= n; ++k) {
    current[i] = k;
    all_reps(primes, n - k * primes[i], i + 1, current, out);
  }
  current[i] = 0;
}

}  // namespace

TEST_CASE("paper-scale gap sets") {
  CHECK(PrimeSemigroup::build({2, 3}).gaps().values == std::vector<std::uint64_t>{1});
  CHECK(PrimeSemigroup::build({3, 5}).gaps().values == std::vector<std::uint64_t>{1, 2, 4, 7});
  CHECK(PrimeSemigroup::build({2, 5}).gaps().values == std::vector<std::uint64_t>{1, 3});
  CHECK(PrimeSemigroup::build({2, 3, 5}).gaps().values == std::vector<std::uint64_t>{1});
}

TEST_CASE("structural gap markers") {
  CHECK(PrimeSemigroup::build({}).gaps().kind == GapSet::Kind::kAllPositive);
  const auto g2 = PrimeSemigroup::build({2}).gaps();
  CHECK(g2.kind == GapSet::Kind::kNonMultiples);
  CHECK(g2.prime == 2);
}

TEST_CASE("membership basics") {
  const auto sg25 = PrimeSemigroup::build({2, 5});
  CHECK_FALSE(sg25.contains(3));
  CHECK(sg25.contains(0));
  const auto sg35 = PrimeSemigroup::build({3, 5});
  CHECK(sg35.contains(8));
  CHECK_FALSE(sg35.contains(7));
  CHECK(PrimeSemigroup::build({5}).contains(10));
  CHECK_FALSE(PrimeSemigroup::build({5}).contains(11));
  const auto empty = PrimeSemigroup::build({});
  CHECK(empty.contains(0));
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK_FALSE(empty.contains(n));
}

TEST_CASE("generator validation") {
  CHECK_THROWS_WITH_AS(PrimeSemigroup::build({2, 9}), doctest::Contains("9"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(PrimeSemigroup::build({1}), doctest::Contains("1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(PrimeSemigroup::build({3, 3}), doctest::Contains("duplicate"),
                       std::invalid_argument);
}

TEST_CASE("frobenius numbers") {
  CHECK(PrimeSemigroup::build({2, 3}).frobenius() == 1);
  CHECK(PrimeSemigroup::build({3, 5}).frobenius() == 7);
  CHECK(PrimeSemigroup::build({2, 5}).frobenius() == 3);
  CHECK_FALSE(PrimeSemigroup::build({7}).frobenius().has_value());
  CHECK_FALSE(PrimeSemigroup::build({}).frobenius().has_value());
}

TEST_CASE("representation examples") {
  const auto sg23 = PrimeSemigroup::build({2, 3});
  CHECK(sg23.representation(5) == std::vector<std::uint64_t>{1, 1});
  CHECK(sg23.representation(7) == std::vector<std::uint64_t>{2, 1});
  CHECK_FALSE(PrimeSemigroup::build({3, 5}).representation(7).has_value());
}

TEST_CASE("representation is the greedy-canonical one") {
  for (const auto& primes : std::vector<std::vector<std::uint64_t>>{{2, 3}, {3, 5}, {2, 3, 5},
                                                                    {2, 7}, {3, 5, 7}}) {
    const auto sg = PrimeSemigroup::build(primes);
    for (std::uint64_t n = 1; n <= 60; ++n) {
      std::vector<std::vector<std::uint64_t>> reps;
      std::vector<std::uint64_t> cur(primes.size(), 0);
      all_reps(primes, n, 0, cur, reps);
      const auto got = sg.representation(n);
      if (reps.empty()) {
        CHECK_FALSE(got.has_value());
        continue;
      }
      // canonical = lexicographically greatest read from the largest prime
      auto canonical = reps.front();
      for (const auto& r : reps) {
        for (std::size_t i = primes.size(); i-- > 0;) {
          if (r[i] != canonical[i]) {
            if (r[i] > canonical[i]) canonical = r;
            break;
          }
        }
      }
      CAPTURE(n);
      REQUIRE(got.has_value());
      CHECK(*got == canonical);
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < primes.size(); ++i) total += (*got)[i] * primes[i];
      CHECK(total == n);
    }
  }
}

TEST_CASE("membership agrees with brute-force enumeration to 200") {
  const std::vector<std::uint64_t> pool{2, 3, 5, 7, 11, 13};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const std::vector<std::uint64_t> pair{pool[i], pool[j]};
      const auto table = brute_members(pair, 200);
      const auto sg = PrimeSemigroup::build(pair);
      for (std::uint64_t n = 0; n <= 200; ++n) {
        CAPTURE(pair[0]);
        CAPTURE(pair[1]);
        CAPTURE(n);
        CHECK(sg.contains(n) == static_cast<bool>(table[n]));
      }
      for (std::size_t k = j + 1; k < pool.size(); ++k) {
        const std::vector<std::uint64_t> triple{pool[i], pool[j], pool[k]};
        const auto t3 = brute_members(triple, 200);
        const auto sg3 = PrimeSemigroup::build(triple);
        for (std::uint64_t n = 0; n <= 200; ++n) {
          CHECK(sg3.contains(n) == static_cast<bool>(t3[n]));
        }
      }
    }
  }
}

TEST_CASE("monoid closure under addition") {
  std::mt19937 rng(424242);
  const auto sg = PrimeSemigroup::build({3, 7});
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= 300; ++n) {
    if (sg.contains(n)) members.push_back(n);
  }
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int iter = 0; iter < 500; ++iter) {
    CHECK(sg.contains(members[pick(rng)] + members[pick(rng)]));
  }
}

TEST_CASE("queries beyond the table stay exact") {
  const auto sg = PrimeSemigroup::build({3, 5});
  CHECK(sg.contains(1'000'000'007));  // far past the Frobenius number 7
  const auto sg5 = PrimeSemigroup::build({5});
  CHECK(sg5.contains(5'000'000'000'000));
  CHECK_FALSE(sg5.contains(5'000'000'000'001));
}

TEST_CASE("two huge generators use the closed form") {
  const std::uint64_t q = 1'000'000'007;
  const auto sg = PrimeSemigroup::build({2, q});
  CHECK(sg.contains(0));
  CHECK(sg.contains(2));
  CHECK_FALSE(sg.contains(3));
  CHECK(sg.contains(q));
  CHECK(sg.contains(q + 2));
  CHECK_FALSE(sg.contains(q - 2));  // odd and below q
  CHECK(sg.frobenius() == q - 2);
  CHECK(sg.representation(q + 2) == std::vector<std::uint64_t>{1, 1});
  CHECK(sg.representation(3 * q) == std::vector<std::uint64_t>{0, 3});
  CHECK(sg.representation(2 * q + 4) == std::vector<std::uint64_t>{2, 2});
}
