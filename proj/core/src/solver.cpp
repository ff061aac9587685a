#include "cyclosum/solver.hpp"

#include "cyclosum/numbers.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclosum {

WReduction reduce(std::uint64_t ell, std::uint64_t m) {
  if (ell == 0 || m == 0) throw std::invalid_argument("reduce: ell and m must be positive");
  if (m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::invalid_argument("reduce: m exceeds the supported 2^63 - 1 cap");
  }
  WReduction red;
  red.d = std::gcd(m, ell);
  red.m_prime = m / red.d;
  red.primes = prime_support(red.m_prime);
  return red;
}

bool decide(const WQuery& query) {
  if (query.n == 0 || query.ell == 0 || query.m == 0) {
    throw std::invalid_argument("decide: n, ell, m must be positive");
  }
  const WReduction red = reduce(query.ell, query.m);
  if (red.m_prime == 1) return false;
  return PrimeSemigroup::build(red.primes).contains(query.n);
}

WSetDescription describe(std::uint64_t ell, std::uint64_t m) {
  const WReduction red = reduce(ell, m);
  WSetDescription desc;
  if (red.m_prime == 1) {
    desc.shape = WSetDescription::Shape::kEmpty;
    return desc;
  }
  desc.generators = red.primes;
  if (red.primes.size() == 1) {
    desc.shape = WSetDescription::Shape::kMultiplesOfPrime;
    return desc;
  }
  desc.shape = WSetDescription::Shape::kCofinite;
  desc.gaps = PrimeSemigroup::build(red.primes).gaps().values;
  return desc;
}

std::string WSetDescription::to_string() const {
  if (shape == Shape::kEmpty) return "empty";
  std::ostringstream out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out << " + ";
    out << generators[i] << "N";
  }
  if (shape == Shape::kCofinite) {
    out << " = N \\ {";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (i > 0) out << ",";
      out << gaps[i];
    }
    out << "}";
  }
  return out.str();
}

}  // namespace cyclosum
