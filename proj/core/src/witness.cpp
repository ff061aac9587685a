#include "cyclosum/witness.hpp"

#include "cyclosum/numbers.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclosum {

ExponentMultiset base_vanishing_sum(std::uint64_t n, std::uint64_t m_prime,
                                    const std::vector<std::uint64_t>& primes,
                                    const std::vector<std::uint64_t>& rep) {
  if (m_prime <= 1) throw std::invalid_argument("base_vanishing_sum: need m_prime > 1");
  if (primes.size() != rep.size()) {
    throw std::invalid_argument("base_vanishing_sum: representation length mismatch");
  }
  unsigned __int128 total = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] == 0 || m_prime % primes[i] != 0) {
      throw std::invalid_argument("base_vanishing_sum: generator does not divide m_prime");
    }
    total += static_cast<unsigned __int128>(rep[i]) * primes[i];
  }
  if (total != n) {
    throw std::invalid_argument("base_vanishing_sum: representation does not sum to n");
  }

  ExponentMultiset out(m_prime);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t q = primes[i];
    const std::uint64_t stride = m_prime / q;
    // Each full q-cycle sums to zero; a rotation multiplies the cycle by a
    // fixed root, so every rotated copy still vanishes.
    for (std::uint64_t copy = 0; copy < rep[i]; ++copy) {
      const std::uint64_t offset = copy % m_prime;
      for (std::uint64_t j = 0; j < q; ++j) {
        std::uint64_t e = j * stride + offset;
        if (e >= m_prime) e -= m_prime;
        out.add(e);
      }
    }
  }
  return out;
}

WitnessCertificate lift_witness(const ExponentMultiset& base, std::uint64_t ell, std::uint64_t m,
                                bool distinct) {
  if (ell == 0 || m == 0) throw std::invalid_argument("lift_witness: ell and m must be positive");
  const std::uint64_t d = std::gcd(m, ell);
  const std::uint64_t m_prime = m / d;
  if (base.modulus() != m_prime) {
    throw std::invalid_argument("lift_witness: base modulus " + std::to_string(base.modulus()) +
                                " is not m/gcd(m,ell) = " + std::to_string(m_prime));
  }
  if (m_prime == 1) throw std::invalid_argument("lift_witness: m divides ell, nothing to lift");

  // (ell/d) is invertible mod m/d, so each base exponent t pulls back to
  // e0 = inv(ell/d) * t (mod m/d).
  const std::uint64_t inv = mod_inverse((ell / d) % m_prime, m_prime);

  WitnessCertificate cert;
  cert.m = m;
  cert.ell = ell;
  cert.n = base.size();
  cert.exponents = ExponentMultiset(m);
  for (const auto& [t, a] : base) {
    const std::uint64_t e0 =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(inv) * t) % m_prime);
    if (distinct) {
      if (a > d) {
        throw std::invalid_argument("lift_witness: multiplicity " + std::to_string(a) +
                                    " exceeds the fiber size d = " + std::to_string(d) +
                                    ", no distinct lift exists");
      }
      for (std::uint64_t k = 0; k < a; ++k) cert.exponents.add(e0 + k * m_prime);
    } else {
      cert.exponents.add(e0, a);
    }
  }
  cert.distinct = cert.exponents.all_distinct();

  std::ostringstream step;
  step << "lift: d=" << d << " m'=" << m_prime << " inv(" << (ell / d) % m_prime << " mod "
       << m_prime << ")=" << inv << (distinct ? ", fibers e0+k*m', k=0..a-1" : ", all mass on e0");
  cert.derivation.push_back(step.str());
  return cert;
}

std::optional<WitnessCertificate> construct(const WQuery& query, bool want_distinct,
                                            std::uint64_t node_budget) {
  if (!decide(query)) return std::nullopt;
  const WReduction red = reduce(query.ell, query.m);

  std::ostringstream reduce_step;
  reduce_step << "reduce: d=gcd(" << query.m << "," << query.ell << ")=" << red.d
              << " m'=" << red.m_prime;

  // Distinct witnesses need n slots among m roots.
  if (want_distinct && query.n > query.m) return std::nullopt;

  const PrimeSemigroup sg = PrimeSemigroup::build(red.primes);
  const auto rep = sg.representation(query.n);
  if (!rep) throw std::logic_error("construct: decide and representation disagree");

  std::ostringstream rep_step;
  rep_step << "representation: " << query.n << " =";
  for (std::size_t i = red.primes.size(); i-- > 0;) {
    if ((*rep)[i] == 0) continue;
    rep_step << " " << (*rep)[i] << "*" << red.primes[i] << " +";
  }
  std::string rep_text = rep_step.str();
  rep_text.erase(rep_text.size() - 2);  // trailing " +"

  ExponentMultiset base = base_vanishing_sum(query.n, red.m_prime, red.primes, *rep);
  std::string base_step = "base: rotation-spread cycles in Z_" + std::to_string(red.m_prime);

  if (want_distinct && base.max_multiplicity() > red.d) {
    // The spread base repeats too much; look for any base sum with
    // multiplicities within the fiber bound.
    SearchSpec spec;
    spec.m = red.m_prime;
    spec.n = query.n;
    spec.ell = 1;
    spec.max_multiplicity = red.d;
    spec.distinct_only = (red.d == 1);
    spec.node_budget = node_budget;
    const SearchOutcome outcome = exists_witness(spec);
    if (outcome.status == SearchStatus::kBudgetExceeded) {
      throw BudgetExceeded("construct: base search exceeded " + std::to_string(node_budget) +
                           " nodes");
    }
    if (outcome.status == SearchStatus::kNotFound) return std::nullopt;
    base = *outcome.witness;
    base_step = "base: bounded exhaustive search in Z_" + std::to_string(red.m_prime) +
                " with multiplicities <= " + std::to_string(red.d);
  }

  WitnessCertificate cert = lift_witness(base, query.ell, query.m, want_distinct);
  cert.derivation.insert(cert.derivation.begin(),
                         {reduce_step.str(), rep_text, base_step});
  std::string why;
  if (!verify_certificate(cert, &why)) {
    throw std::logic_error("construct: certificate failed verification: " + why);
  }
  return cert;
}

}  // namespace cyclosum
