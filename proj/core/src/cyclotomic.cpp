#include "cyclosum/cyclotomic.hpp"

#include "cyclosum/numbers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cyclosum {

ExponentMultiset::ExponentMultiset(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("ExponentMultiset: modulus must be positive");
}

void ExponentMultiset::add(std::uint64_t exponent, std::uint64_t count) {
  if (exponent >= modulus_) {
    throw std::out_of_range("ExponentMultiset: exponent " + std::to_string(exponent) +
                            " out of range for modulus " + std::to_string(modulus_));
  }
  if (count == 0) throw std::invalid_argument("ExponentMultiset: count must be positive");
  std::uint64_t new_total;
  if (__builtin_add_overflow(total_, count, &new_total)) {
    throw std::overflow_error("ExponentMultiset: total size overflow");
  }
  total_ = new_total;
  entries_[exponent] += count;
}

std::uint64_t ExponentMultiset::multiplicity(std::uint64_t exponent) const {
  auto it = entries_.find(exponent);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t ExponentMultiset::max_multiplicity() const {
  std::uint64_t best = 0;
  for (const auto& [e, a] : entries_) best = std::max(best, a);
  return best;
}

ExponentMultiset ExponentMultiset::rotated(std::uint64_t c) const {
  ExponentMultiset out(modulus_);
  c %= modulus_;
  for (const auto& [e, a] : entries_) {
    std::uint64_t shifted = e + c >= modulus_ ? e + c - modulus_ : e + c;
    out.add(shifted, a);
  }
  return out;
}

CyclotomicElement::CyclotomicElement(std::uint64_t modulus, std::vector<BigInt> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw std::invalid_argument("CyclotomicElement: modulus must be positive");
  if (coeffs_.size() != modulus) {
    throw std::invalid_argument("CyclotomicElement: coefficient vector must have length " +
                                std::to_string(modulus));
  }
}

CyclotomicElement CyclotomicElement::zero(std::uint64_t modulus) {
  return CyclotomicElement(modulus, std::vector<BigInt>(modulus));
}

namespace {

std::mutex g_phi_mutex;
std::map<std::uint64_t, IntPolynomial>& phi_table() {
  static std::map<std::uint64_t, IntPolynomial> table;
  return table;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto& table = phi_table();
  if (auto it = table.find(m); it != table.end()) return it->second;
  // Fill ascending over divisors so every proper divisor is ready first.
  for (std::uint64_t d : divisors(m)) {
    if (table.count(d)) continue;
    if (d == 1) {
      table.emplace(1, IntPolynomial({-1, 1}));  // x - 1
      continue;
    }
    IntPolynomial product = IntPolynomial::one();
    for (std::uint64_t e : divisors(d)) {
      if (e < d) product = product * table.at(e);
    }
    // divide_exact throws if the remainder is nonzero, which would mean a
    // broken table; cyclotomic polynomials divide x^d - 1 exactly.
    table.emplace(d, IntPolynomial::divide_exact(IntPolynomial::power_minus_one(d), product));
  }
  return table.at(m);
}

CyclotomicElement from_power_map(const ExponentMultiset& s, std::uint64_t ell) {
  const std::uint64_t m = s.modulus();
  const std::uint64_t ell_mod = ell % m;
  std::vector<BigInt> coeffs(m);
  for (const auto& [e, a] : s) {
    std::uint64_t target =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(ell_mod) * e) % m);
    coeffs[target] += a;
  }
  return CyclotomicElement(m, std::move(coeffs));
}

bool is_zero(const CyclotomicElement& v) {
  IntPolynomial as_poly(v.coeffs());
  if (as_poly.is_zero()) return true;
  auto [quot, rem] = IntPolynomial::div_rem_monic(as_poly, cyclotomic_polynomial(v.modulus()));
  return rem.is_zero();
}

}  // namespace cyclosum
