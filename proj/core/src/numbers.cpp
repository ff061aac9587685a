#include "cyclosum/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclosum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_support(std::uint64_t n) {
  std::vector<std::uint64_t> support;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) {
      support.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) support.push_back(n);
  return support;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (std::uint64_t p : prime_support(n)) phi -= phi / p;
  return phi;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  a %= m;
  // Iterative extended Euclid on (m, a); tracks only the coefficient of a.
  // Intermediates held in 128 bits: |t| < m can sit next to q*t_next ~ 2m.
  __int128 t = 0, t_next = 1;
  std::uint64_t r = m, r_next = a;
  while (r_next != 0) {
    std::uint64_t q = r / r_next;
    __int128 t_tmp = t - static_cast<__int128>(q) * t_next;
    t = t_next;
    t_next = t_tmp;
    std::uint64_t r_tmp = r - q * r_next;
    r = r_next;
    r_next = r_tmp;
  }
  if (r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace cyclosum
