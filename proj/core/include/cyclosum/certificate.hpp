#pragma once

#include "cyclosum/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclosum {

/// Self-contained claim that some n m-th roots of unity have vanishing
/// ell-th power sum, with the explicit exponent multiset realizing it and
/// a human-readable construction trace. Checkable by verify_certificate.
struct WitnessCertificate {
  std::uint64_t m = 1;
  std::uint64_t ell = 1;
  std::uint64_t n = 0;
  ExponentMultiset exponents{1};
  bool distinct = false;
  std::vector<std::string> derivation;
};

/// True iff the certificate is internally consistent and its power sum
/// vanishes exactly: n equals the multiset size, the multiset modulus
/// matches m, the distinct flag (if set) is honored by the multiplicities,
/// and the reduced ell-power sum is zero. On rejection, writes a one-line
/// reason into *diagnostic when given.
bool verify_certificate(const WitnessCertificate& cert, std::string* diagnostic = nullptr);

/// Canonical serialization: a JSON object with fixed field order
/// {m, ell, n, exponents, distinct, derivation}, exponents as [e, count]
/// pairs sorted ascending. Byte-stable for identical certificates.
std::string serialize_certificate(const WitnessCertificate& cert);

/// Inverse of serialize_certificate. Throws std::invalid_argument on
/// malformed input.
WitnessCertificate parse_certificate(const std::string& text);

/// File helpers; throw std::runtime_error on I/O failure.
void save_certificate(const WitnessCertificate& cert, const std::string& path);
WitnessCertificate load_certificate(const std::string& path);

}  // namespace cyclosum
