#include "cyclosum/certificate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclosum {

bool verify_certificate(const WitnessCertificate& cert, std::string* diagnostic) {
  auto reject = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  if (cert.exponents.modulus() != cert.m) {
    return reject("modulus mismatch: certificate m=" + std::to_string(cert.m) +
                  " but exponent multiset has modulus " +
                  std::to_string(cert.exponents.modulus()));
  }
  if (cert.exponents.size() != cert.n) {
    return reject("size mismatch: n=" + std::to_string(cert.n) + " but multiset holds " +
                  std::to_string(cert.exponents.size()) + " roots");
  }
  if (cert.n == 0) return reject("empty certificate: n must be positive");
  if (cert.distinct && !cert.exponents.all_distinct()) {
    return reject("distinct flag set but some multiplicity exceeds 1");
  }
  if (!is_zero(from_power_map(cert.exponents, cert.ell))) {
    return reject("power sum does not vanish");
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

namespace {

nlohmann::ordered_json to_json(const WitnessCertificate& cert) {
  nlohmann::ordered_json j;
  j["m"] = cert.m;
  j["ell"] = cert.ell;
  j["n"] = cert.n;
  auto exps = nlohmann::ordered_json::array();
  for (const auto& [e, a] : cert.exponents) exps.push_back({e, a});
  j["exponents"] = std::move(exps);
  j["distinct"] = cert.distinct;
  j["derivation"] = cert.derivation;
  return j;
}

}  // namespace

std::string serialize_certificate(const WitnessCertificate& cert) {
  return to_json(cert).dump(2) + "\n";
}

WitnessCertificate parse_certificate(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate parse error: ") + e.what());
  }
  try {
    WitnessCertificate cert;
    cert.m = j.at("m").get<std::uint64_t>();
    cert.ell = j.at("ell").get<std::uint64_t>();
    cert.n = j.at("n").get<std::uint64_t>();
    cert.exponents = ExponentMultiset(cert.m);
    for (const auto& pair : j.at("exponents")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("certificate parse error: exponent entries must be [e, count]");
      }
      cert.exponents.add(pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>());
    }
    cert.distinct = j.at("distinct").get<bool>();
    cert.derivation = j.at("derivation").get<std::vector<std::string>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate parse error: ") + e.what());
  }
}

void save_certificate(const WitnessCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_certificate(cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

WitnessCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace cyclosum
