// Command-line front end: decide / witness / verify / height / table.
//
// Exit codes: 0 = question answered (even when the answer is no),
//             1 = usage or input error,
//             2 = search budget exceeded.

#include "cyclosum/certificate.hpp"
#include "cyclosum/height.hpp"
#include "cyclosum/numbers.hpp"
#include "cyclosum/oracle.hpp"
#include "cyclosum/solver.hpp"
#include "cyclosum/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

namespace {

using cyclosum::WQuery;
using Json = nlohmann::ordered_json;

constexpr int kExitAnswered = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct Options {
  std::uint64_t n = 0;
  std::uint64_t ell = 0;
  std::uint64_t m = 0;
  bool distinct = false;
  bool reverify = false;
  bool json = false;
  std::uint64_t budget = cyclosum::kDefaultNodeBudget;
  std::string cert_file;
  std::string out_file;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Json certificate_json(const cyclosum::WitnessCertificate& cert) {
  return Json::parse(cyclosum::serialize_certificate(cert));
}

std::string primes_text(const std::vector<std::uint64_t>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(primes[i]);
  }
  return out + "}";
}

int run_decide(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const WQuery query{opt.n, opt.ell, opt.m};
  const cyclosum::WReduction red = cyclosum::reduce(opt.ell, opt.m);
  const bool member = cyclosum::decide(query);

  std::optional<std::vector<std::uint64_t>> rep;
  if (member) {
    rep = cyclosum::PrimeSemigroup::build(red.primes).representation(opt.n);
  }

  if (opt.json) {
    Json j;
    j["command"] = "decide";
    j["inputs"] = {{"n", opt.n}, {"l", opt.ell}, {"m", opt.m}};
    Json res;
    res["member"] = member;
    res["d"] = red.d;
    res["m_prime"] = red.m_prime;
    res["primes"] = red.primes;
    if (rep) res["representation"] = *rep;
    j["result"] = std::move(res);
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump() << "\n";
    return kExitAnswered;
  }

  std::cout << "decide: n=" << opt.n << " l=" << opt.ell << " m=" << opt.m << "\n";
  std::cout << "reduction: d=" << red.d << " m'=" << red.m_prime
            << " primes=" << primes_text(red.primes) << "\n";
  if (red.m_prime == 1) {
    std::cout << "degenerate: m divides l, no size works\n";
  } else if (rep) {
    std::cout << "representation: " << opt.n << " =";
    bool any = false;
    for (std::size_t i = red.primes.size(); i-- > 0;) {
      if ((*rep)[i] == 0) continue;
      std::cout << (any ? " + " : " ") << (*rep)[i] << "*" << red.primes[i];
      any = true;
    }
    std::cout << "\n";
  } else {
    std::cout << "representation: none (" << opt.n << " is a gap of "
              << primes_text(red.primes) << ")\n";
  }
  std::cout << "result: " << (member ? "true" : "false") << "\n";
  return kExitAnswered;
}

int run_witness(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const WQuery query{opt.n, opt.ell, opt.m};
  std::optional<cyclosum::WitnessCertificate> cert =
      cyclosum::construct(query, opt.distinct, opt.budget);

  std::string reason;
  if (!cert) {
    if (!cyclosum::decide(query)) {
      reason = "n not in the solvable set for (l, m)";
    } else {
      // Distinct was requested; report the height that blocks it.
      const auto hr = cyclosum::compute_height(opt.n, opt.ell, opt.m, opt.budget);
      if (hr.status == cyclosum::HeightResult::Status::kDefined) {
        reason = "no distinct witness: H(" + std::to_string(opt.n) + ";" +
                 std::to_string(opt.ell) + "," + std::to_string(opt.m) +
                 ")=" + std::to_string(hr.h) + " > 1";
      } else {
        reason = "no distinct witness";
      }
    }
  }

  bool verified = false;
  if (cert && opt.reverify) verified = cyclosum::verify_certificate(*cert);

  if (opt.json) {
    Json j;
    j["command"] = "witness";
    j["inputs"] = {{"n", opt.n}, {"l", opt.ell}, {"m", opt.m}, {"distinct", opt.distinct}};
    Json res;
    res["found"] = static_cast<bool>(cert);
    if (!cert) res["reason"] = reason;
    if (cert && opt.reverify) res["verified"] = verified;
    j["result"] = std::move(res);
    if (cert) j["certificate"] = certificate_json(*cert);
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "witness: n=" << opt.n << " l=" << opt.ell << " m=" << opt.m
              << " distinct=" << (opt.distinct ? "true" : "false") << "\n";
    if (cert) {
      std::cout << "result: found\n";
      if (opt.reverify) std::cout << "verified: " << (verified ? "true" : "false") << "\n";
      std::cout << cyclosum::serialize_certificate(*cert);
    } else {
      std::cout << "result: none\n";
      std::cout << "reason: " << reason << "\n";
    }
  }
  if (cert && !opt.out_file.empty()) cyclosum::save_certificate(*cert, opt.out_file);
  return kExitAnswered;
}

int run_verify(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const cyclosum::WitnessCertificate cert = cyclosum::load_certificate(opt.cert_file);
  std::string why;
  const bool valid = cyclosum::verify_certificate(cert, &why);

  if (opt.json) {
    Json j;
    j["command"] = "verify";
    j["inputs"] = {{"file", opt.cert_file}};
    Json res;
    res["valid"] = valid;
    if (!valid) res["reason"] = why;
    j["result"] = std::move(res);
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump() << "\n";
    return kExitAnswered;
  }

  std::cout << "verify: " << opt.cert_file << "\n";
  std::cout << "certificate: m=" << cert.m << " l=" << cert.ell << " n=" << cert.n
            << " distinct=" << (cert.distinct ? "true" : "false") << "\n";
  std::cout << "result: " << (valid ? "valid" : "invalid") << "\n";
  if (!valid) std::cout << "reason: " << why << "\n";
  return kExitAnswered;
}

int run_height(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const cyclosum::HeightResult hr = cyclosum::compute_height(opt.n, opt.ell, opt.m, opt.budget);

  const char* method = nullptr;
  switch (hr.method) {
    case cyclosum::HeightResult::Method::kSivek: method = "sivek"; break;
    case cyclosum::HeightResult::Method::kReduction: method = "reduction"; break;
    case cyclosum::HeightResult::Method::kExhaustive: method = "exhaustive"; break;
  }

  if (opt.json) {
    Json j;
    j["command"] = "height";
    j["inputs"] = {{"n", opt.n}, {"l", opt.ell}, {"m", opt.m}};
    Json res;
    switch (hr.status) {
      case cyclosum::HeightResult::Status::kDefined:
        res["status"] = "defined";
        res["h"] = hr.h;
        res["method"] = method;
        break;
      case cyclosum::HeightResult::Status::kUndefined:
        res["status"] = "undefined";
        break;
      case cyclosum::HeightResult::Status::kUnknown:
        res["status"] = "unknown";
        res["lower_bound"] = hr.lower_bound;
        break;
    }
    j["result"] = std::move(res);
    if (hr.witness) j["certificate"] = certificate_json(*hr.witness);
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "height: n=" << opt.n << " l=" << opt.ell << " m=" << opt.m << "\n";
    switch (hr.status) {
      case cyclosum::HeightResult::Status::kDefined:
        std::cout << "result: h=" << hr.h << "\n";
        std::cout << "method: " << method << "\n";
        std::cout << cyclosum::serialize_certificate(*hr.witness);
        break;
      case cyclosum::HeightResult::Status::kUndefined:
        std::cout << "result: undefined (no witness of any multiplicity)\n";
        break;
      case cyclosum::HeightResult::Status::kUnknown:
        std::cout << "result: unknown (h >= " << hr.lower_bound << ", budget exceeded)\n";
        break;
    }
  }
  if (hr.witness && !opt.out_file.empty()) cyclosum::save_certificate(*hr.witness, opt.out_file);
  return hr.status == cyclosum::HeightResult::Status::kUnknown ? kExitBudget : kExitAnswered;
}

int run_table(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> divs = cyclosum::divisors(opt.m);

  if (opt.json) {
    Json j;
    j["command"] = "table";
    j["inputs"] = {{"m", opt.m}};
    Json rows = Json::array();
    for (std::uint64_t d : divs) {
      rows.push_back({{"d", d}, {"wset", cyclosum::describe(1, d).to_string()}});
    }
    j["result"] = {{"rows", std::move(rows)}};
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump() << "\n";
    return kExitAnswered;
  }

  std::cout << "d | W(d)\n";
  for (std::uint64_t d : divs) {
    std::cout << d << " | " << cyclosum::describe(1, d).to_string() << "\n";
  }
  return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing power sums of roots of unity: decisions, witnesses, heights"};
  app.require_subcommand(1);

  Options opt;

  auto add_query_flags = [&](CLI::App* cmd, bool with_n) {
    if (with_n) cmd->add_option("-n", opt.n, "target size n (positive)")->required();
    cmd->add_option("-l", opt.ell, "power l (positive)")->required();
    cmd->add_option("-m", opt.m, "root-of-unity order m (positive)")->required();
  };

  CLI::App* decide = app.add_subcommand("decide", "Can n order-m roots have vanishing l-th power sum?");
  add_query_flags(decide, true);
  decide->add_flag("--json", opt.json, "emit one JSON record");

  CLI::App* witness = app.add_subcommand("witness", "Construct an explicit witness certificate");
  add_query_flags(witness, true);
  witness->add_flag("--distinct", opt.distinct, "require pairwise distinct roots");
  witness->add_flag("--verify", opt.reverify, "re-check the certificate after construction");
  witness->add_option("--out", opt.out_file, "write the certificate to this file");
  witness->add_option("--budget", opt.budget, "search node budget")
      ->default_val(cyclosum::kDefaultNodeBudget);
  witness->add_flag("--json", opt.json, "emit one JSON record");

  CLI::App* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("file", opt.cert_file, "certificate JSON file")->required();
  verify->add_flag("--json", opt.json, "emit one JSON record");

  CLI::App* height = app.add_subcommand("height", "Minimal maximum multiplicity over all witnesses");
  add_query_flags(height, true);
  height->add_option("--budget", opt.budget, "search node budget")
      ->default_val(cyclosum::kDefaultNodeBudget);
  height->add_option("--out", opt.out_file, "write the optimal certificate to this file");
  height->add_flag("--json", opt.json, "emit one JSON record");

  CLI::App* table = app.add_subcommand("table", "Solution-set table over all divisors of m");
  table->add_option("-m", opt.m, "order m (positive)")->required();
  table->add_flag("--json", opt.json, "emit one JSON record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitAnswered : kExitUsage;
  }

  try {
    if (decide->parsed()) return run_decide(opt);
    if (witness->parsed()) return run_witness(opt);
    if (verify->parsed()) return run_verify(opt);
    if (height->parsed()) return run_height(opt);
    if (table->parsed()) return run_table(opt);
  } catch (const cyclosum::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
