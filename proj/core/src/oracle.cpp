#include "cyclosum/oracle.hpp"

#include "cyclosum/int_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace cyclosum {

namespace {

// Memory guard: the search keeps per-position functional bases of size up
// to phi(m)^2 alongside the per-exponent tables.
constexpr std::uint64_t kMaxSearchModulus = 256;

// Per-(m, ell) data shared by both search phases.
struct Tables {
  std::uint64_t m = 0;
  std::size_t dim = 0;                           // deg Phi_m
  std::vector<std::vector<std::int64_t>> red;    // exponent e -> x^{ell*e mod m} mod Phi_m
  std::vector<std::complex<double>> unit;        // exponent e -> e^{2*pi*i*(ell*e mod m)/m}
  std::int64_t coord_bound = 0;                  // max |red[e][j]|
};

Tables build_tables(std::uint64_t m, std::uint64_t ell) {
  Tables t;
  t.m = m;
  const IntPolynomial& phi = cyclotomic_polynomial(m);
  t.dim = static_cast<std::size_t>(phi.degree());
  t.red.resize(m);
  t.unit.resize(m);
  const std::uint64_t ell_mod = ell % m;
  for (std::uint64_t e = 0; e < m; ++e) {
    const std::uint64_t target =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(ell_mod) * e) % m);
    auto [quot, rem] = IntPolynomial::div_rem_monic(
        IntPolynomial::monomial(static_cast<std::size_t>(target)), phi);
    std::vector<std::int64_t> row(t.dim, 0);
    for (std::size_t j = 0; j < t.dim; ++j) {
      const BigInt& c = rem.coeff(j);
      if (c > std::numeric_limits<std::int64_t>::max() ||
          c < std::numeric_limits<std::int64_t>::min()) {
        throw std::length_error("exists_witness: reduction coefficients exceed 64 bits");
      }
      row[j] = static_cast<std::int64_t>(c);
      t.coord_bound = std::max(t.coord_bound, std::abs(row[j]));
    }
    t.red[e] = std::move(row);
    t.unit[e] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(target) /
                                    static_cast<double>(m));
  }
  return t;
}

// Exact integer basis of {lambda : lambda . v = 0 for all v in rows},
// built incrementally: intersecting the current basis with one hyperplane
// costs a pivot elimination and drops the rank by at most 1.
class NullspaceBasis {
 public:
  explicit NullspaceBasis(std::size_t dim) {
    basis_.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) basis_[i].assign(dim, 0), basis_[i][i] = 1;
  }

  void intersect_with_orthogonal(const std::vector<std::int64_t>& v) {
    std::vector<BigInt> dots(basis_.size(), 0);
    std::size_t pivot = basis_.size();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      BigInt d = 0;
      for (std::size_t j = 0; j < v.size(); ++j) d += basis_[i][j] * v[j];
      dots[i] = std::move(d);
      if (pivot == basis_.size() && dots[i] != 0) pivot = i;
    }
    if (pivot == basis_.size()) return;  // v already orthogonal to the span
    std::vector<std::vector<BigInt>> next;
    next.reserve(basis_.size() - 1);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i == pivot) continue;
      if (dots[i] == 0) {
        next.push_back(std::move(basis_[i]));
        continue;
      }
      std::vector<BigInt> combo(basis_[i].size());
      BigInt g = 0;
      for (std::size_t j = 0; j < combo.size(); ++j) {
        combo[j] = basis_[i][j] * dots[pivot] - basis_[pivot][j] * dots[i];
        g = boost::multiprecision::gcd(g, combo[j]);
      }
      if (g > 1) {
        for (auto& c : combo) c /= g;
      }
      next.push_back(std::move(combo));
    }
    basis_ = std::move(next);
  }

  const std::vector<std::vector<BigInt>>& vectors() const { return basis_; }

 private:
  std::vector<std::vector<BigInt>> basis_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint64_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

constexpr std::size_t kMemoCapacity = std::size_t{1} << 20;

// One DFS over a fixed exponent order. Prunes are exact except the
// floating magnitude bound, whose margin dominates the worst-case
// accumulated round-off along a root-to-leaf path.
class OrderedSearch {
 public:
  OrderedSearch(const Tables& tables, std::vector<std::uint64_t> order, const SearchSpec& spec,
                std::uint64_t& nodes)
      : t_(tables),
        order_(std::move(order)),
        spec_(spec),
        nodes_(nodes),
        float_margin_(1e-7 + 1e-9 * static_cast<double>(spec.n)) {
    build_functionals();
    sum_.assign(t_.dim, 0);
    assign_.assign(t_.m, 0);
    found_assign_.assign(t_.m, 0);
  }

  // Found -> true; exhausted -> false; budget exhaustion sets exceeded().
  bool run() { return dfs(0, spec_.n, {0.0, 0.0}); }

  bool exceeded() const { return exceeded_; }

  ExponentMultiset witness() const {
    ExponentMultiset ms(t_.m);
    for (std::uint64_t e = 0; e < t_.m; ++e) {
      if (found_assign_[e] > 0) ms.add(e, found_assign_[e]);
    }
    return ms;
  }

 private:
  void build_functionals() {
    // Nullspace of the still-unplaced exponent vectors, per position:
    // any functional vanishing on everything ahead must already
    // annihilate the partial sum. Built back to front.
    funcs_.assign(order_.size() + 1, {});
    NullspaceBasis basis(t_.dim);
    const BigInt coord_cap = BigInt(spec_.n) * t_.coord_bound + 1;
    for (std::size_t k = order_.size() + 1; k-- > 0;) {
      if (k == order_.size()) {
        // never consulted: the walk ends before reaching this position
        basis.intersect_with_orthogonal(t_.red[order_[k - 1]]);
        continue;
      }
      for (const auto& lambda : basis.vectors()) {
        // Keep only functionals whose dot products provably fit int64.
        BigInt reach = 0;
        std::vector<std::int64_t> fitted(t_.dim);
        bool fits = true;
        for (std::size_t j = 0; j < t_.dim; ++j) {
          reach += abs(lambda[j]) * coord_cap;
          if (lambda[j] > std::numeric_limits<std::int64_t>::max() ||
              lambda[j] < std::numeric_limits<std::int64_t>::min()) {
            fits = false;
            break;
          }
          fitted[j] = static_cast<std::int64_t>(lambda[j]);
        }
        if (!fits || reach >= (BigInt(1) << 62)) continue;
        funcs_[k].push_back(std::move(fitted));
      }
      if (k > 0) basis.intersect_with_orthogonal(t_.red[order_[k - 1]]);
    }
  }

  // sum_c tracks the partial power sum as a complex number, passed by
  // value so round-off never outlives a path.
  bool dfs(std::size_t k, std::uint64_t rem, std::complex<double> sum_c) {
    if (++nodes_ > spec_.node_budget) {
      exceeded_ = true;
      return false;
    }
    if (rem == 0) {
      for (std::int64_t v : sum_) {
        if (v != 0) return false;
      }
      found_assign_ = assign_;
      return true;
    }
    if (k == order_.size()) return false;
    if (static_cast<unsigned __int128>(order_.size() - k) * spec_.max_multiplicity < rem) {
      return false;
    }
    if (std::abs(sum_c) > static_cast<double>(rem) + float_margin_) return false;
    for (const auto& lambda : funcs_[k]) {
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < t_.dim; ++j) dot += lambda[j] * sum_[j];
      if (dot != 0) return false;
    }
    std::vector<std::int64_t> key;
    key.reserve(t_.dim + 2);
    key.push_back(static_cast<std::int64_t>(k));
    key.push_back(static_cast<std::int64_t>(rem));
    key.insert(key.end(), sum_.begin(), sum_.end());
    if (failed_.contains(key)) return false;

    const std::uint64_t e = order_[k];
    const auto& delta = t_.red[e];
    const std::uint64_t a_max = std::min(spec_.max_multiplicity, rem);
    const std::uint64_t a_min = (e == 0 && spec_.use_rotation_symmetry) ? 1 : 0;
    for (std::uint64_t a = a_max; a + 1 > a_min; --a) {
      if (a > 0) {
        for (std::size_t j = 0; j < t_.dim; ++j) sum_[j] += static_cast<std::int64_t>(a) * delta[j];
        assign_[e] = a;
      }
      const bool hit = dfs(k + 1, rem - a, sum_c + static_cast<double>(a) * t_.unit[e]);
      if (a > 0) {
        for (std::size_t j = 0; j < t_.dim; ++j) sum_[j] -= static_cast<std::int64_t>(a) * delta[j];
        assign_[e] = 0;
      }
      if (hit) return true;
      if (exceeded_) return false;
    }
    if (failed_.size() < kMemoCapacity) failed_.insert(std::move(key));
    return false;
  }

  const Tables& t_;
  std::vector<std::uint64_t> order_;
  const SearchSpec& spec_;
  std::uint64_t& nodes_;
  double float_margin_;
  std::vector<std::vector<std::vector<std::int64_t>>> funcs_;
  std::vector<std::int64_t> sum_;
  std::vector<std::uint64_t> assign_;
  std::vector<std::uint64_t> found_assign_;
  std::unordered_set<std::vector<std::int64_t>, KeyHash> failed_;
  bool exceeded_ = false;
};

// Order that closes coordinates early: repeatedly take the coordinate with
// the fewest unplaced supporters and emit those supporters, ascending.
// Refutations then meet the nullspace functionals at shallow depth.
std::vector<std::uint64_t> coordinate_closing_order(const Tables& t) {
  std::vector<std::uint64_t> order;
  order.reserve(t.m);
  std::vector<char> used(t.m, 0);
  while (order.size() < t.m) {
    std::size_t best_coord = t.dim;
    std::uint64_t best_count = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j < t.dim; ++j) {
      std::uint64_t count = 0;
      for (std::uint64_t e = 0; e < t.m; ++e) {
        if (!used[e] && t.red[e][j] != 0) ++count;
      }
      if (count > 0 && count < best_count) {
        best_count = count;
        best_coord = j;
      }
    }
    if (best_coord == t.dim) {
      // leftovers reduce to the zero vector (cannot happen for x^t mod Phi_m)
      for (std::uint64_t e = 0; e < t.m; ++e) {
        if (!used[e]) order.push_back(e), used[e] = 1;
      }
      break;
    }
    for (std::uint64_t e = 0; e < t.m; ++e) {
      if (!used[e] && t.red[e][best_coord] != 0) {
        order.push_back(e);
        used[e] = 1;
      }
    }
  }
  return order;
}

void validate(const SearchSpec& spec) {
  if (spec.m == 0 || spec.ell == 0) {
    throw std::invalid_argument("exists_witness: m and ell must be positive");
  }
  if (spec.max_multiplicity == 0) {
    throw std::invalid_argument("exists_witness: max_multiplicity must be positive");
  }
  if (spec.distinct_only && spec.max_multiplicity != 1) {
    throw std::invalid_argument("exists_witness: distinct_only requires max_multiplicity = 1");
  }
  if (spec.distinct_only && spec.n > spec.m) {
    throw std::invalid_argument("exists_witness: distinct search needs n <= m");
  }
  if (spec.m > kMaxSearchModulus) {
    throw std::length_error("exists_witness: modulus too large for exhaustive search");
  }
}

}  // namespace

SearchOutcome exists_witness(const SearchSpec& spec) {
  validate(spec);
  SearchOutcome out;
  if (spec.n == 0) {
    out.status = SearchStatus::kFound;
    out.witness = ExponentMultiset(spec.m);
    return out;
  }
  const Tables tables = build_tables(spec.m, spec.ell);
  if (BigInt(spec.n) * tables.coord_bound >= (BigInt(1) << 62)) {
    throw std::length_error("exists_witness: n too large for exact 64-bit partial sums");
  }

  std::uint64_t nodes = 0;
  // Phase 1 settles existence with the refutation-friendly order; phase 2
  // reruns in ascending exponent order, whose first hit is the
  // lexicographically smallest witness.
  OrderedSearch existence(tables, coordinate_closing_order(tables), spec, nodes);
  const bool seen = existence.run();
  if (existence.exceeded()) {
    out.status = SearchStatus::kBudgetExceeded;
    out.nodes_visited = nodes;
    return out;
  }
  if (!seen) {
    out.status = SearchStatus::kNotFound;
    out.nodes_visited = nodes;
    return out;
  }

  std::vector<std::uint64_t> ascending(tables.m);
  for (std::uint64_t e = 0; e < tables.m; ++e) ascending[e] = e;
  OrderedSearch canonical(tables, std::move(ascending), spec, nodes);
  const bool hit = canonical.run();
  out.nodes_visited = nodes;
  if (canonical.exceeded()) {
    out.status = SearchStatus::kBudgetExceeded;
    return out;
  }
  if (!hit) throw std::logic_error("exists_witness: canonical pass lost a known witness");
  ExponentMultiset witness = canonical.witness();
  if (!is_zero(from_power_map(witness, spec.ell))) {
    throw std::logic_error("exists_witness: witness failed the exact zero test");
  }
  out.status = SearchStatus::kFound;
  out.witness = std::move(witness);
  return out;
}

std::vector<SearchStatus> enumerate_W(std::uint64_t m, std::uint64_t ell, std::uint64_t n_max,
                                      std::uint64_t node_budget_per_entry) {
  std::vector<SearchStatus> result;
  result.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    SearchSpec spec;
    spec.m = m;
    spec.n = n;
    spec.ell = ell;
    spec.max_multiplicity = n;  // unbounded in effect
    spec.node_budget = node_budget_per_entry;
    result.push_back(exists_witness(spec).status);
  }
  return result;
}

}  // namespace cyclosum
