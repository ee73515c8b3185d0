#include "fgl/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fgl {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Int zpow(const Int& base, int exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int GroupDescriptor::order() const {
  Int n = 1;
  for (long d : invariant_factors) n *= d;
  return n;
}

std::string GroupDescriptor::label() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) os << " x ";
    os << invariant_factors[i];
  }
  return os.str();
}

int PGroupType::exponent_sum() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Int PGroupType::order() const { return zpow(Int(prime), exponent_sum()); }

std::vector<long> PGroupType::moduli() const {
  std::vector<long> m;
  m.reserve(exponents.size());
  for (int a : exponents) m.push_back(ipow(prime, a));
  return m;
}

std::string PGroupType::label() const {
  std::ostringstream os;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (i) os << " x ";
    os << ipow(prime, exponents[i]);
  }
  return os.str();
}

void PGroupType::check() const {
  if (!is_prime(prime))
    throw std::invalid_argument("PGroupType: " + std::to_string(prime) +
                                " is not prime");
  if (exponents.empty())
    throw std::invalid_argument("PGroupType: empty exponent list");
  int prev = 0;
  for (int a : exponents) {
    if (a < 1) throw std::invalid_argument("PGroupType: exponent must be >= 1");
    if (a < prev)
      throw std::invalid_argument("PGroupType: exponents must be ascending");
    prev = a;
  }
}

GroupDescriptor normalize(const std::vector<long>& moduli) {
  // Collect, per prime, all exponents contributed by the cyclic factors.
  std::map<long, std::vector<int>> exps;
  for (long m : moduli) {
    if (m < 2) throw std::invalid_argument("normalize: modulus must be >= 2");
    for (auto [p, e] : factorize(m)) exps[p].push_back(e);
  }
  // Invariant factor j (counted from the largest) takes the j-th largest
  // exponent of every prime.
  size_t rank = 0;
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    rank = std::max(rank, v.size());
  }
  std::vector<long> factors(rank, 1);
  for (const auto& [p, v] : exps)
    for (size_t j = 0; j < v.size(); ++j) factors[j] *= ipow(p, v[j]);
  std::reverse(factors.begin(), factors.end());
  return GroupDescriptor{std::move(factors)};
}

PrimaryDecomposition primary_decomposition(const GroupDescriptor& g) {
  PrimaryDecomposition pd;
  pd.source = g;
  std::map<long, std::vector<int>> exps;
  for (long d : g.invariant_factors)
    for (auto [p, e] : factorize(d)) exps[p].push_back(e);
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end());
    pd.components.emplace(p, PGroupType{p, v});
  }
  return pd;
}

Int euler_phi(const Int& n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  Int result = n;
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      while (m % d == 0) m /= d;
      result -= result / d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace fgl
