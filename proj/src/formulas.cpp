#include "fgl/formulas.hpp"

#include <algorithm>
#include <sstream>

#include "fgl/exact_det.hpp"
#include "fgl/lattice.hpp"

namespace fgl {

namespace {

Int exact_div(const Int& num, const Int& den, const char* what) {
  if (den == 0 || num % den != 0)
    throw std::logic_error(std::string("inexact division in ") + what);
  return num / den;
}

// (p^e - 1)/(p - 1) = 1 + p + ... + p^(e-1)
Int geometric(long p, int e) {
  return exact_div(zpow(Int(p), e) - 1, Int(p) - 1, "geometric sum");
}

void require_prime(long p) {
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// All divisors of |G| as exact integers, ascending.
std::vector<Int> divisors_of_order(const GroupDescriptor& g) {
  std::map<long, int> exps;
  for (long d : g.invariant_factors)
    for (auto [p, e] : factorize(d)) exps[p] += e;
  std::vector<Int> divs{1};
  for (auto [p, e] : exps) {
    std::vector<Int> next;
    for (const Int& d : divs) {
      Int q = d;
      for (int i = 0; i <= e; ++i, q *= p) next.push_back(q);
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// By-order subgroup counts of one primary component via the closed forms,
// with lattice enumeration as the fallback route (keyed by order exponent).
std::map<int, Int> component_subgroup_histogram(const PGroupType& t,
                                                CountSource* src) {
  std::map<int, Int> hist;
  const int k = t.rank();
  const int s = t.exponent_sum();
  if (k == 1) {
    for (int a = 0; a <= s; ++a) hist[a] = 1;
    if (src) *src = CountSource::Formula;
  } else if (k == 2) {
    for (int a = 0; a <= s; ++a)
      hist[s - a] = count_rank2_by_index(t.prime, t.exponents[0],
                                         t.exponents[1], a);
    if (src) *src = CountSource::Formula;
  } else if (std::all_of(t.exponents.begin(), t.exponents.end(),
                         [](int e) { return e == 1; })) {
    for (int a = 0; a <= k; ++a)
      hist[k - a] = count_elementary(t.prime, k, a);
    if (src) *src = CountSource::Formula;
  } else {
    // No closed form is known for rank >= 3 beyond the elementary case.
    for (const auto& m : enumerate(t)) hist[subgroup_order_exponent(m)] += 1;
    if (src) *src = CountSource::Enumeration;
  }
  return hist;
}

}  // namespace

std::string to_string(CountKind k) {
  switch (k) {
    case CountKind::AllSubgroups: return "all";
    case CountKind::Maximal: return "maximal";
    case CountKind::Cyclic: return "cyclic";
    case CountKind::Elements: return "elements";
  }
  return "?";
}

std::string to_string(CountSource s) {
  switch (s) {
    case CountSource::Formula: return "formula";
    case CountSource::Enumeration: return "enumeration";
    case CountSource::Oracle: return "oracle";
  }
  return "?";
}

Int CountReport::total() const {
  Int t = 0;
  for (const auto& [o, c] : by_order) t += c;
  return t;
}

std::string CountReport::to_json() const {
  std::ostringstream os;
  os << "{\"group\":\"" << group << "\",\"kind\":\"" << to_string(kind)
     << "\",\"source\":\"" << to_string(source) << "\",\"by_order\":{";
  bool first = true;
  for (const auto& [o, c] : by_order) {
    if (!first) os << ",";
    first = false;
    os << "\"" << o.get_str() << "\":" << c.get_str();
  }
  os << "},\"total\":" << total().get_str() << "}";
  return os.str();
}

std::string CountReport::to_csv() const {
  std::ostringstream os;
  os << "order,count\n";
  for (const auto& [o, c] : by_order)
    os << o.get_str() << "," << c.get_str() << "\n";
  return os.str();
}

Int count_elementary(long p, int k, int a) {
  require_prime(p);
  if (a < 0 || a > k)
    throw std::invalid_argument("count_elementary: a must be in [0, k]");
  if (a == 0 || a == k) return 1;
  // Sum of p^(i1+...+ia - a(a+1)/2) over 1 <= i1 < ... < ia <= k.
  Int sum = 0;
  std::vector<int> idx(a);
  for (int i = 0; i < a; ++i) idx[i] = i + 1;
  while (true) {
    int e = -a * (a + 1) / 2;
    for (int i : idx) e += i;
    sum += zpow(Int(p), e);
    int pos = a - 1;
    while (pos >= 0 && idx[pos] == k - (a - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < a; ++i) idx[i] = idx[i - 1] + 1;
  }
  return sum;
}

Int count_maximal(long p, int k) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("count_maximal: k must be >= 1");
  return geometric(p, k);
}

Int count_rank2_by_index(long p, int a1, int a2, int a) {
  require_prime(p);
  if (a1 < 0 || a1 > a2)
    throw std::invalid_argument("count_rank2_by_index: need 0 <= a1 <= a2");
  if (a < 0 || a > a1 + a2)
    throw std::invalid_argument("count_rank2_by_index: a out of range");
  if (a <= a1) return geometric(p, a + 1);
  if (a <= a2) return geometric(p, a1 + 1);
  return geometric(p, a1 + a2 - a + 1);
}

Int total_rank2(long p, int a1, int a2) {
  require_prime(p);
  if (a1 < 0 || a1 > a2)
    throw std::invalid_argument("total_rank2: need 0 <= a1 <= a2");
  Int P(p);
  Int num = Int(a2 - a1 + 1) * zpow(P, a1 + 2) -
            Int(a2 - a1 - 1) * zpow(P, a1 + 1) - Int(a1 + a2 + 3) * P +
            Int(a1 + a2 + 1);
  return exact_div(num, (P - 1) * (P - 1), "total_rank2");
}

Int f(long p, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("f: negative exponent");
  return total_rank2(p, std::min(i, j), std::max(i, j));
}

bool QuadFormMatrix::symmetric() const {
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < i; ++j)
      if (entry(i, j) != entry(j, i)) return false;
  return true;
}

QuadFormMatrix build_quadform(long p, int n) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("build_quadform: n must be >= 0");
  QuadFormMatrix m;
  m.prime = p;
  m.n = n;
  m.entries.resize((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m.entries[i * (n + 1) + j] = f(p, i, j);
  return m;
}

DetResult det_quadform(long p, int n) {
  if (n < 1) throw std::invalid_argument("det_quadform: n must be >= 1");
  QuadFormMatrix m = build_quadform(p, n);
  Int d = det_bareiss(m.entries, n + 1);
  Int expected = zpow(Int(p) - 1, n) * zpow(Int(p), n * (n - 1) / 2);
  return DetResult{d, d == expected};
}

bool is_positive_definite(const QuadFormMatrix& m) {
  if (!m.symmetric())
    throw std::invalid_argument("is_positive_definite: matrix not symmetric");
  for (int s = 1; s <= m.n + 1; ++s) {
    std::vector<Int> lead(s * s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) lead[i * s + j] = m.entry(i, j);
    if (det_bareiss(std::move(lead), s) <= 0) return false;
  }
  return true;
}

Int h(long p, const std::vector<int>& exps, int a) {
  if (a < 0) throw std::invalid_argument("h: a must be >= 0");
  Int r = 1;
  for (int e : exps) r *= zpow(Int(p), std::min(a, e));
  return r;
}

Int count_cyclic_by_order(long p, const std::vector<int>& exps, int a) {
  require_prime(p);
  if (exps.empty()) throw std::invalid_argument("empty exponent list");
  if (a < 0 || a > exps.back())
    throw std::invalid_argument("count_cyclic_by_order: a out of range");
  if (a == 0) return 1;
  std::vector<int> head(exps.begin(), exps.end() - 1);
  Int num = zpow(Int(p), a) * h(p, head, a) -
            zpow(Int(p), a - 1) * h(p, head, a - 1);
  Int den = zpow(Int(p), a) - zpow(Int(p), a - 1);
  return exact_div(num, den, "count_cyclic_by_order");
}

Int total_cyclic_rank2(long p, int a1, int a2) {
  require_prime(p);
  if (a1 < 0 || a1 > a2)
    throw std::invalid_argument("total_cyclic_rank2: need 0 <= a1 <= a2");
  Int sum = 0;
  for (int a = 0; a < a1; ++a) sum += 2 * zpow(Int(p), a);
  sum += Int(a2 - a1 + 1) * zpow(Int(p), a1);
  return sum;
}

Int count_elements_by_order_p(long p, const std::vector<int>& exps,
                              int a) {
  require_prime(p);
  if (exps.empty()) throw std::invalid_argument("empty exponent list");
  if (a < 0 || a > exps.back())
    throw std::invalid_argument("count_elements_by_order_p: a out of range");
  if (a == 0) return 1;
  std::vector<int> head(exps.begin(), exps.end() - 1);
  return zpow(Int(p), a) * h(p, head, a) -
         zpow(Int(p), a - 1) * h(p, head, a - 1);
}

namespace {

// Shared driver for the two per-order product rules of the composite case.
Int product_over_primes(const GroupDescriptor& g, const Int& m,
                        bool elements) {
  if (m < 1) throw std::invalid_argument("order must be >= 1");
  auto pd = primary_decomposition(g);
  Int rest = m;
  Int result = 1;
  for (const auto& [p, type] : pd.components) {
    int a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    if (a == 0) continue;
    if (a > type.exponents.back()) return 0;
    result *= count_cyclic_by_order(p, type.exponents, a);
    if (elements) result *= zpow(Int(p), a) - zpow(Int(p), a - 1);
  }
  if (rest != 1) return 0;  // m has a prime not dividing |G|
  return result;
}

}  // namespace

Int count_cyclic_general(const GroupDescriptor& g, const Int& m) {
  return product_over_primes(g, m, false);
}

Int count_elements_general(const GroupDescriptor& g, const Int& m) {
  return product_over_primes(g, m, true);
}

TotalSubgroups total_subgroups_general(const GroupDescriptor& g) {
  TotalSubgroups out;
  out.total = 1;
  for (const auto& [p, type] : primary_decomposition(g).components) {
    CountSource src = CountSource::Formula;
    auto hist = component_subgroup_histogram(type, &src);
    Int sub = 0;
    for (const auto& [e, c] : hist) sub += c;
    out.total *= sub;
    out.component_source[p] = src;
  }
  return out;
}

CountReport count_report(const GroupDescriptor& g, CountKind kind) {
  CountReport rep;
  rep.group = g.label();
  rep.kind = kind;
  rep.source = CountSource::Formula;

  switch (kind) {
    case CountKind::AllSubgroups: {
      // Convolve per-component histograms: a subgroup of G is a product
      // of one subgroup per primary component.
      std::map<Int, Int> acc{{Int(1), Int(1)}};
      for (const auto& [p, type] : primary_decomposition(g).components) {
        CountSource src = CountSource::Formula;
        auto hist = component_subgroup_histogram(type, &src);
        if (src == CountSource::Enumeration)
          rep.source = CountSource::Enumeration;
        std::map<Int, Int> next;
        for (const auto& [o, c] : acc)
          for (const auto& [e, ce] : hist)
            next[o * zpow(Int(p), e)] += c * ce;
        acc = std::move(next);
      }
      rep.by_order = std::move(acc);
      break;
    }
    case CountKind::Maximal: {
      for (const auto& [p, type] : primary_decomposition(g).components)
        rep.by_order[g.order() / p] = count_maximal(p, type.rank());
      break;
    }
    case CountKind::Cyclic:
    case CountKind::Elements: {
      for (const Int& d : divisors_of_order(g)) {
        Int c = kind == CountKind::Cyclic ? count_cyclic_general(g, d)
                                          : count_elements_general(g, d);
        if (c != 0) rep.by_order[d] = c;
      }
      break;
    }
  }
  return rep;
}

}  // namespace fgl
