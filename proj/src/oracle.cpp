#include "fgl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fgl/lattice.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgl {

namespace {

// Elements are handled internally as mixed-radix indices; the index order
// coincides with lexicographic order on tuples.
struct Codec {
  std::vector<long> moduli;
  std::vector<long> stride;
  long order = 1;

  explicit Codec(const std::vector<long>& m) : moduli(m) {
    stride.assign(m.size(), 1);
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
      stride[i] = order;
      order *= m[i];
    }
  }

  long encode(const Element& e) const {
    long x = 0;
    for (size_t i = 0; i < moduli.size(); ++i) x += e[i] * stride[i];
    return x;
  }

  Element decode(long x) const {
    Element e(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) {
      e[i] = x / stride[i];
      x %= stride[i];
    }
    return e;
  }

  long add(long a, long b) const {
    long r = 0;
    for (size_t i = 0; i < moduli.size(); ++i) {
      long s = a / stride[i] + b / stride[i];
      a %= stride[i];
      b %= stride[i];
      if (s >= moduli[i]) s -= moduli[i];
      r += s * stride[i];
    }
    return r;
  }
};

using EncodedSet = std::vector<long>;  // sorted member indices

struct Bitmap {
  std::vector<uint64_t> bits;
  explicit Bitmap(long n) : bits((n + 63) / 64, 0) {}
  bool test(long i) const { return bits[i >> 6] >> (i & 63) & 1; }
  void set(long i) { bits[i >> 6] |= uint64_t(1) << (i & 63); }
};

EncodedSet to_sorted(const Bitmap& bm, long n) {
  EncodedSet out;
  for (long i = 0; i < n; ++i)
    if (bm.test(i)) out.push_back(i);
  return out;
}

// Closure of the subgroup H and one extra generator g, as a breadth-first
// sweep that touches each member of the result once.
EncodedSet extend_subgroup(const Codec& cd, const EncodedSet& h, long g) {
  Bitmap bm(cd.order);
  EncodedSet out = h;
  for (long x : h) bm.set(x);
  for (size_t head = 0; head < out.size(); ++head) {
    long y = cd.add(out[head], g);
    if (!bm.test(y)) {
      bm.set(y);
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_cap(long order, long cap) {
  if (order > cap)
    throw ResourceLimitError("group order " + std::to_string(order) +
                             " exceeds oracle cap " + std::to_string(cap));
}

std::string moduli_label(const std::vector<long>& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << " x ";
    os << m[i];
  }
  return os.str();
}

long element_order_encoded(const Codec& cd, long x) {
  long ord = 1;
  for (size_t i = 0; i < cd.moduli.size(); ++i) {
    long gi = x / cd.stride[i];
    x %= cd.stride[i];
    long o = cd.moduli[i] / std::gcd(gi, cd.moduli[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

}  // namespace

long ExplicitGroup::order() const {
  long n = 1;
  for (long m : moduli) n *= m;
  return n;
}

Element ExplicitGroup::add(const Element& a, const Element& b) const {
  Element r(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) r[i] = (a[i] + b[i]) % moduli[i];
  return r;
}

std::vector<Element> ExplicitGroup::all_elements() const {
  Codec cd(moduli);
  std::vector<Element> out;
  out.reserve(cd.order);
  for (long i = 0; i < cd.order; ++i) out.push_back(cd.decode(i));
  return out;
}

bool SubgroupSet::contains(const Element& e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

bool SubgroupSet::subset_of(const SubgroupSet& other) const {
  return std::includes(other.members.begin(), other.members.end(),
                       members.begin(), members.end());
}

long element_order(const Element& g, const ExplicitGroup& grp) {
  if (g.size() != grp.moduli.size())
    throw std::invalid_argument("element_order: dimension mismatch");
  long ord = 1;
  for (size_t i = 0; i < g.size(); ++i)
    ord = std::lcm(ord, grp.moduli[i] / std::gcd(g[i], grp.moduli[i]));
  return ord;
}

CountReport order_census(const ExplicitGroup& grp, long cap) {
  check_cap(grp.order(), cap);
  Codec cd(grp.moduli);
  CountReport rep;
  rep.group = moduli_label(grp.moduli);
  rep.kind = CountKind::Elements;
  rep.source = CountSource::Oracle;
  for (long i = 0; i < cd.order; ++i)
    rep.by_order[Int(element_order_encoded(cd, i))] += 1;
  return rep;
}

SubgroupSet span(const ExplicitGroup& grp, const std::vector<Element>& gens) {
  Codec cd(grp.moduli);
  Bitmap bm(cd.order);
  std::vector<long> queue{0};
  bm.set(0);
  std::vector<long> enc;
  for (const auto& g : gens) enc.push_back(cd.encode(g));
  while (!queue.empty()) {
    long x = queue.back();
    queue.pop_back();
    for (long g : enc) {
      long y = cd.add(x, g);
      if (!bm.test(y)) {
        bm.set(y);
        queue.push_back(y);
      }
    }
  }
  SubgroupSet out;
  for (long i : to_sorted(bm, cd.order)) out.members.push_back(cd.decode(i));
  out.generator_hint = gens;
  return out;
}

std::vector<SubgroupSet> all_subgroups(const ExplicitGroup& grp, long cap,
                                       int jobs) {
  check_cap(grp.order(), cap);
  Codec cd(grp.moduli);
  const long n = cd.order;

  std::set<EncodedSet> known;
  std::vector<const EncodedSet*> frontier;
  auto [it, ok] = known.insert(EncodedSet{0});
  frontier.push_back(&*it);

  while (!frontier.empty()) {
    std::set<EncodedSet> found;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
    {
      std::set<EncodedSet> local;
#pragma omp for schedule(dynamic) nowait
      for (size_t f = 0; f < frontier.size(); ++f) {
        const EncodedSet& h = *frontier[f];
        for (long g = 1; g < n; ++g) {
          if (std::binary_search(h.begin(), h.end(), g)) continue;
          local.insert(extend_subgroup(cd, h, g));
        }
      }
#pragma omp critical
      found.merge(local);
    }
#else
    for (size_t f = 0; f < frontier.size(); ++f) {
      const EncodedSet& h = *frontier[f];
      for (long g = 1; g < n; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        found.insert(extend_subgroup(cd, h, g));
      }
    }
#endif
    frontier.clear();
    while (!found.empty()) {
      auto node = found.extract(found.begin());
      auto [pos, fresh] = known.insert(std::move(node.value()));
      if (fresh) frontier.push_back(&*pos);
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(known.size());
  for (const auto& enc : known) {
    SubgroupSet s;
    s.members.reserve(enc.size());
    for (long i : enc) s.members.push_back(cd.decode(i));
    out.push_back(std::move(s));
  }
  return out;
}

bool is_cyclic_subgroup(const SubgroupSet& h, const ExplicitGroup& grp) {
  long sz = h.size();
  for (const auto& e : h.members)
    if (element_order(e, grp) == sz) return true;
  return false;
}

bool CrossCheckReport::ok() const { return mismatches() == 0; }

size_t CrossCheckReport::mismatches() const {
  size_t n = 0;
  for (const auto& r : rows)
    if (!r.match) ++n;
  return n;
}

std::string CrossCheckReport::to_json() const {
  auto opt = [](const std::optional<Int>& v) {
    return v ? v->get_str() : std::string("null");
  };
  std::ostringstream os;
  os << "{\"group\":\"" << group << "\",\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) os << ",";
    os << "{\"kind\":\"" << to_string(r.kind) << "\",\"order\":"
       << r.order.get_str() << ",\"formula\":" << opt(r.formula)
       << ",\"enumeration\":" << opt(r.enumeration)
       << ",\"oracle\":" << opt(r.oracle)
       << ",\"match\":" << (r.match ? "true" : "false") << "}";
  }
  os << "],\"mismatches\":" << mismatches() << "}";
  return os.str();
}

namespace {

using OrderMap = std::map<Int, Int>;

// Lattice-enumeration by-order histograms for one primary component.
struct ComponentEnum {
  long prime;
  std::map<int, Int> all;      // order exponent -> count
  std::map<int, Int> cyclic;
};

ComponentEnum enumerate_component(const PGroupType& t, int jobs) {
  ComponentEnum ce;
  ce.prime = t.prime;
  for (const auto& m : enumerate(t, jobs)) {
    int e = subgroup_order_exponent(m);
    ce.all[e] += 1;
    if (is_cyclic(m)) ce.cyclic[e] += 1;
  }
  return ce;
}

OrderMap convolve(const std::vector<std::pair<long, std::map<int, Int>>>&
                      per_prime) {
  OrderMap acc{{Int(1), Int(1)}};
  for (const auto& [p, hist] : per_prime) {
    OrderMap next;
    for (const auto& [o, c] : acc)
      for (const auto& [e, ce] : hist) next[o * zpow(Int(p), e)] += c * ce;
    acc = std::move(next);
  }
  return acc;
}

void add_rows(CrossCheckReport& rep, CountKind kind,
              const std::optional<OrderMap>& formula,
              const std::optional<OrderMap>& enumeration,
              const std::optional<OrderMap>& oracle) {
  std::set<Int> keys;
  for (const auto* m : {&formula, &enumeration, &oracle})
    if (*m)
      for (const auto& [o, c] : **m) keys.insert(o);
  for (const Int& o : keys) {
    CrossCheckRow row;
    row.kind = kind;
    row.order = o;
    auto pick = [&](const std::optional<OrderMap>& m) -> std::optional<Int> {
      if (!m) return std::nullopt;
      auto it = m->find(o);
      return it == m->end() ? Int(0) : it->second;
    };
    row.formula = pick(formula);
    row.enumeration = pick(enumeration);
    row.oracle = pick(oracle);
    std::vector<Int> present;
    for (const auto& v : {row.formula, row.enumeration, row.oracle})
      if (v) present.push_back(*v);
    row.match = std::adjacent_find(present.begin(), present.end(),
                                   std::not_equal_to<>()) == present.end();
    rep.rows.push_back(std::move(row));
  }
}

}  // namespace

CrossCheckReport cross_check(const GroupDescriptor& g, long cap,
                             int jobs) {
  CrossCheckReport rep;
  rep.group = g.label();

  // Formula route.
  OrderMap f_all = count_report(g, CountKind::AllSubgroups).by_order;
  OrderMap f_max = count_report(g, CountKind::Maximal).by_order;
  OrderMap f_cyc = count_report(g, CountKind::Cyclic).by_order;
  OrderMap f_elem = count_report(g, CountKind::Elements).by_order;

  // Lattice enumeration route, assembled per primary component.
  auto pd = primary_decomposition(g);
  std::vector<std::pair<long, std::map<int, Int>>> e_all_parts,
      e_cyc_parts;
  OrderMap e_max;
  for (const auto& [p, type] : pd.components) {
    ComponentEnum ce = enumerate_component(type, jobs);
    e_all_parts.emplace_back(p, ce.all);
    e_cyc_parts.emplace_back(p, ce.cyclic);
    int s = type.exponent_sum();
    auto it = ce.all.find(s - 1);
    e_max[g.order() / p] = it == ce.all.end() ? Int(0) : it->second;
  }
  OrderMap e_all = convolve(e_all_parts);
  OrderMap e_cyc = convolve(e_cyc_parts);
  // drop zero-count cyclic orders so the maps compare cleanly
  for (auto it = e_cyc.begin(); it != e_cyc.end();)
    it = it->second == 0 ? e_cyc.erase(it) : std::next(it);

  // Oracle route on the literal group.
  ExplicitGroup grp{g.invariant_factors};
  check_cap(grp.order(), cap);
  auto subs = all_subgroups(grp, cap, jobs);
  OrderMap o_all, o_max, o_cyc;
  Int n = grp.order();
  for (const auto& h : subs) {
    Int sz(h.size());
    o_all[sz] += 1;
    if (sz != n) {
      Int idx = n / sz;
      if (idx.fits_slong_p() && is_prime(idx.get_si())) o_max[sz] += 1;
    }
    if (is_cyclic_subgroup(h, grp)) o_cyc[sz] += 1;
  }
  OrderMap o_elem = order_census(grp, cap).by_order;

  add_rows(rep, CountKind::AllSubgroups, f_all, e_all, o_all);
  add_rows(rep, CountKind::Maximal, f_max, e_max, o_max);
  add_rows(rep, CountKind::Cyclic, f_cyc, e_cyc, o_cyc);
  add_rows(rep, CountKind::Elements, f_elem, std::nullopt, o_elem);
  return rep;
}

}  // namespace fgl
