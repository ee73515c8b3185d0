// Ground-truth engine: the explicit group as element tuples, exhaustive
// subgroup generation by closure, order censuses, and three-way
// comparison reports. Deliberately independent of the lattice module's
// matrix machinery; only cross_check ties the routes together.

#ifndef FGL_ORACLE_HPP_
#define FGL_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fgl/formulas.hpp"
#include "fgl/group.hpp"

namespace fgl {

inline constexpr long kDefaultOracleCap = 4096;

using Element = std::vector<long>;

// The literal group: the full box product of residue tuples mod `moduli`.
struct ExplicitGroup {
  std::vector<long> moduli;

  long order() const;
  Element zero() const { return Element(moduli.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  std::vector<Element> all_elements() const;
};

// One subgroup as an explicit, lexicographically sorted member set.
struct SubgroupSet {
  std::vector<Element> members;
  std::vector<Element> generator_hint;

  long size() const { return static_cast<long>(members.size()); }
  bool contains(const Element& e) const;
  bool subset_of(const SubgroupSet& other) const;
};

// Least t >= 1 with t*g == 0: lcm over coordinates of m_i / gcd(g_i, m_i).
long element_order(const Element& g, const ExplicitGroup& grp);

CountReport order_census(const ExplicitGroup& grp,
                         long cap = kDefaultOracleCap);

// Smallest subgroup containing the generators.
SubgroupSet span(const ExplicitGroup& grp, const std::vector<Element>& gens);

// Every subgroup exactly once, by frontier closure from the trivial
// subgroup; `jobs` > 1 parallelizes the extension step per frontier level
// (the final set is deterministic, the discovery order is not relied on).
std::vector<SubgroupSet> all_subgroups(const ExplicitGroup& grp,
                                       long cap = kDefaultOracleCap,
                                       int jobs = 1);

bool is_cyclic_subgroup(const SubgroupSet& h, const ExplicitGroup& grp);

struct CrossCheckRow {
  CountKind kind;
  Int order;
  std::optional<Int> formula, enumeration, oracle;
  bool match = false;
};

struct CrossCheckReport {
  std::string group;
  std::vector<CrossCheckRow> rows;

  bool ok() const;
  size_t mismatches() const;
  std::string to_json() const;
};

// Runs formula, lattice enumeration (p-groups only) and oracle pipelines
// for every kind and order class, and flags disagreements.
CrossCheckReport cross_check(const GroupDescriptor& g,
                             long cap = kDefaultOracleCap, int jobs = 1);

}  // namespace fgl

#endif  // FGL_ORACLE_HPP_
