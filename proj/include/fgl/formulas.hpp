// Closed-form subgroup/element counting formulas for finite abelian
// groups, plus the symmetric count matrix and its determinant identity.

#ifndef FGL_FORMULAS_HPP_
#define FGL_FORMULAS_HPP_

#include <map>
#include <string>
#include <vector>

#include "fgl/group.hpp"

namespace fgl {

enum class CountKind { AllSubgroups, Maximal, Cyclic, Elements };
enum class CountSource { Formula, Enumeration, Oracle };

std::string to_string(CountKind k);
std::string to_string(CountSource s);

// Counts keyed by subgroup order (or element order).
struct CountReport {
  std::string group;
  CountKind kind = CountKind::AllSubgroups;
  CountSource source = CountSource::Formula;
  std::map<Int, Int> by_order;

  Int total() const;
  std::string to_json() const;  // stable key order, decimal-string keys
  std::string to_csv() const;   // "order,count" rows, ascending
};

// Number of subgroups of order p^(k-a) in the elementary abelian group of
// rank k. Throws if a is outside [0, k].
Int count_elementary(long p, int k, int a);

// (p^k - 1)/(p - 1); independent of the exponent vector.
Int count_maximal(long p, int k);

// Number of subgroups of order p^(a1+a2-a) in Z_{p^a1} x Z_{p^a2},
// a1 <= a2, 0 <= a <= a1+a2. The three branches agree at the boundaries.
Int count_rank2_by_index(long p, int a1, int a2, int a);

// Total number of subgroups of Z_{p^a1} x Z_{p^a2} (a1 <= a2); a1 = 0
// degenerates to the cyclic count a2 + 1.
Int total_rank2(long p, int a1, int a2);

// total_rank2 symmetrized over its arguments.
Int f(long p, int i, int j);

// Symmetric (n+1) x (n+1) matrix with entry (i, j) = f(p, i, j).
struct QuadFormMatrix {
  long prime = 0;
  int n = 0;
  std::vector<Int> entries;  // row-major, (n+1)^2

  const Int& entry(int i, int j) const { return entries[i * (n + 1) + j]; }
  bool symmetric() const;
};

QuadFormMatrix build_quadform(long p, int n);

struct DetResult {
  Int det;
  bool matches_identity;  // det == (p-1)^n * p^(n(n-1)/2)
};

DetResult det_quadform(long p, int n);

// Sylvester criterion on exact leading principal minors. Throws on a
// non-symmetric input.
bool is_positive_definite(const QuadFormMatrix& m);

// The auxiliary product prod_i p^min(a, exps[i]) over the first k-1
// exponents; equals the piecewise tower of the cyclic-count recurrence.
Int h(long p, const std::vector<int>& exps, int a);

// Number of cyclic subgroups of order p^a in the p-group with the given
// ascending exponent vector; 1 for a = 0.
Int count_cyclic_by_order(long p, const std::vector<int>& exps, int a);

// 2 + 2p + ... + 2p^(a1-1) + (a2 - a1 + 1)p^a1.
Int total_cyclic_rank2(long p, int a1, int a2);

// Number of elements of order p^a: cyclic count times phi(p^a).
Int count_elements_by_order_p(long p, const std::vector<int>& exps, int a);

// Number of cyclic subgroups of order m in an arbitrary finite abelian
// group; 0 when m does not divide the group exponent componentwise.
Int count_cyclic_general(const GroupDescriptor& g, const Int& m);

// Number of elements of order m; summed over divisors of |G| this gives
// |G|.
Int count_elements_general(const GroupDescriptor& g, const Int& m);

struct TotalSubgroups {
  Int total;
  // Per prime component, which route produced its factor.
  std::map<long, CountSource> component_source;
};

// Product of per-component totals; rank >= 3 non-elementary components
// fall back to lattice enumeration.
TotalSubgroups total_subgroups_general(const GroupDescriptor& g);

// Full by-order reports from the formula route (falling back to lattice
// enumeration per component where no closed form exists).
CountReport count_report(const GroupDescriptor& g, CountKind kind);

}  // namespace fgl

#endif  // FGL_FORMULAS_HPP_
