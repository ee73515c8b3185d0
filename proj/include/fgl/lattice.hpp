// The fundamental group lattice: upper-triangular matrix encoding of the
// subgroups of Z_{p^a1} x ... x Z_{p^ak}, validation, exhaustive
// enumeration, the partial order and per-subgroup queries.

#ifndef FGL_LATTICE_HPP_
#define FGL_LATTICE_HPP_

#include <optional>
#include <vector>

#include "fgl/group.hpp"

namespace fgl {

// One subgroup, encoded as a k x k upper-triangular integer matrix.
// Entries are row-major; entry(i, j) with 0-based indices.
struct SubgroupMatrix {
  PGroupType ptype;
  std::vector<long> entries;

  int k() const { return ptype.rank(); }
  long entry(int i, int j) const { return entries[i * k() + j]; }
  long& entry(int i, int j) { return entries[i * k() + j]; }

  bool operator==(const SubgroupMatrix&) const = default;
};

// Arguments of the gcd on the right-hand side of divisibility condition
// iii) for one column: [p^a_j, term(j-1), ..., term(0)] where term(m) is
// p^a_m times the minor on rows m..j-1, columns m+1..j, divided by the
// diagonal product a_mm...a_{j-1,j-1}.
struct GcdChainTerms {
  int column;               // 0-based
  std::vector<Int> terms;
};

// Columns left of `col` must already satisfy the system; diagonals must be
// positive. Throws std::runtime_error if a minor quotient is not integral
// (the candidate is malformed).
GcdChainTerms gcd_chain_terms(const SubgroupMatrix& a, int col);

// True iff `a` satisfies all three conditions of the divisibility system.
// Throws std::invalid_argument on a dimension mismatch.
bool validate(const std::vector<long>& entries, const PGroupType& ptype);

// Every lattice matrix exactly once, in a fixed deterministic order:
// columns are filled left to right; within a column the diagonal runs over
// p^0, p^1, ..., p^a_j ascending, then the off-diagonal entries
// (a_0j, ..., a_{j-1,j}) count up in odometer order with a_0j most
// significant. `jobs` > 1 splits the search over first-column diagonals
// with OpenMP; the output order is identical to the serial one.
std::vector<SubgroupMatrix> enumerate(const PGroupType& ptype, int jobs = 1);

// Only the matrices whose subgroup has order p^order_exponent
// (0 <= order_exponent <= sum of exponents); same ordering.
std::vector<SubgroupMatrix> enumerate_of_order(const PGroupType& ptype,
                                               int order_exponent,
                                               int jobs = 1);

// p^(sum a_i) / prod a_ii.
Int subgroup_order(const SubgroupMatrix& a);

// p-adic order exponent: log_p(subgroup_order).
int subgroup_order_exponent(const SubgroupMatrix& a);

// The k row vectors with coordinate i reduced mod p^a_i; they generate the
// encoded subgroup inside the explicit group.
std::vector<std::vector<long>> generators(const SubgroupMatrix& a);

// The lattice partial order. Throws std::invalid_argument if the two
// matrices belong to different p-group types.
bool leq(const SubgroupMatrix& a, const SubgroupMatrix& b);

// Cyclicity via the row-tail chain criterion; k = 2 additionally has the
// closed gcd form a_22 = gcd(p^a2, p^a1 * a_12 / a_11), asserted to agree.
bool is_cyclic(const SubgroupMatrix& a);

// Whether A^T x = (p^a1, ..., p^ak)^T has an integer solution; holds for
// every lattice member.
bool check_solvability(const SubgroupMatrix& a);

// Indices (i, j) such that matrices[j] covers matrices[i] in the lattice
// order (i < j with nothing strictly between).
std::vector<std::pair<size_t, size_t>> covering_edges(
    const std::vector<SubgroupMatrix>& matrices);

}  // namespace fgl

#endif  // FGL_LATTICE_HPP_
