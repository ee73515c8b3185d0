#include "fgl/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fgl/exact_det.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgl {

// Exact for integer matrices: every intermediate division is integral.
Int det_bareiss(std::vector<Int> m, int n) {
  if (n == 0) return 1;
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  auto at = [&](int i, int j) -> Int& { return m[i * n + j]; };
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    if (at(c, c) == 0) {
      int pivot = -1;
      for (int r = c + 1; r < n; ++r)
        if (at(r, c) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(c, j), at(pivot, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r)
      for (int j = c + 1; j < n; ++j) {
        Int num = at(r, j) * at(c, c) - at(r, c) * at(c, j);
        at(r, j) = num / prev;  // exact by Bareiss
      }
    prev = at(c, c);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

namespace {

// Divisibility condition for column `col`, assuming prior columns valid.
// Returns false also when a minor quotient fails to be integral.
bool column_condition_holds(const SubgroupMatrix& a, int col) {
  const Int diag(a.entry(col, col));
  Int g = zpow(Int(a.ptype.prime), a.ptype.exponents[col]);
  for (int m = col - 1; m >= 0; --m) {
    int n = col - m;
    std::vector<Int> sub(n * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sub[r * n + c] = a.entry(m + r, m + 1 + c);
    Int num = zpow(Int(a.ptype.prime), a.ptype.exponents[m]) *
              det_bareiss(std::move(sub), n);
    Int denom = 1;
    for (int t = m; t < col; ++t) denom *= a.entry(t, t);
    if (num % denom != 0) return false;
    g = gcd(g, abs(num / denom));
    // gcd only shrinks; once diag no longer divides it, no term can help
    if (g % diag != 0) return false;
  }
  return g % diag == 0;
}

struct EnumState {
  PGroupType ptype;
  // Target codimension exponent, or -1 for no order filter.
  int target_codim = -1;
  int total_exp = 0;
  std::vector<int> suffix_exp;  // suffix_exp[j] = sum of exponents from j on
  std::vector<SubgroupMatrix>* out = nullptr;
};

void fill_offdiag(EnumState& st, SubgroupMatrix& a, int col, int row,
                  int used_codim);

void fill_column(EnumState& st, SubgroupMatrix& a, int col, int used_codim) {
  const int k = st.ptype.rank();
  if (col == k) {
    st.out->push_back(a);
    return;
  }
  long d = 1;
  for (int e = 0; e <= st.ptype.exponents[col]; ++e, d *= st.ptype.prime) {
    int codim = used_codim + e;
    if (st.target_codim >= 0) {
      if (codim > st.target_codim) break;
      if (st.target_codim - codim > st.suffix_exp[col + 1]) continue;
    }
    a.entry(col, col) = d;
    fill_offdiag(st, a, col, 0, codim);
  }
  a.entry(col, col) = 0;
}

// Rows 0..col-1 of column `col`, lexicographic with row 0 most significant.
void fill_offdiag(EnumState& st, SubgroupMatrix& a, int col, int row,
                  int used_codim) {
  if (row == col) {
    if (column_condition_holds(a, col))
      fill_column(st, a, col + 1, used_codim);
    return;
  }
  for (long v = 0; v < a.entry(col, col); ++v) {
    a.entry(row, col) = v;
    fill_offdiag(st, a, col, row + 1, used_codim);
  }
  a.entry(row, col) = 0;
}

std::vector<SubgroupMatrix> enumerate_impl(const PGroupType& ptype,
                                           int target_codim, int jobs) {
  ptype.check();
  const int k = ptype.rank();
  EnumState st;
  st.ptype = ptype;
  st.target_codim = target_codim;
  st.total_exp = ptype.exponent_sum();
  st.suffix_exp.assign(k + 1, 0);
  for (int j = k - 1; j >= 0; --j)
    st.suffix_exp[j] = st.suffix_exp[j + 1] + ptype.exponents[j];

  std::vector<SubgroupMatrix> result;

#ifdef _OPENMP
  if (jobs > 1 && k >= 2) {
    // Split over the diagonal exponents of the first two columns; each
    // task is an independent subtree and tasks are concatenated in the
    // serial visiting order.
    struct Task {
      int e0, e1;
      std::vector<SubgroupMatrix> found;
    };
    std::vector<Task> tasks;
    for (int e0 = 0; e0 <= ptype.exponents[0]; ++e0)
      for (int e1 = 0; e1 <= ptype.exponents[1]; ++e1) {
        if (target_codim >= 0) {
          int codim = e0 + e1;
          if (codim > target_codim) continue;
          if (target_codim - codim > st.suffix_exp[2]) continue;
        }
        tasks.push_back(Task{e0, e1, {}});
      }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t t = 0; t < tasks.size(); ++t) {
      EnumState local = st;
      local.out = &tasks[t].found;
      SubgroupMatrix a{ptype, std::vector<long>(k * k, 0)};
      a.entry(0, 0) = ipow(ptype.prime, tasks[t].e0);
      if (!column_condition_holds(a, 0)) continue;
      a.entry(1, 1) = ipow(ptype.prime, tasks[t].e1);
      fill_offdiag(local, a, 1, 0, tasks[t].e0 + tasks[t].e1);
    }
    for (auto& t : tasks)
      result.insert(result.end(), std::make_move_iterator(t.found.begin()),
                    std::make_move_iterator(t.found.end()));
    return result;
  }
#else
  (void)jobs;
#endif

  st.out = &result;
  SubgroupMatrix a{ptype, std::vector<long>(k * k, 0)};
  fill_column(st, a, 0, 0);
  return result;
}

long p_valuation(long x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Membership of `x` in the cyclic subgroup generated by `g` inside the
// product of Z_{moduli[i]}.
bool in_cyclic_span(const std::vector<long>& x,
                    const std::vector<long>& g,
                    const std::vector<long>& moduli) {
  size_t k = moduli.size();
  std::vector<long> cur(k, 0);
  do {
    if (cur == x) return true;
    for (size_t i = 0; i < k; ++i) cur[i] = (cur[i] + g[i]) % moduli[i];
  } while (std::any_of(cur.begin(), cur.end(), [](long v) { return v; }));
  return x == cur;  // x may be the zero tuple
}

}  // namespace

GcdChainTerms gcd_chain_terms(const SubgroupMatrix& a, int col) {
  GcdChainTerms out;
  out.column = col;
  out.terms.push_back(zpow(Int(a.ptype.prime), a.ptype.exponents[col]));
  for (int m = col - 1; m >= 0; --m) {
    int n = col - m;
    std::vector<Int> sub(n * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sub[r * n + c] = a.entry(m + r, m + 1 + c);
    Int num = zpow(Int(a.ptype.prime), a.ptype.exponents[m]) *
              det_bareiss(std::move(sub), n);
    Int denom = 1;
    for (int t = m; t < col; ++t) denom *= a.entry(t, t);
    if (num % denom != 0)
      throw std::runtime_error("gcd_chain_terms: non-integral minor quotient");
    out.terms.push_back(num / denom);
  }
  return out;
}

bool validate(const std::vector<long>& entries, const PGroupType& ptype) {
  ptype.check();
  const int k = ptype.rank();
  if (entries.size() != static_cast<size_t>(k) * k)
    throw std::invalid_argument("validate: matrix must be k x k");
  SubgroupMatrix a{ptype, entries};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (a.entry(i, j) != 0) return false;
  for (int j = 0; j < k; ++j) {
    long d = a.entry(j, j);
    if (d < 1) return false;
    long pa = ipow(ptype.prime, ptype.exponents[j]);
    if (pa % d != 0) return false;  // d must be a p-power dividing p^a_j
    long q = d;
    while (q % ptype.prime == 0) q /= ptype.prime;
    if (q != 1) return false;
    for (int i = 0; i < j; ++i)
      if (a.entry(i, j) < 0 || a.entry(i, j) >= d) return false;
  }
  for (int j = 0; j < k; ++j)
    if (!column_condition_holds(a, j)) return false;
  return true;
}

std::vector<SubgroupMatrix> enumerate(const PGroupType& ptype, int jobs) {
  return enumerate_impl(ptype, -1, jobs);
}

std::vector<SubgroupMatrix> enumerate_of_order(const PGroupType& ptype,
                                               int order_exponent, int jobs) {
  ptype.check();
  if (order_exponent < 0 || order_exponent > ptype.exponent_sum())
    throw std::invalid_argument("enumerate_of_order: exponent out of range");
  return enumerate_impl(ptype, ptype.exponent_sum() - order_exponent, jobs);
}

int subgroup_order_exponent(const SubgroupMatrix& a) {
  int codim = 0;
  for (int i = 0; i < a.k(); ++i)
    codim += static_cast<int>(p_valuation(a.entry(i, i), a.ptype.prime));
  return a.ptype.exponent_sum() - codim;
}

Int subgroup_order(const SubgroupMatrix& a) {
  return zpow(Int(a.ptype.prime), subgroup_order_exponent(a));
}

std::vector<std::vector<long>> generators(const SubgroupMatrix& a) {
  const int k = a.k();
  auto moduli = a.ptype.moduli();
  std::vector<std::vector<long>> rows(k, std::vector<long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rows[i][j] = a.entry(i, j) % moduli[j];
  return rows;
}

bool leq(const SubgroupMatrix& a, const SubgroupMatrix& b) {
  if (a.ptype != b.ptype)
    throw std::invalid_argument("leq: matrices from different group types");
  const int k = a.k();
  for (int j = 0; j < k; ++j) {
    Int g(a.entry(j, j));
    for (int m = j - 1; m >= 0; --m) {
      // (j-m+1)-square: A row m over rows m..j-1 of B, columns m..j.
      int n = j - m + 1;
      std::vector<Int> sub(n * n);
      for (int c = 0; c < n; ++c) sub[c] = a.entry(m, m + c);
      for (int r = 1; r < n; ++r)
        for (int c = 0; c < n; ++c)
          sub[r * n + c] =
              (m + c >= m + r - 1) ? Int(b.entry(m + r - 1, m + c)) : Int(0);
      Int num = det_bareiss(std::move(sub), n);
      Int denom = 1;
      for (int t = m; t < j; ++t) denom *= b.entry(t, t);
      if (num % denom != 0) return false;
      g = gcd(g, abs(num / denom));
    }
    if (g % b.entry(j, j) != 0) return false;
  }
  return true;
}

bool is_cyclic(const SubgroupMatrix& a) {
  const int k = a.k();
  auto moduli = a.ptype.moduli();
  auto rows = generators(a);
  // Rows that reduce to the zero tuple contribute nothing and are skipped;
  // the remaining rows must form a descending chain of cyclic spans.
  std::vector<int> nz;
  for (int r = 0; r < k; ++r)
    if (std::any_of(rows[r].begin(), rows[r].end(),
                    [](long v) { return v != 0; }))
      nz.push_back(r);
  for (size_t i = 1; i < nz.size(); ++i)
    if (!in_cyclic_span(rows[nz[i]], rows[nz[i - 1]], moduli)) return false;
  return true;
}

bool check_solvability(const SubgroupMatrix& a) {
  const int k = a.k();
  std::vector<Int> x(k);
  for (int i = 0; i < k; ++i) {
    Int rhs = zpow(Int(a.ptype.prime), a.ptype.exponents[i]);
    for (int j = 0; j < i; ++j) rhs -= Int(a.entry(j, i)) * x[j];
    Int d(a.entry(i, i));
    if (rhs % d != 0) return false;
    x[i] = rhs / d;
  }
  return true;
}

std::vector<std::pair<size_t, size_t>> covering_edges(
    const std::vector<SubgroupMatrix>& matrices) {
  const size_t n = matrices.size();
  std::vector<char> less(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      less[i * n + j] =
          i != j && leq(matrices[i], matrices[j]) ? 1 : 0;
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!less[i * n + j]) continue;
      bool covered = true;
      for (size_t c = 0; c < n && covered; ++c)
        if (less[i * n + c] && less[c * n + j]) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

}  // namespace fgl
