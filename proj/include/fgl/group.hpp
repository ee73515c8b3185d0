// Group descriptors, invariant-factor normalization, primary decomposition
// and exact integer utilities shared by the whole library.

#ifndef FGL_GROUP_HPP_
#define FGL_GROUP_HPP_

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgl {

// Arbitrary-precision integer used for every count/formula value.
using Int = mpz_class;

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A finite abelian group in invariant-factor form d1 | d2 | ... | dk.
// The empty factor list is the trivial group.
struct GroupDescriptor {
  std::vector<long> invariant_factors;

  Int order() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  std::string label() const;  // "2 x 12" style, "1" for the trivial group

  bool operator==(const GroupDescriptor&) const = default;
};

// One primary component: the p-group Z_{p^a1} x ... x Z_{p^ak}
// with ascending exponents a1 <= ... <= ak.
struct PGroupType {
  long prime = 0;
  std::vector<int> exponents;

  int rank() const { return static_cast<int>(exponents.size()); }
  int exponent_sum() const;
  Int order() const;  // p^(sum of exponents)
  std::vector<long> moduli() const;  // (p^a1, ..., p^ak)
  std::string label() const;

  // Throws std::invalid_argument unless prime is prime and the
  // exponents are positive and ascending.
  void check() const;

  bool operator==(const PGroupType&) const = default;
};

struct PrimaryDecomposition {
  GroupDescriptor source;
  std::map<long, PGroupType> components;
};

// Canonicalizes an arbitrary list of cyclic factors Z_{m1} x ... x Z_{mr}
// into invariant-factor form. Any modulus < 2 is rejected; the empty list
// yields the trivial group.
GroupDescriptor normalize(const std::vector<long>& moduli);

PrimaryDecomposition primary_decomposition(const GroupDescriptor& g);

// Euler's totient. Throws on n < 1.
Int euler_phi(const Int& n);

bool is_prime(long n);

// (prime, multiplicity) pairs, ascending by prime. n >= 1.
std::vector<std::pair<long, int>> factorize(long n);

long ipow(long base, int exp);
Int zpow(const Int& base, int exp);

}  // namespace fgl

#endif  // FGL_GROUP_HPP_
