#pragma once

#include <array>
#include <vector>

#include "msd/core.hpp"

// Classical combinatorial inputs consumed by the constructions: round-robin
// one-factorizations, Steiner triple systems (Bose/Skolem), affine-plane
// resolutions, a large set of STS(9), a Kirkman resolution of STS(15),
// MOLS-based orthogonal arrays, small finite fields, and partitions of the
// nonzero elements of a finite abelian group into punctured subgroups.
//
// Every ingredient re-validates through the verify module at construction
// time; no stored table is trusted unverified.

namespace msd {

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;
using OneFactor = std::vector<Pair>;  // perfect matching on Z_n

// Classical Steiner system S(t,k,n) on points 0..n-1.
struct SteinerSystem {
  int n = 0;
  int t = 0;
  int k = 0;
  std::vector<std::vector<int>> blocks;
};

// A Steiner system together with a partition of its blocks into classes,
// each class itself an S(t-1,k,n).
struct ResolvedSteinerSystem {
  SteinerSystem system;
  std::vector<std::vector<std::vector<int>>> classes;
};

// k^2 x n array over Z_k in which every ordered column pair carries each
// ordered symbol pair exactly once.
struct OrthogonalArray {
  int k = 0;  // symbol count
  int n = 0;  // column count
  std::vector<std::vector<int>> rows;
};

// GF(p^m) in the polynomial basis, elements labeled 0..p^m-1 by base-p
// digit vectors. Reduction polynomials are fixed so element labels are
// reproducible across runs:
//   GF(4): x^2+x+1   GF(8): x^3+x+1    GF(16): x^4+x+1
//   GF(32): x^5+x^2+1  GF(64): x^6+x+1
//   GF(9): x^2+1     GF(27): x^3+2x+1  GF(25): x^2+x+1  GF(49): x^2+x+3
class FiniteField {
 public:
  explicit FiniteField(int q);  // q = p^m, q <= 81

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;

 private:
  int q_, p_, m_;
  std::vector<int> mul_;
};

// Finite abelian group Z_{m_1} x ... x Z_{m_s}; elements are mixed-radix
// indices with digit i running modulo m_i. For all-2 moduli the index is
// the usual bitmask and addition is XOR.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<long long> moduli);

  long long size() const { return size_; }
  long long add(long long a, long long b) const;
  long long neg(long long a) const;

  const std::vector<long long>& moduli() const { return moduli_; }

 private:
  std::vector<long long> moduli_;
  long long size_;
};

// Partition of the nonzero elements of `group` into punctured subgroups:
// each part contains 0 and is closed under the group operation, the
// nonzero parts are pairwise disjoint and exhaust group \ {0}.
struct GroupPartition {
  AbelianGroup group;
  std::vector<std::vector<long long>> parts;  // each sorted, 0 first
};

// Throws std::invalid_argument when the partition invariants fail.
void validate_partition(const GroupPartition& p);

// Round-robin one-factorization of K_n: n-1 factors, factor i pairs
// {n-1, i} and {(i+j) mod (n-1), (i-j) mod (n-1)} for 1 <= j <= n/2-1.
std::vector<OneFactor> one_factorization(int n);

// Steiner triple system S(2,3,n): Bose construction for n = 3 (mod 6),
// Skolem construction for n = 1 (mod 6).
SteinerSystem sts(int n);

// Resolvable S(2,q,q^2) from the affine plane AG(2,q): lines grouped into
// q+1 parallel classes. Supported q: 2, 3, 4, 5, 7, 8, 9.
ResolvedSteinerSystem affine_resolution(int q);

// A large set of STS(9): 7 pairwise block-disjoint S(2,3,9) partitioning
// all 84 triples of Z_9. Derived once per process by the exact-cover
// engine (deterministic witness), then re-validated; the memoized table is
// shared afterwards.
ResolvedSteinerSystem large_set_sts9();

// Kirkman resolution of an S(2,3,15): 35 triples in 7 parallel classes.
// Same provenance as large_set_sts9: exact-cover derivation, re-validated,
// memoized.
ResolvedSteinerSystem kirkman_sts15();

// OA(2,n,k): for prime-power k, rows (a,b) -> (a, b, a + l_i*b) over GF(k)
// with distinct nonzero l_i (3 <= n <= k+1); for general k only n = 3 is
// supported, via the Cayley table of Z_k.
OrthogonalArray mols_oa(int k, int n);

// Partition of GF(2^m) (as the additive group Z_2^m) into one or two
// F_2-subspaces spanned by canonical basis vectors plus singleton parts.
// dims = {} (all singletons), {k}, or {k, r} with k + r <= m.
GroupPartition subspace_partition(int m, const std::vector<int>& dims);

}  // namespace msd
