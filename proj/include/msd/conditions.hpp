#pragma once

#include <string>
#include <vector>

#include "msd/core.hpp"

// Necessary-condition arithmetic, as pure predicates with itemized
// pass/fail detail: the block-count closed form, the derived-design
// divisibility family, the specialized binary-with-one-q shape checks, the
// codeword-length lower bound, the pairs-triples parameter conditions,
// the two large-set size formulas, and the perfect-code divisibility
// family. A passing report never asserts existence.

namespace msd {

struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, reduced

  bool integral() const { return den == 1; }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

long long binomial(int n, int k);

enum class CheckStatus { Pass, Fail, NotApplicable };

struct ConditionCheck {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;

  bool all_passed() const;
  const ConditionCheck* find(const std::string& name) const;
};

struct BlockCountResult {
  long long weight_t_words = 0;  // sum over t-subsets of prod (q_j - 1)
  long long denom = 1;           // C(k,t)
  Rational exact;
  bool integral = false;
  long long count = 0;  // valid when integral
};

// Codeword count of a putative MS(t,k,Q): (e_t of the q_i - 1) / C(k,t).
// Integrality is necessary for existence.
BlockCountResult block_count(const MixedAlphabet& q, int t, int k);

// All applicable necessary conditions for MS(t,k,Q):
//  - block-count integrality,
//  - the divisibility family: for each i in 0..t-1 and each (n-i)-subset X,
//    sum over (t-i)-subsets Y of X of prod (q_j - 1) = 0 mod C(k-i,t-i)
//    (full subset enumeration for n <= 20, multiset reduction beyond),
//  - for t = 1, the sorted-largest-alphabet balance: sum_{i<n}(q_i - 1) -
//    (q_n - 1)(k - 1) nonnegative and divisible by k,
//  - the specialized Z2^n x Zq shape conditions for (t,k) = (1,2), (2,3),
//    (3,4), (1,k), (2,k),
//  - the length lower bound N >= (k-t)q + 2t - k with q the largest radix.
ConditionReport necessary_report(const MixedAlphabet& q, int t, int k);

struct PtParameterResult {
  bool ok = false;
  std::vector<std::string> reasons;  // failures, empty when ok
};

// (n,r)-pairs-triples parameter conditions: n even, r odd, 1 <= r <= n-1,
// r = n-1 (mod 6) when n = 2 or 4 (mod 6), and 3 | (n(n-1)/2 - r n/2).
PtParameterResult pt_parameter_check(int n, int r);

struct LargeSetSizes {
  long long size_a = 0;   // codewords meeting the largest alphabet
  Rational size_b;        // codewords avoiding it, times k / leftover
  bool equal = false;
  bool no_single_system = false;  // balance denominator <= 0
};

// The two counting routes for the size of a putative large set of
// MS(1,k,Q); unequal sizes certify that no large set exists.
LargeSetSizes large_set_sizes(const MixedAlphabet& q, int k);

// Divisibility family for an e-perfect mixed code over Q: for each t in
// 1..e+1 and each subset X of size n-e+t-1, sum over t-subsets Y of X of
// prod (q_j - 1) = 0 mod C(e+t,t).
ConditionReport perfect_code_divisibility(const MixedAlphabet& q, int e);

}  // namespace msd
