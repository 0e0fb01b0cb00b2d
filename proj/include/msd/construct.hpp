#pragma once

#include <optional>
#include <vector>

#include "msd/core.hpp"
#include "msd/ingredients.hpp"
#include "msd/ptdesign.hpp"
#include "msd/verify.hpp"

// The mixed-Steiner-system constructions: the trivial all-words system, the
// weight-1 induction, derived designs, the resolution/large-set lift, the
// orthogonal-array construction, 1-perfect codes from group partitions with
// their weight shells, and the pairs/k-sets combiner. Constructions never
// self-certify; postconditions stated here are enforced through the verify
// module, and classification is always the verifier's verdict.

namespace msd {

// Code over a mixed alphabet with covering radius e. Codewords are sparse
// full-length words; radius-e balls tile the space. `source` is retained
// for partition codes so the weight shell can be computed without a full
// codeword enumeration.
struct PerfectCode {
  MixedAlphabet alphabet;
  std::vector<Block> codewords;  // empty in lazy mode
  int radius = 0;
  std::optional<GroupPartition> source;

  bool lazy() const { return codewords.empty() && source.has_value(); }
};

// MS(k,k,Q): all weight-k words.
DesignInstance trivial_kk(const MixedAlphabet& q, int k);

struct ClassifiedDesign {
  DesignInstance design;
  VerificationReport report;  // the authoritative classification
};

// MS(1,k,Q) by the weight-1 induction; for the shape Z2^n x Zq the explicit
// two-family construction is used instead (each nonzero q-symbol grouped
// with k-1 fresh binary coordinates, leftovers partitioned into k-sets).
// Requires the sorted-largest-alphabet balance condition; the returned
// classification is the verifier's verdict and may be MS_d rather than MS.
ClassifiedDesign ms1k(const MixedAlphabet& q, int k);

// Blocks through the point (coordinate, symbol), with the point removed and
// the coordinate dropped from the alphabet. For a verified MS(t,k,Q) this
// is an MS(t-1,k-1,Q').
DesignInstance derived(const DesignInstance& design, int coordinate,
                       int symbol);

// Resolution lift: each block of class j gains the point (n+1, j); an
// S(t,k,n) split into r classes of S(t-1,k,n) becomes a design over
// Z2^n x Z_{r+1}. Ingredients are re-verified before use.
DesignInstance from_resolution(
    const SteinerSystem& s,
    const std::vector<std::vector<std::vector<int>>>& classes);

// Orthogonal-array construction over Z2^{rk} x Z_{k+1}^{n-r}: r base blocks
// of k consecutive binary ones, one block per OA row. Uniform block weight
// (and hence an MS/MS_d verdict) only when k = n; other shapes classify as
// a pairwise balanced cover.
DesignInstance from_oa(const OrthogonalArray& oa, int r);

// 1-perfect mixed code from a group partition: coordinate i ranges over
// part i (symbol s is the s-th nonzero element in canonical order),
// codewords are the assignments with zero group sum. Enumeration refuses
// spaces above ~10^7 assignments unless lazy = true.
PerfectCode perfect_from_partition(const GroupPartition& partition,
                                   bool lazy = false);

// Full-space sweep of a perfect code (see verify_perfect).
PerfectSweepReport verify_perfect_code(const PerfectCode& code, int jobs = 1);

// The weight-(2e+1) codewords of an e-perfect code containing the all-zero
// word, as an MS(e+1,2e+1,Q) candidate. For lazy radius-1 partition codes
// this is computed directly as the zero-sum triples across three distinct
// parts.
DesignInstance weight_shell(const PerfectCode& code);

// Pairs/k-sets combiner: R a set of k-subsets of Z_n covering every
// t-subset at most once, T_1..T_r pairwise block-disjoint S(t-1,k-1,n)
// whose blocks absorb every t-subset missed by R. R's subsets become
// binary blocks; each T_i block gains the point (n+1,i). Output over
// Z2^n x Z_{r+1}. Preconditions are checked by brute force.
DesignInstance from_rt(int n, const std::vector<std::vector<int>>& r_sets,
                       const std::vector<std::vector<std::vector<int>>>& t_systems,
                       int t, int k);

// The k=3, t=2 case applied to a pairs-triples design.
DesignInstance from_rt(const PairsTriplesDesign& d);

// Convenience lifts used by the CLI and the acceptance suite.
DesignInstance ms_from_one_factorization(int n);
DesignInstance ms_from_affine(int q);
DesignInstance ms_from_large_set_sts9();
DesignInstance ms_from_kirkman_sts15();

}  // namespace msd
