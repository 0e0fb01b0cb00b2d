#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msd/core.hpp"
#include "msd/ingredients.hpp"
#include "msd/ptdesign.hpp"

// The arbiter of truth. Everything constructed elsewhere in the library is
// re-checked here from first principles: exact t-coverage, minimum distance,
// design classification, and verifiers for all auxiliary objects. No
// sampling anywhere; counts are exact even where violation samples are
// capped.

namespace msd {

inline constexpr int kViolationSampleCap = 32;

struct CoverageReport {
  int t = 0;
  long long total_words = 0;    // all weight-t words over the alphabet
  long long covered_once = 0;   // words covered by exactly one block
  long long uncovered_count = 0;
  long long multi_count = 0;    // words covered by >= 2 blocks
  std::map<long long, long long> histogram;  // multiplicity -> word count, exact
  std::vector<Block> uncovered;                          // capped sample
  std::vector<std::pair<Block, long long>> multiply_covered;  // capped sample

  bool exact_once() const { return uncovered_count == 0 && multi_count == 0; }
};

// Exact coverage census: for every weight-t word, the number of blocks
// containing it (containment in the sense of `covers`). Throws if
// t < 1 or t exceeds the minimum block weight.
CoverageReport coverage(const DesignInstance& design, int t,
                        int sample_cap = kViolationSampleCap);

// Minimum pairwise Hamming distance; nullopt for fewer than two blocks.
std::optional<int> min_distance(const DesignInstance& design);

enum class DesignClass { MS, MSd, PairwiseBalancedCover, Invalid };

struct VerificationReport {
  int t = 0;
  int k = 0;
  long long block_count = 0;
  std::map<int, long long> block_size_multiset;  // weight -> count
  bool t_cover_ok = false;
  std::map<long long, long long> multiplicity_histogram;  // mult -> words
  std::optional<int> min_distance;
  DesignClass classification = DesignClass::Invalid;
  int d = 0;                    // valid when classification == MSd
  bool meets_even_bound = false;  // distance also >= 2(k-t)+2
  CoverageReport cov;
  std::string note;

  bool is_ms() const { return classification == DesignClass::MS; }
  // e.g. "MS(2,3, Z2^6 x Z4), d=3, 11 blocks"
  std::string describe(const MixedAlphabet& q) const;
};

// Full classification against the declared (t,k); never trusts constructor
// claims. Coverage failure yields Invalid with the failing samples kept in
// the report.
VerificationReport classify(const DesignInstance& design);

struct PtReport {
  bool ok = false;
  bool definition_excluded = false;  // r = n-1
  std::vector<std::string> violations;
};

// Structural verification of an (n,r)-pairs-triples design: each factor a
// perfect matching, factors pairwise disjoint, every pair of Z_n in exactly
// one factor or one triple, triples proper 3-subsets.
PtReport verify_pt(const PairsTriplesDesign& d);

// Every ordered column pair carries each ordered symbol pair exactly once.
// Throws on a wrong row count or out-of-range entries.
bool verify_oa(const OrthogonalArray& oa);

struct PerfectSweepReport {
  bool ok = false;
  long long space_size = 0;
  long long ball_size = 0;
  long long codeword_count = 0;
  long long uncovered = 0;   // words in no radius-e ball
  long long multi = 0;       // words in >= 2 balls
};

// Exact full-space sweep: every word of the space within distance e of
// exactly one codeword. Refuses spaces above ~10^7 words (no sampling
// fallback). jobs > 1 splits the codeword list across threads.
PerfectSweepReport verify_perfect(const MixedAlphabet& q,
                                  const std::vector<Block>& codewords, int e,
                                  int jobs = 1);

// Classical check: every t-subset of {0..n-1} in exactly one block.
bool verify_steiner(const std::vector<std::vector<int>>& blocks, int t, int k,
                    int n);

}  // namespace msd
