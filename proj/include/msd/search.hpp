#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "msd/core.hpp"
#include "msd/ptdesign.hpp"

// Exhaustive backtracking search: the independent oracle for small-instance
// existence and nonexistence. Exhaustion means complete tree exhaustion; a
// timeout never masquerades as nonexistence.

namespace msd {

enum class SearchStatus { Found, ExhaustedNonexistent, Timeout };

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double timeout_seconds = 0;   // 0 = unlimited
};

struct ExactCoverOptions {
  SearchLimits limits;
  // Branch on the lowest-index uncovered item with candidates tried in
  // ascending order (canonical first witness) instead of the default
  // minimum-remaining-candidates column selection.
  bool lex_branching = false;
  // Fix the least candidate covering the first item (symmetry breaking;
  // only sound when every solution can be mapped onto one through that
  // candidate).
  bool fix_first_item = false;
  // Count all solutions instead of stopping at the first.
  bool count_all = false;
  // Extra admission predicate; a candidate may join only if this returns
  // true against the currently chosen rows.
  std::function<bool(int candidate, const std::vector<int>& chosen)> row_filter;
};

struct ExactCoverOutcome {
  SearchStatus status = SearchStatus::ExhaustedNonexistent;
  std::vector<int> witness;  // chosen candidate indices, sorted
  std::uint64_t nodes_explored = 0;
  std::uint64_t solutions = 0;  // meaningful with count_all
  bool canonical = false;       // witness found under lex branching
};

// Dancing-links exact cover: find a sub-collection of `candidates`
// partitioning 0..universe_size-1. Candidates are item-index lists.
ExactCoverOutcome exact_cover(int universe_size,
                              const std::vector<std::vector<int>>& candidates,
                              const ExactCoverOptions& options = {});

struct MsSearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNonexistent;
  std::optional<DesignInstance> witness;  // re-verified before returning
  std::uint64_t nodes_explored = 0;
  bool canonical = false;
};

// Exact cover of the weight-t words by the t-sets covered by weight-k
// blocks, with incremental pairwise-distance >= d_min pruning. Exhaustion
// certifies that no MS(t,k,Q) with minimum distance >= d_min exists.
// Refuses instances with more than ~10^5 weight-t words.
MsSearchOutcome search_ms(const MixedAlphabet& q, int t, int k, int d_min,
                          const SearchLimits& limits = {});

struct PtSearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNonexistent;
  std::optional<PairsTriplesDesign> witness;
  std::uint64_t nodes_explored = 0;
  std::string reason;  // set for parameter-check rejections
};

// Two-phase search for an (n,r)-pairs-triples design: r pairwise-disjoint
// one-factors chosen in canonical increasing order, then exact cover of the
// residual pairs by triples; the phases backtrack jointly. A failing
// parameter check short-circuits to nonexistence with the reason recorded.
PtSearchOutcome search_pt(int n, int r, const SearchLimits& limits = {});

}  // namespace msd
