#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msd/ingredients.hpp"

// (n,r)-pairs-triples designs and their recursive constructions: r pairwise
// disjoint one-factors of K_n plus a triple set such that every pair of Z_n
// lies in exactly one factor or one triple (r < n-1; r = n-1 is the
// one-factorization case and is flagged, not constructed).

namespace msd {

struct PairsTriplesDesign {
  int n = 0;
  std::vector<Triple> triples;       // each sorted ascending
  std::vector<OneFactor> factors;    // factor pairs sorted, {a,b} with a<b

  int r() const { return static_cast<int>(factors.size()); }
};

// The four designs given explicitly in the base catalog:
// (6,3), (10,3), (12,3), (12,5). Re-verified at load.
PairsTriplesDesign pt_base_catalog(int n, int r);

// (n,1) design from an S(2,3,n+1): triples avoiding point n, the factor
// being the pairs completed by point n. Requires n = 0 or 2 (mod 6).
PairsTriplesDesign pt_from_sts(int n);

// Doubling: (n,r) -> (2n, n+r). Points (x,i) relabel to x + n*i.
PairsTriplesDesign pt_double(const PairsTriplesDesign& d);

// Tripling keeping r: (n,r) -> (3n, r), cross triples {(x,0),(y,1),(x+y,2)}.
PairsTriplesDesign pt_triple_same_r(const PairsTriplesDesign& d);

// STS multiplication: (n,r) -> (mn, r) for m = 1 or 3 (mod 6), m >= 3.
PairsTriplesDesign pt_multiply_sts(const PairsTriplesDesign& d, int m);

// Growing tripling: (n,r) -> (3n, 2n+r), n even. The 2n new factors pair
// half-ranges of the three copies with offsets taken modulo n/2 inside
// each half.
PairsTriplesDesign pt_triple_grow(const PairsTriplesDesign& d);

// Product: (n1,r1) x (n2,r2) -> (n1*n2, r1 + n1*r2).
PairsTriplesDesign pt_product(const PairsTriplesDesign& a,
                              const PairsTriplesDesign& b);

// Composition recipe for the planner. Leaves are "base(n,r)" and
// "from-sts(n)"; inner nodes one of double/triple/multiply/grow/product.
struct PtRecipe {
  std::string op;
  std::vector<long long> args;
  std::vector<PtRecipe> children;

  std::string str() const;
};

enum class PtPlanStatus { Found, Unknown, Excluded, Invalid };

struct PtPlan {
  PtPlanStatus status = PtPlanStatus::Unknown;
  std::optional<PtRecipe> recipe;
  std::string note;
};

// Bounded backward search over composition trees toward (n,r). Returns a
// recipe whose execution verifies, or Unknown (never "nonexistent");
// r = n-1 reports Excluded, parameter-check failures report Invalid.
PtPlan pt_plan(int n, int r);

// Executes a recipe (leaves looked up in the catalog / STS path).
PairsTriplesDesign pt_run(const PtRecipe& recipe);

}  // namespace msd
