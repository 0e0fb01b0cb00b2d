#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "msd/conditions.hpp"
#include "msd/construct.hpp"
#include "msd/verify.hpp"

using namespace msd;

TEST_CASE("trivial all-words systems") {
  DesignInstance one = trivial_kk(MixedAlphabet({2, 2, 2}), 3);
  CHECK(one.blocks().size() == 1);
  CHECK(classify(one).classification == DesignClass::MS);

  DesignInstance w1 = trivial_kk(MixedAlphabet({2, 2, 3}), 1);
  CHECK(w1.blocks().size() == 4);
  CHECK(classify(w1).classification == DesignClass::MS);

  DesignInstance w2 = trivial_kk(MixedAlphabet({2, 2, 2, 2, 2, 2, 4}), 2);
  CHECK(w2.blocks().size() == 33);
  CHECK(classify(w2).classification == DesignClass::MS);
}

TEST_CASE("weight-1 systems: explicit shape construction") {
  ClassifiedDesign cd = ms1k(MixedAlphabet({2, 2, 2, 4}), 2);
  CHECK(cd.design.blocks() ==
        std::vector<Block>{Block({{1, 1}, {4, 1}}), Block({{2, 1}, {4, 2}}),
                           Block({{3, 1}, {4, 3}})});
  CHECK(cd.report.classification == DesignClass::MS);
  CHECK(cd.report.min_distance == 3);

  ClassifiedDesign cd93 = ms1k(MixedAlphabet({2, 2, 2, 2, 2, 2, 2, 2, 2, 4}), 3);
  CHECK(cd93.design.blocks().size() == 4);
  CHECK(cd93.report.classification == DesignClass::MS);
  CHECK(cd93.report.min_distance == 5);
  // the leftover binary coordinates form their own block
  CHECK(std::count(cd93.design.blocks().begin(), cd93.design.blocks().end(),
                   Block({{7, 1}, {8, 1}, {9, 1}})) == 1);
}

TEST_CASE("weight-1 systems: the induction can fall short of the distance") {
  ClassifiedDesign cd = ms1k(MixedAlphabet({2, 2, 3, 3}), 2);
  CHECK(cd.report.classification == DesignClass::MSd);
  CHECK(cd.report.d == 2);
  CHECK(cd.report.t_cover_ok);
  CHECK(cd.design.blocks().size() == 3);
}

TEST_CASE("weight-1 systems: balance precondition enforced") {
  // 3 - 3*2 < 0
  CHECK_THROWS_AS(ms1k(MixedAlphabet({2, 2, 2, 4}), 3), std::invalid_argument);
  // all-binary case reduces to k | n
  CHECK(ms1k(MixedAlphabet(std::vector<int>(6, 2)), 3).report.is_ms());
  CHECK_THROWS_AS(ms1k(MixedAlphabet(std::vector<int>(7, 2)), 3),
                  std::invalid_argument);
}

TEST_CASE("derived designs") {
  DesignInstance prtr = from_rt(pt_base_catalog(6, 3));
  DesignInstance t0 = derived(prtr, 7, 1);
  CHECK(t0.blocks() ==
        std::vector<Block>{Block({{1, 1}, {4, 1}}), Block({{2, 1}, {5, 1}}),
                           Block({{3, 1}, {6, 1}})});
  CHECK(classify(t0).classification == DesignClass::MS);

  DesignInstance k4 = ms_from_one_factorization(4);
  DesignInstance f1 = derived(k4, 5, 2);
  CHECK(f1.blocks() ==
        std::vector<Block>{Block({{1, 1}, {3, 1}}), Block({{2, 1}, {4, 1}})});

  // derived at a binary coordinate
  DesignInstance sub = derived(prtr, 1, 1);
  VerificationReport rep = classify(sub);
  CHECK(rep.classification == DesignClass::MS);
  CHECK(rep.t == 1);
  CHECK(rep.k == 2);

  CHECK_THROWS_AS(derived(t0, 1, 1), std::invalid_argument);  // t = 1 already
}

TEST_CASE("resolution lift: one-factorizations, affine planes, large set") {
  DesignInstance k4 = ms_from_one_factorization(4);
  CHECK(k4.blocks().size() == 6);
  VerificationReport rep = classify(k4);
  CHECK(rep.classification == DesignClass::MS);
  CHECK(rep.min_distance == 3);

  DesignInstance a3 = ms_from_affine(3);
  VerificationReport rep3 = classify(a3);
  CHECK(rep3.classification == DesignClass::MS);
  CHECK(rep3.t == 2);
  CHECK(rep3.k == 4);
  CHECK(a3.alphabet() == MixedAlphabet({2, 2, 2, 2, 2, 2, 2, 2, 2, 5}));
  CHECK(rep3.min_distance == 5);

  DesignInstance ls = ms_from_large_set_sts9();
  VerificationReport repls = classify(ls);
  CHECK(repls.classification == DesignClass::MS);
  CHECK(repls.t == 3);
  CHECK(repls.k == 4);
  CHECK(repls.min_distance == 3);
  CHECK(repls.block_count == 84);
}

TEST_CASE("resolution lift rejects bad partitions") {
  ResolvedSteinerSystem r3 = affine_resolution(3);
  auto classes = r3.classes;
  classes.pop_back();
  CHECK_THROWS_AS(from_resolution(r3.system, classes), std::invalid_argument);

  auto swapped = r3.classes;
  std::swap(swapped[0][0], swapped[1][0]);  // classes no longer parallel
  CHECK_THROWS_AS(from_resolution(r3.system, swapped), std::invalid_argument);
}

TEST_CASE("deriving a lifted design at the class coordinate returns the class") {
  ResolvedSteinerSystem r3 = affine_resolution(3);
  DesignInstance lifted = from_resolution(r3.system, r3.classes);
  const int cls_coord = 10;
  for (int j = 0; j < 4; ++j) {
    DesignInstance back = derived(lifted, cls_coord, j + 1);
    std::set<std::vector<int>> got;
    for (const Block& b : back.blocks()) {
      std::vector<int> line;
      for (const Point& p : b.points()) line.push_back(p.coord - 1);
      got.insert(line);
    }
    std::set<std::vector<int>> expected(r3.classes[j].begin(),
                                        r3.classes[j].end());
    CHECK(got == expected);
  }
}

TEST_CASE("array construction: strict regime k = n") {
  DesignInstance d = from_oa(mols_oa(3, 3), 2);
  VerificationReport rep = classify(d);
  CHECK(rep.classification == DesignClass::MS);
  CHECK(rep.block_count == 11);
  CHECK(rep.min_distance == 3);
  CHECK(d.alphabet() == MixedAlphabet({2, 2, 2, 2, 2, 2, 4}));

  // r = n-1 with k = n: distance exactly 2(k-2)+1
  DesignInstance d44 = from_oa(mols_oa(4, 4), 3);
  VerificationReport rep44 = classify(d44);
  CHECK(rep44.classification == DesignClass::MS);
  CHECK(rep44.min_distance == 2 * (4 - 2) + 1);
}

TEST_CASE("array construction: mixed regimes stay honest") {
  for (int k = 2; k <= 7; ++k) {
    DesignInstance d = from_oa(mols_oa(k, 3), 2);
    VerificationReport rep = classify(d);
    CHECK(rep.t_cover_ok);
    if (k == 3)
      CHECK(rep.classification == DesignClass::MS);
    else
      CHECK(rep.classification == DesignClass::PairwiseBalancedCover);
  }
  CHECK_THROWS_AS(from_oa(mols_oa(3, 3), 3), std::invalid_argument);
}

TEST_CASE("perfect codes from partitions") {
  PerfectCode repetition = perfect_from_partition(subspace_partition(2, {}));
  CHECK(repetition.alphabet == MixedAlphabet({2, 2, 2}));
  CHECK(repetition.codewords ==
        std::vector<Block>{Block{}, Block({{1, 1}, {2, 1}, {3, 1}})});
  CHECK(verify_perfect_code(repetition).ok);

  PerfectCode f8 = perfect_from_partition(subspace_partition(3, {2}));
  CHECK(f8.alphabet == MixedAlphabet({2, 2, 2, 2, 4}));
  CHECK(f8.codewords.size() == 8);
  CHECK(verify_perfect_code(f8).ok);

  PerfectCode two = perfect_from_partition(subspace_partition(4, {2, 2}));
  CHECK(two.alphabet == MixedAlphabet({2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4}));
  CHECK(two.codewords.size() == 512);
  CHECK(verify_perfect_code(two).ok);
}

TEST_CASE("weight shells") {
  PerfectCode repetition = perfect_from_partition(subspace_partition(2, {}));
  DesignInstance s33 = weight_shell(repetition);
  CHECK(s33.blocks() == std::vector<Block>{Block({{1, 1}, {2, 1}, {3, 1}})});
  CHECK(classify(s33).classification == DesignClass::MS);

  for (auto [m, dims] : std::vector<std::pair<int, std::vector<int>>>{
           {3, {2}}, {4, {2}}, {4, {2, 2}}}) {
    GroupPartition p = subspace_partition(m, dims);
    DesignInstance eager = weight_shell(perfect_from_partition(p));
    DesignInstance lazy = weight_shell(perfect_from_partition(p, true));
    CHECK(eager == lazy);
    VerificationReport rep = classify(eager);
    CHECK(rep.classification == DesignClass::MS);
    CHECK(rep.t == 2);
    CHECK(rep.k == 3);
    // count agrees with the closed form
    CHECK(rep.block_count == block_count(eager.alphabet(), 2, 3).count);
  }

  // a code without the zero word is rejected
  PerfectCode no_zero = perfect_from_partition(subspace_partition(2, {}));
  no_zero.codewords.erase(no_zero.codewords.begin());
  CHECK_THROWS_AS(weight_shell(no_zero), std::invalid_argument);
}

TEST_CASE("pairs/k-sets combiner outputs") {
  struct Row {
    int n, r;
    long long blocks;
  };
  for (const Row& row : {Row{6, 3, 11}, Row{10, 3, 25}, Row{12, 5, 42}}) {
    DesignInstance d = from_rt(pt_base_catalog(row.n, row.r));
    VerificationReport rep = classify(d);
    CHECK(rep.classification == DesignClass::MS);
    CHECK(rep.block_count == row.blocks);
    CHECK(rep.min_distance == 3);
    CHECK(rep.block_count == block_count(d.alphabet(), 2, 3).count);
  }
}

TEST_CASE("combiner rejects violated preconditions") {
  PairsTriplesDesign d = pt_base_catalog(6, 3);
  // duplicate a factor: systems are no longer block-disjoint and pairs are
  // covered twice
  std::vector<std::vector<std::vector<int>>> systems;
  for (const OneFactor& f : d.factors) {
    std::vector<std::vector<int>> sys;
    for (const Pair& p : f) sys.push_back({p[0], p[1]});
    systems.push_back(sys);
  }
  systems.push_back(systems.back());
  std::vector<std::vector<int>> r_sets;
  for (const Triple& t : d.triples) r_sets.push_back({t[0], t[1], t[2]});
  CHECK_THROWS_AS(from_rt(6, r_sets, systems, 2, 3), std::invalid_argument);

  // drop a triple: a pair goes uncovered
  auto fewer = r_sets;
  fewer.pop_back();
  systems.pop_back();
  CHECK_THROWS_AS(from_rt(6, fewer, systems, 2, 3), std::invalid_argument);
}

TEST_CASE("combiner works at general parameters") {
  // k = 4, t = 3 with an empty k-set family: the seven disjoint triple
  // systems absorb every 3-subset, reproducing the resolution lift
  ResolvedSteinerSystem ls = large_set_sts9();
  DesignInstance via_rt = from_rt(9, {}, ls.classes, 3, 4);
  DesignInstance via_resolution = from_resolution(ls.system, ls.classes);
  CHECK(via_rt == via_resolution);
  CHECK(classify(via_rt).classification == DesignClass::MS);
}

TEST_CASE("every constructed system matches the closed-form count") {
  std::vector<DesignInstance> designs;
  designs.push_back(ms_from_one_factorization(8));
  designs.push_back(ms_from_affine(3));
  designs.push_back(ms_from_large_set_sts9());
  designs.push_back(from_oa(mols_oa(3, 3), 2));
  designs.push_back(from_rt(pt_base_catalog(12, 5)));
  for (const DesignInstance& d : designs) {
    VerificationReport rep = classify(d);
    REQUIRE(rep.classification == DesignClass::MS);
    BlockCountResult bc = block_count(d.alphabet(), rep.t, rep.k);
    CHECK(bc.integral);
    CHECK(bc.count == rep.block_count);
  }
}
