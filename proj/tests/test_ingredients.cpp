#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "msd/ingredients.hpp"
#include "msd/verify.hpp"

using namespace msd;

TEST_CASE("round-robin one-factorization") {
  auto f2 = one_factorization(2);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == OneFactor{{0, 1}});

  auto f4 = one_factorization(4);
  REQUIRE(f4.size() == 3);
  CHECK(f4[0] == OneFactor{{0, 3}, {1, 2}});
  CHECK(f4[1] == OneFactor{{0, 2}, {1, 3}});
  CHECK(f4[2] == OneFactor{{0, 1}, {2, 3}});

  auto f10 = one_factorization(10);
  REQUIRE(f10.size() == 9);
  std::set<Pair> all;
  for (const auto& f : f10) {
    CHECK(f.size() == 5);
    for (const Pair& p : f) CHECK(all.insert(p).second);
  }
  CHECK(all.size() == 45);

  CHECK_THROWS_AS(one_factorization(5), std::invalid_argument);
}

TEST_CASE("triple systems by Bose and Skolem") {
  SteinerSystem s7 = sts(7);
  CHECK(s7.blocks.size() == 7);
  CHECK(verify_steiner(s7.blocks, 2, 3, 7));

  SteinerSystem s9 = sts(9);
  CHECK(s9.blocks.size() == 12);
  CHECK(verify_steiner(s9.blocks, 2, 3, 9));

  SteinerSystem s13 = sts(13);
  CHECK(s13.blocks.size() == 26);
  CHECK(verify_steiner(s13.blocks, 2, 3, 13));

  for (int n : {15, 19, 21, 25, 27})
    CHECK(verify_steiner(sts(n).blocks, 2, 3, n));

  CHECK_THROWS_AS(sts(8), std::invalid_argument);
  CHECK_THROWS_AS(sts(11), std::invalid_argument);
}

TEST_CASE("affine resolutions") {
  ResolvedSteinerSystem r3 = affine_resolution(3);
  CHECK(r3.system.blocks.size() == 12);
  CHECK(r3.classes.size() == 4);
  CHECK(verify_steiner(r3.system.blocks, 2, 3, 9));
  for (const auto& cls : r3.classes) CHECK(verify_steiner(cls, 1, 3, 9));

  ResolvedSteinerSystem r4 = affine_resolution(4);
  CHECK(r4.system.blocks.size() == 20);
  CHECK(r4.classes.size() == 5);
  CHECK(verify_steiner(r4.system.blocks, 2, 4, 16));

  // q = 2 degenerates to a one-factorization of K_4
  ResolvedSteinerSystem r2 = affine_resolution(2);
  CHECK(r2.classes.size() == 3);
  std::set<Pair> pairs;
  for (const auto& cls : r2.classes) {
    CHECK(cls.size() == 2);
    for (const auto& line : cls)
      CHECK(pairs.insert({line[0], line[1]}).second);
  }
  CHECK(pairs.size() == 6);

  ResolvedSteinerSystem r8 = affine_resolution(8);
  CHECK(r8.system.blocks.size() == 72);
  CHECK(verify_steiner(r8.system.blocks, 2, 8, 64));
  ResolvedSteinerSystem r9 = affine_resolution(9);
  CHECK(verify_steiner(r9.system.blocks, 2, 9, 81));

  CHECK_THROWS_AS(affine_resolution(6), std::invalid_argument);
}

TEST_CASE("large set of triple systems on nine points") {
  ResolvedSteinerSystem ls = large_set_sts9();
  REQUIRE(ls.classes.size() == 7);
  std::set<std::vector<int>> seen;
  for (const auto& cls : ls.classes) {
    CHECK(cls.size() == 12);
    CHECK(verify_steiner(cls, 2, 3, 9));
    for (const auto& b : cls) CHECK(seen.insert(b).second);
  }
  CHECK(seen.size() == 84);
}

TEST_CASE("Kirkman resolution on fifteen points") {
  ResolvedSteinerSystem kt = kirkman_sts15();
  CHECK(kt.system.blocks.size() == 35);
  CHECK(verify_steiner(kt.system.blocks, 2, 3, 15));
  REQUIRE(kt.classes.size() == 7);
  for (const auto& cls : kt.classes) {
    CHECK(cls.size() == 5);
    CHECK(verify_steiner(cls, 1, 3, 15));
  }
}

TEST_CASE("orthogonal arrays from fields and Cayley tables") {
  OrthogonalArray z2 = mols_oa(2, 3);
  CHECK(z2.rows ==
        std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  CHECK(verify_oa(mols_oa(3, 4)));
  CHECK(verify_oa(mols_oa(4, 5)));
  CHECK(verify_oa(mols_oa(5, 6)));
  CHECK(verify_oa(mols_oa(6, 3)));
  CHECK(verify_oa(mols_oa(7, 3)));

  CHECK_THROWS_AS(mols_oa(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(mols_oa(4, 6), std::invalid_argument);
}

TEST_CASE("deleting an array column keeps orthogonality") {
  for (auto [k, n] : {std::pair{3, 4}, {4, 5}, {5, 4}}) {
    OrthogonalArray oa = mols_oa(k, n);
    for (int drop = 0; drop < n; ++drop) {
      OrthogonalArray smaller{k, n - 1, {}};
      for (const auto& row : oa.rows) {
        std::vector<int> r;
        for (int c = 0; c < n; ++c)
          if (c != drop) r.push_back(row[c]);
        smaller.rows.push_back(std::move(r));
      }
      CHECK(verify_oa(smaller));
    }
  }
}

TEST_CASE("field arithmetic spot checks") {
  std::mt19937_64 rng(2025);
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    FiniteField f(q);
    CHECK(f.size() == q);
    for (int iter = 0; iter < 200; ++iter) {
      std::uniform_int_distribution<int> el(0, q - 1);
      int a = el(rng), b = el(rng), c = el(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, 0) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
    }
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(12), std::invalid_argument);
}

TEST_CASE("group partitions from subspaces") {
  GroupPartition p32 = subspace_partition(3, {2});
  REQUIRE(p32.parts.size() == 5);
  CHECK(p32.parts[4] == std::vector<long long>{0, 1, 2, 3});
  for (int i = 0; i < 4; ++i) CHECK(p32.parts[i].size() == 2);

  GroupPartition p422 = subspace_partition(4, {2, 2});
  REQUIRE(p422.parts.size() == 11);
  CHECK(p422.parts[9].size() == 4);
  CHECK(p422.parts[10].size() == 4);

  GroupPartition singletons = subspace_partition(2, {});
  CHECK(singletons.parts.size() == 3);

  CHECK_THROWS_AS(subspace_partition(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_partition(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_partition(4, {4}), std::invalid_argument);

  // validator catches broken closures
  GroupPartition broken = p32;
  broken.parts[4] = {0, 1, 2, 4};
  CHECK_THROWS_AS(validate_partition(broken), std::invalid_argument);
}

TEST_CASE("abelian group arithmetic") {
  AbelianGroup g({2, 2, 3});
  CHECK(g.size() == 12);
  for (long long a = 0; a < g.size(); ++a) {
    CHECK(g.add(a, 0) == a);
    CHECK(g.add(a, g.neg(a)) == 0);
    for (long long b = 0; b < g.size(); ++b)
      CHECK(g.add(a, b) == g.add(b, a));
  }
  // all-2 moduli means XOR on indices
  AbelianGroup z2_4(std::vector<long long>(4, 2));
  CHECK(z2_4.add(0b1010, 0b0110) == 0b1100);
}
