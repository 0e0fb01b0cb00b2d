#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msd/conditions.hpp"
#include "msd/core.hpp"

using namespace msd;

namespace {

MixedAlphabet binary_with_q(int n, int q) {
  std::vector<int> r(n, 2);
  r.push_back(q);
  return MixedAlphabet(std::move(r));
}

// Test-side subset-enumeration oracle for one member of the divisibility
// family: drop `drop` coordinates, check e_s = 0 (mod m) for every choice.
bool naive_family_pass(const std::vector<long long>& values, int drop, int s,
                       long long m) {
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(drop);
  for (int i = 0; i < drop; ++i) idx[i] = i;
  while (true) {
    std::vector<long long> rest;
    int d = 0;
    for (int i = 0; i < n; ++i)
      if (d < drop && idx[d] == i)
        ++d;
      else
        rest.push_back(values[i]);
    // plain recursive subset-sum of products
    long long sum = 0;
    std::vector<int> pick(s);
    auto rec = [&](auto&& self, int from, int depth, long long prod) -> void {
      if (depth == s) {
        sum += prod;
        return;
      }
      for (int i = from; i < static_cast<int>(rest.size()); ++i)
        self(self, i + 1, depth + 1, prod * rest[i]);
    };
    rec(rec, 0, 0, 1);
    if (sum % m != 0) return false;
    if (drop == 0) break;
    int i = drop - 1;
    while (i >= 0 && idx[i] == n - drop + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < drop; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace

TEST_CASE("block count closed form") {
  BlockCountResult sts7 = block_count(MixedAlphabet(std::vector<int>(7, 2)), 2, 3);
  CHECK(sts7.integral);
  CHECK(sts7.count == 7);
  CHECK(sts7.weight_t_words == 21);

  BlockCountResult prtr = block_count(binary_with_q(6, 4), 2, 3);
  CHECK(prtr.integral);
  CHECK(prtr.count == 11);

  MixedAlphabet q({2, 3, 3, 5});
  for (int k = 1; k <= 4; ++k) {
    BlockCountResult r = block_count(q, k, k);
    CHECK(r.integral);
    CHECK(r.count == count_weight_words(q, k));
  }

  BlockCountResult frac = block_count(MixedAlphabet(std::vector<int>(5, 2)), 2, 3);
  CHECK_FALSE(frac.integral);
  CHECK(frac.exact == make_rational(10, 3));
}

TEST_CASE("necessary report: passing instance Z2^6 x Z4, (2,3)") {
  ConditionReport rep = necessary_report(binary_with_q(6, 4), 2, 3);
  CHECK(rep.all_passed());
  const ConditionCheck* shape = rep.find("binary-q-t2-k3");
  REQUIRE(shape != nullptr);
  CHECK(shape->status == CheckStatus::Pass);
  CHECK(rep.find("block-count")->status == CheckStatus::Pass);
  CHECK(rep.find("largest-alphabet-balance")->status ==
        CheckStatus::NotApplicable);
}

TEST_CASE("necessary report: residue failure Z2^8 x Z4, (2,3)") {
  ConditionReport rep = necessary_report(binary_with_q(8, 4), 2, 3);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.find("binary-q-t2-k3")->status == CheckStatus::Fail);
}

TEST_CASE("necessary report: length bound met with equality") {
  // the parameter family reached by radius-2 perfect codes of length 2^m+1
  ConditionReport rep = necessary_report(binary_with_q(16, 8), 3, 5);
  CHECK(rep.all_passed());
  const ConditionCheck* len = rep.find("length-lower-bound");
  REQUIRE(len != nullptr);
  CHECK(len->status == CheckStatus::Pass);
  CHECK(len->detail.find("met with equality") != std::string::npos);
}

TEST_CASE("necessary report: specialized checks trigger by shape") {
  // (1,2): n >= q-1 and n-q+1 even
  CHECK(necessary_report(binary_with_q(3, 4), 1, 2).all_passed());
  CHECK_FALSE(necessary_report(binary_with_q(4, 4), 1, 2).all_passed());
  // (3,4) at the large-set parameters Z2^9 x Z8
  CHECK(necessary_report(binary_with_q(9, 8), 3, 4).all_passed());
  CHECK_FALSE(necessary_report(binary_with_q(9, 4), 3, 4).all_passed());
  // (2,k) at the affine parameters Z2^9 x Z5, k=4 and Z2^16 x Z6, k=5
  CHECK(necessary_report(binary_with_q(9, 5), 2, 4).all_passed());
  CHECK(necessary_report(binary_with_q(16, 6), 2, 5).all_passed());
  // multiple non-binary coordinates: shape checks stay not-applicable
  ConditionReport rep = necessary_report(MixedAlphabet({2, 2, 3, 3}), 1, 2);
  CHECK(rep.find("binary-q-t1-k2")->status == CheckStatus::NotApplicable);
  CHECK(rep.find("largest-alphabet-balance")->status == CheckStatus::Pass);
}

TEST_CASE("divisibility family: reduction path matches plain enumeration") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    // n > 20 forces the multiset-reduction path inside the report
    int n = std::uniform_int_distribution<int>(21, 26)(rng);
    std::vector<int> radices;
    std::vector<long long> values;
    for (int i = 0; i < n; ++i) {
      int q = std::uniform_int_distribution<int>(2, 4)(rng);
      radices.push_back(q);
      values.push_back(q - 1);
    }
    int t = std::uniform_int_distribution<int>(1, 3)(rng);
    int k = t + std::uniform_int_distribution<int>(1, 2)(rng);

    bool naive = true;
    for (int i = 0; i < t; ++i)
      naive = naive &&
              naive_family_pass(values, i, t - i, binomial(k - i, t - i));

    ConditionReport rep = necessary_report(MixedAlphabet(radices), t, k);
    CHECK(rep.find("divisibility-family")->status ==
          (naive ? CheckStatus::Pass : CheckStatus::Fail));
  }
}

TEST_CASE("family implies block-count integrality") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 200; ++iter) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<int> radices;
    for (int i = 0; i < n; ++i)
      radices.push_back(std::uniform_int_distribution<int>(2, 6)(rng));
    int t = std::uniform_int_distribution<int>(1, n)(rng);
    int k = std::uniform_int_distribution<int>(t, n)(rng);
    ConditionReport rep = necessary_report(MixedAlphabet(radices), t, k);
    if (rep.find("divisibility-family")->status == CheckStatus::Pass)
      CHECK(rep.find("block-count")->status == CheckStatus::Pass);
  }
}

TEST_CASE("pairs-triples parameter check") {
  CHECK(pt_parameter_check(6, 3).ok);
  CHECK(pt_parameter_check(12, 5).ok);
  CHECK(pt_parameter_check(12, 7).ok);

  PtParameterResult r83 = pt_parameter_check(8, 3);
  CHECK_FALSE(r83.ok);

  PtParameterResult r101 = pt_parameter_check(10, 1);
  CHECK_FALSE(r101.ok);

  CHECK_FALSE(pt_parameter_check(7, 3).ok);   // odd n
  CHECK_FALSE(pt_parameter_check(6, 2).ok);   // even r
  CHECK_FALSE(pt_parameter_check(6, 7).ok);   // r > n-1
}

TEST_CASE("large-set size formulas") {
  LargeSetSizes k4 = large_set_sizes(MixedAlphabet({2, 2, 2, 2}), 2);
  CHECK(k4.size_a == 3);
  CHECK(k4.size_b == make_rational(3, 1));
  CHECK(k4.equal);

  LargeSetSizes mixed = large_set_sizes(MixedAlphabet({2, 2, 3, 3}), 2);
  CHECK(mixed.size_a == 4);
  CHECK(mixed.size_b == make_rational(5, 1));
  CHECK_FALSE(mixed.equal);

  LargeSetSizes k3 = large_set_sizes(MixedAlphabet(std::vector<int>(6, 2)), 3);
  CHECK(k3.size_a == 10);
  CHECK(k3.size_b == make_rational(10, 1));
  CHECK(k3.equal);

  // balance denominator <= 0: no single system at all
  LargeSetSizes none = large_set_sizes(MixedAlphabet({2, 2, 9}), 3);
  CHECK(none.no_single_system);
  CHECK_FALSE(none.equal);
}

TEST_CASE("uniform alphabets always balance the two large-set counts") {
  std::mt19937_64 rng(271828);
  for (int iter = 0; iter < 100; ++iter) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    int q = std::uniform_int_distribution<int>(2, 5)(rng);
    int k = std::uniform_int_distribution<int>(2, n)(rng);
    LargeSetSizes s = large_set_sizes(MixedAlphabet(std::vector<int>(n, q)), k);
    if (!s.no_single_system) CHECK(s.equal);
  }
}

TEST_CASE("perfect-code divisibility family") {
  CHECK(perfect_code_divisibility(MixedAlphabet(std::vector<int>(7, 2)), 1)
            .all_passed());
  ConditionReport bad =
      perfect_code_divisibility(MixedAlphabet(std::vector<int>(5, 2)), 1);
  CHECK_FALSE(bad.all_passed());
  CHECK(perfect_code_divisibility(MixedAlphabet({2, 2, 2, 2, 4}), 1)
            .all_passed());
}
