#include "msd/conditions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace msd {

namespace {

using i128 = __int128;

constexpr i128 kSaturate = i128(1) << 100;

// Elementary symmetric polynomial e_s of `values`, saturating instead of
// overflowing; nullopt when the exact value left the representable range.
std::optional<long long> esym_exact(const std::vector<long long>& values,
                                    int s) {
  if (s < 0 || s > static_cast<int>(values.size())) return 0;
  std::vector<i128> e(s + 1, 0);
  e[0] = 1;
  bool sat = false;
  for (long long v : values)
    for (int j = s; j >= 1; --j) {
      e[j] += e[j - 1] * v;
      if (e[j] > kSaturate) {
        e[j] = kSaturate;
        sat = true;
      }
    }
  if (sat || e[s] > i128(9'000'000'000'000'000'000LL)) return std::nullopt;
  return static_cast<long long>(e[s]);
}

long long esym_mod(const std::vector<long long>& values, int s, long long m) {
  if (s < 0 || s > static_cast<int>(values.size())) return 0;
  std::vector<long long> e(s + 1, 0);
  e[0] = 1 % m;
  for (long long v : values) {
    long long vm = v % m;
    for (int j = s; j >= 1; --j) e[j] = (e[j] + e[j - 1] * vm) % m;
  }
  return e[s];
}

std::string join_values(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

struct FamilyCase {
  bool pass = true;
  long long classes = 0;
  std::string first_failure;
};

// Checks e_s(X) = 0 (mod m) for every X obtained by dropping `drop`
// coordinates. Because the sum only depends on the multiset of radices in
// X, large n reduces to multiset choices over distinct values; for n <= 20
// plain subset enumeration is used.
FamilyCase check_drop_family(const std::vector<long long>& values, int drop,
                             int s, long long m) {
  FamilyCase out;
  const int n = static_cast<int>(values.size());
  auto record = [&](const std::vector<long long>& dropped, long long residue) {
    ++out.classes;
    if (residue != 0 && out.pass) {
      out.pass = false;
      std::ostringstream os;
      os << "drop {" << join_values(dropped) << "}: e_" << s << " = "
         << residue << " (mod " << m << ")";
      out.first_failure = os.str();
    }
  };

  if (n <= 20) {
    std::vector<int> idx(drop);
    for (int i = 0; i < drop; ++i) idx[i] = i;
    while (true) {
      std::vector<long long> rest;
      std::vector<long long> dropped;
      rest.reserve(n - drop);
      int d = 0;
      for (int i = 0; i < n; ++i) {
        if (d < drop && idx[d] == i) {
          dropped.push_back(values[i]);
          ++d;
        } else {
          rest.push_back(values[i]);
        }
      }
      record(dropped, esym_mod(rest, s, m));
      if (drop == 0) break;
      int i = drop - 1;
      while (i >= 0 && idx[i] == n - drop + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < drop; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }

  // multiset reduction over distinct values
  std::vector<std::pair<long long, int>> groups;  // value -> multiplicity
  {
    std::vector<long long> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (long long v : sorted)
      if (!groups.empty() && groups.back().first == v)
        ++groups.back().second;
      else
        groups.emplace_back(v, 1);
  }
  std::vector<int> take(groups.size(), 0);
  // enumerate multisets of size `drop`
  auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
    if (g == groups.size()) {
      if (remaining != 0) return;
      std::vector<long long> rest;
      std::vector<long long> dropped;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (int c = 0; c < take[i]; ++c) dropped.push_back(groups[i].first);
        for (int c = take[i]; c < groups[i].second; ++c)
          rest.push_back(groups[i].first);
      }
      record(dropped, esym_mod(rest, s, m));
      return;
    }
    int cap = std::min(groups[g].second, remaining);
    for (int c = 0; c <= cap; ++c) {
      take[g] = c;
      self(self, g + 1, remaining - c);
    }
    take[g] = 0;
  };
  rec(rec, 0, drop);
  return out;
}

}  // namespace

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

bool ConditionReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::Fail;
  });
}

const ConditionCheck* ConditionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

BlockCountResult block_count(const MixedAlphabet& q, int t, int k) {
  if (t < 1 || k < t || k > q.length())
    throw std::invalid_argument("need 1 <= t <= k <= n");
  BlockCountResult res;
  res.weight_t_words = count_weight_words(q, t);
  res.denom = binomial(k, t);
  res.exact = make_rational(res.weight_t_words, res.denom);
  res.integral = res.exact.integral();
  if (res.integral) res.count = res.exact.num;
  return res;
}

ConditionReport necessary_report(const MixedAlphabet& q, int t, int k) {
  const int n = q.length();
  if (t < 1 || k < t || k > n)
    throw std::invalid_argument("need 1 <= t <= k <= n");

  ConditionReport rep;
  std::vector<long long> values;
  for (int qi : q.radices()) values.push_back(qi - 1);
  std::vector<long long> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  {
    BlockCountResult bc = block_count(q, t, k);
    ConditionCheck c;
    c.name = "block-count";
    c.status = bc.integral ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream os;
    os << "weight-" << t << " words = " << bc.weight_t_words << ", /C(" << k
       << "," << t << ")=" << bc.denom << " -> " << bc.exact.str();
    c.detail = os.str();
    rep.checks.push_back(c);
  }

  {
    ConditionCheck c;
    c.name = "divisibility-family";
    c.status = CheckStatus::Pass;
    long long classes = 0;
    std::string failure;
    for (int i = 0; i < t && failure.empty(); ++i) {
      FamilyCase fc =
          check_drop_family(values, i, t - i, binomial(k - i, t - i));
      classes += fc.classes;
      if (!fc.pass) {
        failure = "i=" + std::to_string(i) + ", " + fc.first_failure;
        c.status = CheckStatus::Fail;
      }
    }
    c.detail = failure.empty()
                   ? std::to_string(classes) + " drop-classes checked"
                   : failure;
    rep.checks.push_back(c);
  }

  {
    ConditionCheck c;
    c.name = "largest-alphabet-balance";
    if (t == 1) {
      long long head = 0;
      for (int i = 0; i + 1 < n; ++i) head += sorted[i];
      long long diff = head - sorted[n - 1] * (k - 1);
      bool ok = diff >= 0 && diff % k == 0;
      c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      std::ostringstream os;
      os << "sum(q_i-1, i<n) - (q_n-1)(k-1) = " << diff
         << (ok ? ", nonnegative and divisible by " : ", must be >= 0 and = 0 mod ")
         << k;
      c.detail = os.str();
    } else {
      c.status = CheckStatus::NotApplicable;
      c.detail = "stated for t = 1";
    }
    rep.checks.push_back(c);
  }

  // Z2^nb x Zq shape: all radices 2 except one larger
  const bool shape =
      n >= 2 && sorted[n - 1] > 2 &&
      std::all_of(sorted.begin(), sorted.end() - 1,
                  [](long long v) { return v == 1; });
  const long long nb = n - 1;            // binary coordinate count
  const long long qq = sorted[n - 1] + 1;  // the one larger radix

  auto shape_check = [&](const std::string& name, bool applicable,
                         const std::function<std::pair<bool, std::string>()>&
                             eval) {
    ConditionCheck c;
    c.name = name;
    if (!shape || !applicable) {
      c.status = CheckStatus::NotApplicable;
      c.detail = shape ? "different (t,k)" : "alphabet is not Z2^n x Zq";
    } else {
      auto [ok, detail] = eval();
      c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      c.detail = detail;
    }
    rep.checks.push_back(c);
  };

  shape_check("binary-q-t1-k2", t == 1 && k == 2, [&] {
    bool ok = nb >= qq - 1 && (nb - qq + 1) % 2 == 0;
    std::ostringstream os;
    os << "n=" << nb << ", q=" << qq << ": n >= q-1 and n-q+1 even";
    return std::pair{ok, os.str()};
  });
  shape_check("binary-q-t2-k3", t == 2 && k == 3, [&] {
    bool evens = nb % 2 == 0 && qq % 2 == 0;
    bool branch =
        (nb % 6 == 0) || (nb % 6 == qq % 6 && (nb % 6 == 2 || nb % 6 == 4));
    bool ok = nb >= qq && evens && branch;
    std::ostringstream os;
    os << "n=" << nb << " (mod 6: " << nb % 6 << "), q=" << qq
       << " (mod 6: " << qq % 6
       << "): need n >= q, both even, and 6|n or n = q = 2 or 4 (mod 6)";
    return std::pair{ok, os.str()};
  });
  shape_check("binary-q-t3-k4", t == 3 && k == 4, [&] {
    bool branch = (nb % 6 == 1 && qq % 2 == 0) ||
                  (nb % 12 == 3 && qq % 12 == 2) ||
                  (nb % 12 == 9 && qq % 6 == 2);
    bool ok = nb >= qq + 1 && branch;
    std::ostringstream os;
    os << "n=" << nb << ", q=" << qq
       << ": need n >= q+1 and (n=1 mod 6, q even) or (n=3 mod 12, q=2 mod 12)"
          " or (n=9 mod 12, q=2 mod 6)";
    return std::pair{ok, os.str()};
  });
  shape_check("binary-q-t1-general", t == 1, [&] {
    long long need = static_cast<long long>(k - 1) * (qq - 1);
    bool ok = nb >= need && (nb - need) % k == 0;
    std::ostringstream os;
    os << "n=" << nb << ", (k-1)(q-1)=" << need
       << ": need n >= (k-1)(q-1) and k | n-(k-1)(q-1)";
    return std::pair{ok, os.str()};
  });
  shape_check("binary-q-t2-general", t == 2 && k >= 2, [&] {
    long long need = static_cast<long long>(k - 2) * (qq - 1) + 1;
    bool ok = nb >= need && nb % (k - 1) == 0 && (qq - 2) % (k - 1) == 0 &&
              (nb * (nb + 2 * qq - 3)) %
                      (static_cast<long long>(k) * (k - 1)) ==
                  0;
    std::ostringstream os;
    os << "n=" << nb << ", q=" << qq << ": need n >= (k-2)(q-1)+1, k-1 | n, "
       << "q = 2 mod k-1, k(k-1) | n(n+2q-3)";
    return std::pair{ok, os.str()};
  });

  {
    ConditionCheck c;
    c.name = "length-lower-bound";
    long long qmax = sorted[n - 1] + 1;
    if (qmax > 2) {
      long long bound = (k - t) * qmax + 2 * t - k;
      c.status = n >= bound ? CheckStatus::Pass : CheckStatus::Fail;
      std::ostringstream os;
      os << "total length " << n << " vs (k-t)q + 2t - k = " << bound
         << (n == bound ? " (met with equality)" : "");
      c.detail = os.str();
    } else {
      c.status = CheckStatus::NotApplicable;
      c.detail = "all radices binary";
    }
    rep.checks.push_back(c);
  }

  return rep;
}

PtParameterResult pt_parameter_check(int n, int r) {
  PtParameterResult res;
  if (n < 2) res.reasons.push_back("n must be >= 2");
  if (n % 2 != 0) res.reasons.push_back("n must be even");
  if (r % 2 != 1) res.reasons.push_back("r must be odd");
  if (r < 1 || r > n - 1)
    res.reasons.push_back("need 1 <= r <= n-1");
  if (n >= 2 && (n % 6 == 2 || n % 6 == 4) && ((r - (n - 1)) % 6 + 6) % 6 != 0)
    res.reasons.push_back("n = 2 or 4 (mod 6) requires r = n-1 (mod 6); r = " +
                          std::to_string(r % 6) + " (mod 6)");
  if (n >= 2 && n % 2 == 0) {
    long long residual =
        static_cast<long long>(n) * (n - 1) / 2 - static_cast<long long>(r) * n / 2;
    if (residual % 3 != 0)
      res.reasons.push_back("residual pair count " + std::to_string(residual) +
                            " not divisible by 3");
  }
  res.ok = res.reasons.empty();
  return res;
}

LargeSetSizes large_set_sizes(const MixedAlphabet& q, int k) {
  const int n = q.length();
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  std::vector<long long> sorted;
  for (int qi : q.radices()) sorted.push_back(qi - 1);
  std::sort(sorted.begin(), sorted.end());

  LargeSetSizes out;
  std::vector<long long> head(sorted.begin(), sorted.end() - 1);
  auto a = esym_exact(head, k - 1);
  auto b = esym_exact(head, k);
  if (!a || !b) throw std::overflow_error("large-set sizes overflow");
  out.size_a = *a;

  long long head_sum = std::accumulate(head.begin(), head.end(), 0LL);
  long long denom = head_sum - sorted[n - 1] * (k - 1);
  if (denom <= 0) {
    out.no_single_system = true;
    out.equal = false;
    return out;
  }
  out.size_b = make_rational(k * *b, denom);
  out.equal = out.size_b == Rational{out.size_a, 1};
  return out;
}

ConditionReport perfect_code_divisibility(const MixedAlphabet& q, int e) {
  if (e < 1) throw std::invalid_argument("radius must be >= 1");
  const int n = q.length();
  ConditionReport rep;
  std::vector<long long> values;
  for (int qi : q.radices()) values.push_back(qi - 1);

  for (int t = 1; t <= e + 1; ++t) {
    int drop = e + 1 - t;
    if (drop >= n) continue;
    long long m = binomial(e + t, t);
    FamilyCase fc = check_drop_family(values, drop, t, m);
    ConditionCheck c;
    c.name = "perfect-divisibility-t" + std::to_string(t);
    c.status = fc.pass ? CheckStatus::Pass : CheckStatus::Fail;
    c.detail = fc.pass ? "subsets of size " + std::to_string(n - drop) +
                             ": all sums = 0 (mod " + std::to_string(m) + ")"
                       : fc.first_failure;
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace msd
