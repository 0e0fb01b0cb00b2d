#include "msd/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "msd/conditions.hpp"

namespace msd {

DesignInstance trivial_kk(const MixedAlphabet& q, int k) {
  if (k < 1 || k > q.length())
    throw std::invalid_argument("need 1 <= k <= n");
  return DesignInstance(q, k, k, enumerate_weight_words(q, k));
}

namespace {

// Explicit two-family construction for Q = Z2^nb x Zq: each nonzero symbol
// of Zq paired with k-1 fresh binary coordinates, leftover binary
// coordinates partitioned into k-sets. `binary` and `big` are original
// 1-based coordinate indices.
std::vector<Block> ms1k_binary_shape(const std::vector<int>& binary, int big,
                                     int qbig, int k) {
  std::vector<Block> blocks;
  std::size_t next = 0;
  for (int s = 1; s < qbig; ++s) {
    std::vector<Point> pts;
    for (int j = 0; j < k - 1; ++j) pts.push_back({binary[next++], 1});
    pts.push_back({big, s});
    blocks.emplace_back(std::move(pts));
  }
  while (next < binary.size()) {
    std::vector<Point> pts;
    for (int j = 0; j < k; ++j) pts.push_back({binary[next++], 1});
    blocks.emplace_back(std::move(pts));
  }
  return blocks;
}

}  // namespace

ClassifiedDesign ms1k(const MixedAlphabet& q, int k) {
  const int n = q.length();
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  {
    ConditionReport rep = necessary_report(q, 1, k);
    const ConditionCheck* c = rep.find("largest-alphabet-balance");
    if (c && c->status == CheckStatus::Fail)
      throw std::invalid_argument("balance condition fails: " + c->detail);
  }

  std::vector<Block> blocks;
  std::vector<int> binary;
  int big = 0;
  for (int i = 1; i <= n; ++i) {
    if (q.radix(i) == 2)
      binary.push_back(i);
    else if (big == 0)
      big = i;
    else
      big = -1;  // more than one non-binary coordinate
  }
  if (big > 0 && static_cast<int>(binary.size()) == n - 1) {
    blocks = ms1k_binary_shape(binary, big, q.radix(big), k);
  } else {
    // induction step realized greedily: pair the next unused symbols of the
    // k currently largest alphabets (ties to the highest coordinate index)
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = q.radix(i + 1) - 1;
    long long left = std::accumulate(remaining.begin(), remaining.end(), 0LL);
    while (left > 0) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (remaining[a] != remaining[b]) return remaining[a] > remaining[b];
        return a > b;
      });
      std::vector<Point> pts;
      for (int j = 0; j < k; ++j) {
        int c = order[j];
        if (remaining[c] == 0)
          throw std::logic_error("induction ran out of symbols");
        int symbol = q.radix(c + 1) - remaining[c];
        pts.push_back({c + 1, symbol});
        --remaining[c];
        --left;
      }
      blocks.emplace_back(std::move(pts));
    }
  }

  DesignInstance design(q, 1, k, std::move(blocks));
  VerificationReport report = classify(design);
  if (!report.t_cover_ok)
    throw std::logic_error("weight-1 construction failed its own coverage");
  return ClassifiedDesign{std::move(design), std::move(report)};
}

DesignInstance derived(const DesignInstance& design, int coordinate,
                       int symbol) {
  const MixedAlphabet& q = design.alphabet();
  if (coordinate < 1 || coordinate > q.length())
    throw std::invalid_argument("coordinate out of range");
  if (symbol < 1 || symbol >= q.radix(coordinate))
    throw std::invalid_argument("symbol out of range");
  if (design.t() < 2)
    throw std::invalid_argument("derived design needs t >= 2");

  const Point fixed{coordinate, symbol};
  std::vector<Block> blocks;
  for (const Block& b : design.blocks()) {
    if (!b.contains(fixed)) continue;
    std::vector<Point> pts;
    for (const Point& p : b.points()) {
      if (p.coord == coordinate) continue;
      pts.push_back({p.coord > coordinate ? p.coord - 1 : p.coord, p.symbol});
    }
    blocks.emplace_back(std::move(pts));
  }
  if (blocks.empty())
    throw std::invalid_argument("no block contains the point (" +
                                std::to_string(coordinate) + "," +
                                std::to_string(symbol) + ")");
  std::vector<int> radices = q.radices();
  radices.erase(radices.begin() + (coordinate - 1));
  return DesignInstance(MixedAlphabet(std::move(radices)), design.t() - 1,
                        design.k() - 1, std::move(blocks));
}

DesignInstance from_resolution(
    const SteinerSystem& s,
    const std::vector<std::vector<std::vector<int>>>& classes) {
  if (!verify_steiner(s.blocks, s.t, s.k, s.n))
    throw std::invalid_argument("ingredient is not an S(t,k,n)");
  std::set<std::vector<int>> all;
  for (const auto& raw : s.blocks) {
    std::vector<int> b = raw;
    std::sort(b.begin(), b.end());
    all.insert(std::move(b));
  }
  std::set<std::vector<int>> used;
  for (const auto& cls : classes) {
    if (!verify_steiner(cls, s.t - 1, s.k, s.n))
      throw std::invalid_argument("class is not an S(t-1,k,n)");
    for (const auto& raw : cls) {
      std::vector<int> b = raw;
      std::sort(b.begin(), b.end());
      if (!all.count(b))
        throw std::invalid_argument("class block outside the system");
      if (!used.insert(b).second)
        throw std::invalid_argument("block in two classes");
    }
  }
  if (used.size() != all.size())
    throw std::invalid_argument("classes do not partition the system");

  const int n = s.n;
  const int r = static_cast<int>(classes.size());
  std::vector<int> radices(n, 2);
  radices.push_back(r + 1);
  std::vector<Block> blocks;
  for (int j = 0; j < r; ++j)
    for (const auto& raw : classes[j]) {
      std::vector<Point> pts;
      for (int x : raw) pts.push_back({x + 1, 1});
      pts.push_back({n + 1, j + 1});
      blocks.emplace_back(std::move(pts));
    }
  return DesignInstance(MixedAlphabet(std::move(radices)), s.t, s.k + 1,
                        std::move(blocks));
}

DesignInstance from_oa(const OrthogonalArray& oa, int r) {
  const int k = oa.k, n = oa.n;
  if (r < 1 || r > n - 1) throw std::invalid_argument("need 1 <= r <= n-1");
  if (!verify_oa(oa)) throw std::invalid_argument("array is not an OA(2,n,k)");

  std::vector<int> radices(static_cast<std::size_t>(r) * k, 2);
  for (int c = 0; c < n - r; ++c) radices.push_back(k + 1);

  std::vector<Block> blocks;
  for (int i = 0; i < r; ++i) {
    std::vector<Point> pts;
    for (int j = 1; j <= k; ++j) pts.push_back({i * k + j, 1});
    blocks.emplace_back(std::move(pts));
  }
  for (const auto& row : oa.rows) {
    std::vector<Point> pts;
    for (int c = 0; c < r; ++c) pts.push_back({c * k + row[c] + 1, 1});
    for (int c = r; c < n; ++c)
      pts.push_back({r * k + (c - r) + 1, row[c] + 1});
    blocks.emplace_back(std::move(pts));
  }
  return DesignInstance(MixedAlphabet(std::move(radices)), 2, k,
                        std::move(blocks));
}

namespace {

constexpr long long kMaxEnumeration = 10'000'000;

MixedAlphabet partition_alphabet(const GroupPartition& p) {
  std::vector<int> radices;
  for (const auto& part : p.parts)
    radices.push_back(static_cast<int>(part.size()));
  return MixedAlphabet(std::move(radices));
}

}  // namespace

PerfectCode perfect_from_partition(const GroupPartition& partition, bool lazy) {
  validate_partition(partition);
  PerfectCode code{partition_alphabet(partition), {}, 1, partition};

  long long assignments = 1;
  for (const auto& part : partition.parts) {
    assignments *= static_cast<long long>(part.size());
    if (assignments > kMaxEnumeration) break;
  }
  if (assignments > kMaxEnumeration) {
    if (lazy) return code;
    throw std::invalid_argument(
        "too many assignments to enumerate; use the lazy mode");
  }

  const int n = static_cast<int>(partition.parts.size());
  std::vector<Point> current;
  auto rec = [&](auto&& self, int coord, long long sum) -> void {
    if (coord == n) {
      if (sum == 0) code.codewords.emplace_back(current);
      return;
    }
    const auto& part = partition.parts[coord];
    self(self, coord + 1, sum);  // symbol 0
    for (std::size_t s = 1; s < part.size(); ++s) {
      current.push_back({coord + 1, static_cast<int>(s)});
      self(self, coord + 1, partition.group.add(sum, part[s]));
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(code.codewords.begin(), code.codewords.end());
  return code;
}

PerfectSweepReport verify_perfect_code(const PerfectCode& code, int jobs) {
  if (code.lazy())
    throw std::invalid_argument("cannot sweep a lazy code; enumerate first");
  return verify_perfect(code.alphabet, code.codewords, code.radius, jobs);
}

DesignInstance weight_shell(const PerfectCode& code) {
  const int e = code.radius;
  const int w = 2 * e + 1;

  if (!code.lazy()) {
    bool has_zero = false;
    for (const Block& b : code.codewords)
      if (b.weight() == 0) has_zero = true;
    if (!has_zero)
      throw std::invalid_argument("code does not contain the all-zero word");
    std::vector<Block> shell;
    for (const Block& b : code.codewords)
      if (b.weight() == w) shell.push_back(b);
    return DesignInstance(code.alphabet, e + 1, w, std::move(shell));
  }

  if (!code.source || e != 1)
    throw std::invalid_argument("lazy shell extraction needs a radius-1 partition code");
  // zero-sum triples across three distinct parts; the zero assignment is a
  // codeword of every partition code, so the precondition holds
  const GroupPartition& p = *code.source;
  const int n = static_cast<int>(p.parts.size());
  std::map<long long, std::pair<int, int>> where;  // element -> (part, symbol)
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 1; s < p.parts[i].size(); ++s)
      where[p.parts[i][s]] = {i, static_cast<int>(s)};

  std::vector<Block> shell;
  for (const auto& [a, pa] : where)
    for (const auto& [b, pb] : where) {
      if (b <= a || pb.first == pa.first) continue;
      long long c = p.group.neg(p.group.add(a, b));
      if (c <= b) continue;
      auto it = where.find(c);
      if (it == where.end()) continue;
      const auto& pc = it->second;
      if (pc.first == pa.first || pc.first == pb.first) continue;
      shell.push_back(Block{{pa.first + 1, pa.second},
                            {pb.first + 1, pb.second},
                            {pc.first + 1, pc.second}});
    }
  return DesignInstance(code.alphabet, e + 1, w, std::move(shell));
}

DesignInstance from_rt(int n, const std::vector<std::vector<int>>& r_sets,
                       const std::vector<std::vector<std::vector<int>>>& t_systems,
                       int t, int k) {
  if (t < 2 || k <= t) throw std::invalid_argument("need 2 <= t < k");
  const int r = static_cast<int>(t_systems.size());
  if (r < 1) throw std::invalid_argument("need at least one system");

  std::vector<std::string> problems;
  auto complain = [&](const std::string& s) {
    if (problems.size() < 16) problems.push_back(s);
  };

  std::set<std::vector<int>> t_blocks_seen;
  for (int i = 0; i < r; ++i) {
    if (!verify_steiner(t_systems[i], t - 1, k - 1, n))
      complain("system " + std::to_string(i + 1) + " is not an S(t-1,k-1,n)");
    for (const auto& raw : t_systems[i]) {
      std::vector<int> b = raw;
      std::sort(b.begin(), b.end());
      if (!t_blocks_seen.insert(b).second)
        complain("systems share a block");
    }
  }

  // every t-subset of Z_n: in exactly one R k-set or one system block
  std::map<std::vector<int>, int> cover;
  auto bump_subsets = [&](const std::vector<int>& raw, int size) {
    std::vector<int> b = raw;
    std::sort(b.begin(), b.end());
    const int bs = static_cast<int>(b.size());
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<int> sub(size);
      for (int i = 0; i < size; ++i) sub[i] = b[idx[i]];
      ++cover[sub];
      int i = size - 1;
      while (i >= 0 && idx[i] == bs - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  for (const auto& b : r_sets) {
    if (static_cast<int>(b.size()) != k) complain("R contains a non-k-subset");
    bump_subsets(b, t);
  }
  for (const auto& sys : t_systems)
    for (const auto& b : sys) bump_subsets(b, t);

  {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      std::vector<int> sub(t);
      for (int i = 0; i < t; ++i) sub[i] = idx[i];
      auto it = cover.find(sub);
      int c = it == cover.end() ? 0 : it->second;
      if (c != 1) {
        std::ostringstream os;
        os << "t-subset {";
        for (int i = 0; i < t; ++i) os << (i ? "," : "") << sub[i];
        os << "} covered " << c << " times";
        complain(os.str());
      }
      int i = t - 1;
      while (i >= 0 && idx[i] == n - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  if (!problems.empty()) {
    std::ostringstream os;
    os << "combiner preconditions fail:";
    for (const auto& p : problems) os << " " << p << ";";
    throw std::invalid_argument(os.str());
  }

  std::vector<int> radices(n, 2);
  radices.push_back(r + 1);
  std::vector<Block> blocks;
  for (const auto& raw : r_sets) {
    std::vector<Point> pts;
    for (int x : raw) pts.push_back({x + 1, 1});
    blocks.emplace_back(std::move(pts));
  }
  for (int i = 0; i < r; ++i)
    for (const auto& raw : t_systems[i]) {
      std::vector<Point> pts;
      for (int x : raw) pts.push_back({x + 1, 1});
      pts.push_back({n + 1, i + 1});
      blocks.emplace_back(std::move(pts));
    }
  return DesignInstance(MixedAlphabet(std::move(radices)), t, k,
                        std::move(blocks));
}

DesignInstance from_rt(const PairsTriplesDesign& d) {
  std::vector<std::vector<int>> r_sets;
  for (const Triple& t : d.triples) r_sets.push_back({t[0], t[1], t[2]});
  std::vector<std::vector<std::vector<int>>> systems;
  for (const OneFactor& f : d.factors) {
    std::vector<std::vector<int>> sys;
    for (const Pair& p : f) sys.push_back({p[0], p[1]});
    systems.push_back(std::move(sys));
  }
  return from_rt(d.n, r_sets, systems, 2, 3);
}

DesignInstance ms_from_one_factorization(int n) {
  std::vector<OneFactor> factors = one_factorization(n);
  SteinerSystem pairs;
  pairs.n = n;
  pairs.t = 2;
  pairs.k = 2;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.blocks.push_back({a, b});
  std::vector<std::vector<std::vector<int>>> classes;
  for (const OneFactor& f : factors) {
    std::vector<std::vector<int>> cls;
    for (const Pair& p : f) cls.push_back({p[0], p[1]});
    classes.push_back(std::move(cls));
  }
  return from_resolution(pairs, classes);
}

DesignInstance ms_from_affine(int q) {
  ResolvedSteinerSystem r = affine_resolution(q);
  return from_resolution(r.system, r.classes);
}

DesignInstance ms_from_large_set_sts9() {
  ResolvedSteinerSystem r = large_set_sts9();
  return from_resolution(r.system, r.classes);
}

DesignInstance ms_from_kirkman_sts15() {
  ResolvedSteinerSystem r = kirkman_sts15();
  return from_resolution(r.system, r.classes);
}

}  // namespace msd
