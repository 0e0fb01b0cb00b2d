#include "msd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace msd {

namespace {

// All weight-t sub-blocks of a block (combinations of its points).
template <typename Fn>
void for_each_subblock(const Block& b, int t, Fn&& fn) {
  const auto& pts = b.points();
  int w = b.weight();
  if (t > w) return;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> sub(t);
    for (int i = 0; i < t; ++i) sub[i] = pts[idx[i]];
    fn(Block(std::move(sub)));
    int i = t - 1;
    while (i >= 0 && idx[i] == w - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int min_block_weight(const DesignInstance& d) {
  int mw = INT_MAX;
  for (const Block& b : d.blocks()) mw = std::min(mw, b.weight());
  return mw;
}

}  // namespace

CoverageReport coverage(const DesignInstance& design, int t, int sample_cap) {
  if (design.blocks().empty())
    throw std::invalid_argument("coverage of an empty design");
  if (t < 1 || t > min_block_weight(design))
    throw std::invalid_argument("t must satisfy 1 <= t <= min block weight");

  CoverageReport rep;
  rep.t = t;
  rep.total_words = count_weight_words(design.alphabet(), t);

  std::unordered_map<Block, long long, BlockHash> counts;
  counts.reserve(design.blocks().size() * 4);
  for (const Block& b : design.blocks())
    for_each_subblock(b, t, [&](Block sub) { ++counts[std::move(sub)]; });

  for (const auto& [word, c] : counts) {
    ++rep.histogram[c];
    if (c == 1)
      ++rep.covered_once;
    else
      ++rep.multi_count;
  }
  rep.uncovered_count = rep.total_words - static_cast<long long>(counts.size());
  if (rep.uncovered_count > 0) rep.histogram[0] = rep.uncovered_count;

  if (rep.multi_count > 0) {
    for (const auto& [word, c] : counts)
      if (c > 1) rep.multiply_covered.emplace_back(word, c);
    std::sort(rep.multiply_covered.begin(), rep.multiply_covered.end());
    if (static_cast<int>(rep.multiply_covered.size()) > sample_cap)
      rep.multiply_covered.resize(sample_cap);
  }
  if (rep.uncovered_count > 0) {
    WeightWordStream stream(design.alphabet(), t);
    Block w;
    while (static_cast<int>(rep.uncovered.size()) < sample_cap &&
           stream.next(w))
      if (!counts.count(w)) rep.uncovered.push_back(w);
  }
  return rep;
}

std::optional<int> min_distance(const DesignInstance& design) {
  const auto& blocks = design.blocks();
  if (blocks.size() < 2) return std::nullopt;
  int best = INT_MAX;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      // merge scan with early exit once the current best is reached
      const auto& pa = blocks[i].points();
      const auto& pb = blocks[j].points();
      std::size_t a = 0, b = 0;
      int d = 0;
      while ((a < pa.size() || b < pb.size()) && d < best) {
        if (a == pa.size())
          ++d, ++b;
        else if (b == pb.size())
          ++d, ++a;
        else if (pa[a].coord < pb[b].coord)
          ++d, ++a;
        else if (pa[a].coord > pb[b].coord)
          ++d, ++b;
        else {
          if (pa[a].symbol != pb[b].symbol) ++d;
          ++a, ++b;
        }
      }
      if (d < best) best = d;
    }
  }
  return best;
}

std::string VerificationReport::describe(const MixedAlphabet& q) const {
  std::ostringstream os;
  switch (classification) {
    case DesignClass::MS:
      os << "MS(" << t << "," << k << ", " << q.describe() << ")";
      break;
    case DesignClass::MSd:
      os << "MS_" << d << "(" << t << "," << k << ", " << q.describe() << ")";
      break;
    case DesignClass::PairwiseBalancedCover: {
      os << "PairwiseBalancedCover(t=" << t << ", weights {";
      bool first = true;
      for (const auto& [w, c] : block_size_multiset) {
        if (!first) os << ",";
        first = false;
        os << w;
      }
      os << "}, " << q.describe() << ")";
      break;
    }
    case DesignClass::Invalid:
      os << "Invalid(t=" << t << ",k=" << k << ", " << q.describe() << ")";
      break;
  }
  if (min_distance)
    os << ", d=" << *min_distance;
  else
    os << ", d=undefined";
  os << ", " << block_count << " blocks";
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

VerificationReport classify(const DesignInstance& design) {
  if (design.blocks().empty())
    throw std::invalid_argument("classify of an empty design");

  VerificationReport rep;
  rep.t = design.t();
  rep.k = design.k();
  rep.block_count = static_cast<long long>(design.blocks().size());
  for (const Block& b : design.blocks()) ++rep.block_size_multiset[b.weight()];

  const bool uniform = rep.block_size_multiset.size() == 1 &&
                       rep.block_size_multiset.begin()->first == rep.k;

  if (rep.t > min_block_weight(design)) {
    rep.classification = DesignClass::Invalid;
    rep.note = "declared t exceeds minimum block weight";
    rep.min_distance = min_distance(design);
    return rep;
  }

  rep.cov = coverage(design, rep.t);
  rep.t_cover_ok = rep.cov.exact_once();
  rep.multiplicity_histogram = rep.cov.histogram;
  rep.min_distance = min_distance(design);

  const int ms_bound = 2 * (rep.k - rep.t) + 1;
  if (!rep.t_cover_ok) {
    rep.classification = DesignClass::Invalid;
  } else if (!uniform) {
    rep.classification = DesignClass::PairwiseBalancedCover;
  } else if (!rep.min_distance || *rep.min_distance >= ms_bound) {
    rep.classification = DesignClass::MS;
    rep.meets_even_bound = rep.min_distance && *rep.min_distance >= ms_bound + 1;
    if (rep.meets_even_bound) rep.note = "distance meets the even bound too";
  } else {
    rep.classification = DesignClass::MSd;
    rep.d = *rep.min_distance;
  }
  return rep;
}

PtReport verify_pt(const PairsTriplesDesign& d) {
  PtReport rep;
  const int n = d.n;
  auto fail = [&](const std::string& msg) {
    if (static_cast<int>(rep.violations.size()) < kViolationSampleCap)
      rep.violations.push_back(msg);
  };

  if (n < 2) fail("n must be >= 2");
  const int r = d.r();
  if (r < 1) fail("needs at least one factor");
  if (r > n - 1) fail("more factors than a one-factorization allows");
  rep.definition_excluded = (r == n - 1);

  auto in_range = [&](int v) { return v >= 0 && v < n; };

  // factor structure
  for (int i = 0; i < r; ++i) {
    std::vector<int> seen(n, 0);
    for (const Pair& p : d.factors[i]) {
      if (!in_range(p[0]) || !in_range(p[1]) || p[0] == p[1]) {
        fail("factor " + std::to_string(i) + ": bad pair");
        continue;
      }
      ++seen[p[0]];
      ++seen[p[1]];
    }
    for (int v = 0; v < n; ++v) {
      if (seen[v] == 0)
        fail("factor " + std::to_string(i) + ": vertex " + std::to_string(v) +
             " unmatched");
      else if (seen[v] > 1)
        fail("factor " + std::to_string(i) + ": vertex " + std::to_string(v) +
             " matched " + std::to_string(seen[v]) + " times");
    }
  }

  // triples are 3-subsets
  for (const Triple& t : d.triples) {
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2]) ||
        t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      fail("triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
           "," + std::to_string(t[2]) + "} is not a 3-subset");
  }

  // every pair of Z_n exactly once across factors and triple pairs
  if (rep.violations.empty()) {
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    auto bump = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      ++count[static_cast<std::size_t>(a) * n + b];
    };
    for (const auto& f : d.factors)
      for (const Pair& p : f) bump(p[0], p[1]);
    for (const Triple& t : d.triples) {
      bump(t[0], t[1]);
      bump(t[0], t[2]);
      bump(t[1], t[2]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int c = count[static_cast<std::size_t>(a) * n + b];
        if (c != 1)
          fail("pair {" + std::to_string(a) + "," + std::to_string(b) +
               "} covered " + std::to_string(c) + " times");
      }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

bool verify_oa(const OrthogonalArray& oa) {
  const int k = oa.k, n = oa.n;
  if (k < 2 || n < 2) throw std::invalid_argument("OA needs k >= 2, n >= 2");
  if (static_cast<long long>(oa.rows.size()) !=
      static_cast<long long>(k) * k)
    throw std::invalid_argument("OA must have k^2 rows");
  for (const auto& row : oa.rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("OA row of wrong length");
    for (int v : row)
      if (v < 0 || v >= k)
        throw std::invalid_argument("OA entry out of range");
  }
  std::vector<int> seen(static_cast<std::size_t>(k) * k);
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      std::fill(seen.begin(), seen.end(), 0);
      for (const auto& row : oa.rows)
        ++seen[static_cast<std::size_t>(row[c1]) * k + row[c2]];
      for (int v : seen)
        if (v != 1) return false;
    }
  return true;
}

namespace {

constexpr long long kMaxSweepSpace = 10'000'000;

// Enumerates indices of all words at distance <= e from `word`,
// tallying into `tally` (saturating).
void tally_ball(const MixedAlphabet& q, std::vector<int>& word,
                const std::vector<long long>& stride, long long idx, int e,
                int from_coord, std::vector<std::atomic<uint8_t>>& tally) {
  auto& cell = tally[idx];
  uint8_t old = cell.load(std::memory_order_relaxed);
  while (old < 255 &&
         !cell.compare_exchange_weak(old, old + 1, std::memory_order_relaxed))
    ;
  if (e == 0) return;
  for (int c = from_coord; c < q.length(); ++c) {
    int orig = word[c];
    for (int s = 0; s < q.radix(c + 1); ++s) {
      if (s == orig) continue;
      word[c] = s;
      tally_ball(q, word, stride, idx + (s - orig) * stride[c], e - 1, c + 1,
                 tally);
    }
    word[c] = orig;
  }
}

}  // namespace

PerfectSweepReport verify_perfect(const MixedAlphabet& q,
                                  const std::vector<Block>& codewords, int e,
                                  int jobs) {
  if (e < 1) throw std::invalid_argument("radius must be >= 1");
  PerfectSweepReport rep;
  rep.codeword_count = static_cast<long long>(codewords.size());

  long long space = 1;
  for (int qi : q.radices()) {
    if (space > kMaxSweepSpace / qi + 1)
      throw std::invalid_argument(
          "space too large for the exact full-space sweep");
    space *= qi;
  }
  if (space > kMaxSweepSpace)
    throw std::invalid_argument(
        "space too large for the exact full-space sweep");
  rep.space_size = space;
  for (int s = 0; s <= e; ++s) rep.ball_size += count_weight_words(q, s);

  std::vector<long long> stride(q.length());
  long long acc = 1;
  for (int c = 0; c < q.length(); ++c) {
    stride[c] = acc;
    acc *= q.radix(c + 1);
  }

  std::vector<std::atomic<uint8_t>> tally(space);
  for (auto& t : tally) t.store(0, std::memory_order_relaxed);

  auto sweep_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<int> word(q.length());
    for (std::size_t ci = lo; ci < hi; ++ci) {
      const Block& cw = codewords[ci];
      validate_block(q, cw);
      std::fill(word.begin(), word.end(), 0);
      long long idx = 0;
      for (const Point& p : cw.points()) {
        word[p.coord - 1] = p.symbol;
        idx += p.symbol * stride[p.coord - 1];
      }
      tally_ball(q, word, stride, idx, e, 0, tally);
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1 || codewords.size() < 2) {
    sweep_range(0, codewords.size());
  } else {
    std::vector<std::thread> workers;
    std::size_t per = (codewords.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t lo = std::min(codewords.size(), j * per);
      std::size_t hi = std::min(codewords.size(), (j + 1) * per);
      if (lo < hi) workers.emplace_back(sweep_range, lo, hi);
    }
    for (auto& w : workers) w.join();
  }

  for (long long i = 0; i < space; ++i) {
    uint8_t c = tally[i].load(std::memory_order_relaxed);
    if (c == 0)
      ++rep.uncovered;
    else if (c > 1)
      ++rep.multi;
  }
  rep.ok = rep.uncovered == 0 && rep.multi == 0;
  return rep;
}

bool verify_steiner(const std::vector<std::vector<int>>& blocks, int t, int k,
                    int n) {
  if (t < 1 || k < t || n < k) return false;
  std::map<std::vector<int>, int> counts;
  for (const auto& raw : blocks) {
    std::vector<int> b = raw;
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != k) return false;
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
    if (b.front() < 0 || b.back() >= n) return false;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      std::vector<int> sub(t);
      for (int i = 0; i < t; ++i) sub[i] = b[idx[i]];
      ++counts[sub];
      int i = t - 1;
      while (i >= 0 && idx[i] == k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  long long expected = 1;
  for (int i = 0; i < t; ++i) expected = expected * (n - i) / (i + 1);
  if (static_cast<long long>(counts.size()) != expected) return false;
  for (const auto& [sub, c] : counts)
    if (c != 1) return false;
  return true;
}

}  // namespace msd
