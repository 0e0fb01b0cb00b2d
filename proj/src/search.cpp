#include "msd/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "msd/conditions.hpp"
#include "msd/verify.hpp"

namespace msd {

namespace {

using Clock = std::chrono::steady_clock;

struct LimitState {
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline{};
  bool has_deadline = false;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  explicit LimitState(const SearchLimits& l) {
    max_nodes = l.max_nodes;
    if (l.timeout_seconds > 0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        l.timeout_seconds));
    }
  }

  // Returns false once the budget is exhausted. Wall clock is only polled
  // at node-count checkpoints.
  bool tick() {
    ++nodes;
    if (max_nodes && nodes > max_nodes) out_of_budget = true;
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline)
      out_of_budget = true;
    return !out_of_budget;
  }
};

// Knuth-style dancing links over a fixed candidate matrix.
class Dlx {
 public:
  Dlx(int nitems, const std::vector<std::vector<int>>& candidates)
      : n_(nitems) {
    llink_.resize(n_ + 1);
    rlink_.resize(n_ + 1);
    len_.assign(n_ + 1, 0);
    for (int i = 0; i <= n_; ++i) {
      llink_[i] = (i + n_) % (n_ + 1);
      rlink_[i] = (i + 1) % (n_ + 1);
    }
    // headers double as column list anchors
    int header_count = n_ + 1;
    top_.assign(header_count, 0);
    ulink_.resize(header_count);
    dlink_.resize(header_count);
    opt_of_.assign(header_count, -1);
    for (int i = 1; i <= n_; ++i) {
      ulink_[i] = i;
      dlink_[i] = i;
    }
    // first spacer
    append_node(0, -1);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (int item : candidates[c]) {
        int v = item + 1;  // items are 1-based internally
        int node = append_node(v, static_cast<int>(c));
        int u = ulink_[v];
        ulink_[node] = u;
        dlink_[node] = v;
        dlink_[u] = node;
        ulink_[v] = node;
        ++len_[v];
      }
      append_node(0, -1);  // trailing spacer
    }
    // fix spacer links: ulink = first node of preceding option,
    // dlink = last node of following option
    int last_spacer = -1;
    for (std::size_t x = n_ + 1; x < top_.size(); ++x) {
      if (top_[x] <= 0) {
        if (last_spacer >= 0) {
          ulink_[x] = last_spacer + 1;
          dlink_[last_spacer] = static_cast<int>(x) - 1;
        }
        last_spacer = static_cast<int>(x);
      }
    }
  }

  // item (0-based) -> least candidate index covering it, or -1
  int least_candidate(int item) const {
    int best = -1;
    for (int p = dlink_[item + 1]; p != item + 1; p = dlink_[p]) {
      int c = opt_of_[p];
      if (best < 0 || c < best) best = c;
    }
    return best;
  }

  bool item_active(int item) const {
    for (int i = rlink_[0]; i != 0; i = rlink_[i])
      if (i == item + 1) return true;
    return false;
  }

  struct SolveParams {
    bool lex_branching = false;
    bool count_all = false;
    const std::function<bool(int, const std::vector<int>&)>* row_filter =
        nullptr;
    LimitState* limits = nullptr;
  };

  struct SolveResult {
    bool found = false;
    bool complete = true;  // tree fully exhausted
    std::uint64_t solutions = 0;
    std::vector<int> witness;
  };

  SolveResult solve(const SolveParams& params) {
    SolveResult res;
    recurse(params, res);
    if (params.limits && params.limits->out_of_budget) res.complete = false;
    return res;
  }

  // Permanently commits a candidate (used before solve for forced rows).
  // Returns false if one of its items is already covered.
  bool commit(int candidate, const std::vector<std::vector<int>>& candidates) {
    for (int item : candidates[candidate])
      if (!item_active(item)) return false;
    for (int item : candidates[candidate]) cover(item + 1);
    chosen_.push_back(candidate);
    return true;
  }

 private:
  int append_node(int top, int opt) {
    top_.push_back(top);
    ulink_.push_back(0);
    dlink_.push_back(0);
    opt_of_.push_back(opt);
    return static_cast<int>(top_.size()) - 1;
  }

  void hide(int p) {
    int q = p + 1;
    while (q != p) {
      int x = top_[q];
      if (x <= 0) {
        q = ulink_[q];
      } else {
        int u = ulink_[q], d = dlink_[q];
        dlink_[u] = d;
        ulink_[d] = u;
        --len_[x];
        ++q;
      }
    }
  }

  void unhide(int p) {
    int q = p - 1;
    while (q != p) {
      int x = top_[q];
      if (x <= 0) {
        q = dlink_[q];
      } else {
        int u = ulink_[q], d = dlink_[q];
        dlink_[u] = q;
        ulink_[d] = q;
        ++len_[x];
        --q;
      }
    }
  }

  void cover(int i) {
    for (int p = dlink_[i]; p != i; p = dlink_[p]) hide(p);
    int l = llink_[i], r = rlink_[i];
    rlink_[l] = r;
    llink_[r] = l;
  }

  void uncover(int i) {
    int l = llink_[i], r = rlink_[i];
    rlink_[l] = i;
    llink_[r] = i;
    for (int p = ulink_[i]; p != i; p = ulink_[p]) unhide(p);
  }

  int choose(bool lex) const {
    if (lex) return rlink_[0];
    int best = 0, best_len = -1;
    for (int i = rlink_[0]; i != 0; i = rlink_[i])
      if (best_len < 0 || len_[i] < best_len) {
        best = i;
        best_len = len_[i];
        if (best_len == 0) break;
      }
    return best;
  }

  // returns true to keep searching, false to stop (budget or first witness)
  bool recurse(const SolveParams& params, SolveResult& res) {
    if (params.limits && !params.limits->tick()) return false;
    if (rlink_[0] == 0) {
      ++res.solutions;
      if (!res.found) {
        res.found = true;
        res.witness = chosen_;
        std::sort(res.witness.begin(), res.witness.end());
      }
      return params.count_all;
    }
    int i = choose(params.lex_branching);
    cover(i);
    bool keep = true;
    for (int p = dlink_[i]; keep && p != i; p = dlink_[p]) {
      int cand = opt_of_[p];
      if (params.row_filter && *params.row_filter &&
          !(*params.row_filter)(cand, chosen_))
        continue;
      chosen_.push_back(cand);
      for (int q = p + 1; q != p;) {
        int x = top_[q];
        if (x <= 0)
          q = ulink_[q];
        else {
          cover(x);
          ++q;
        }
      }
      keep = recurse(params, res);
      for (int q = p - 1; q != p;) {
        int x = top_[q];
        if (x <= 0)
          q = dlink_[q];
        else {
          uncover(x);
          --q;
        }
      }
      chosen_.pop_back();
    }
    uncover(i);
    return keep;
  }

  int n_;
  std::vector<int> llink_, rlink_, len_;
  std::vector<int> top_, ulink_, dlink_, opt_of_;
  std::vector<int> chosen_;
};

}  // namespace

ExactCoverOutcome exact_cover(int universe_size,
                              const std::vector<std::vector<int>>& candidates,
                              const ExactCoverOptions& options) {
  for (const auto& c : candidates) {
    if (c.empty()) throw std::invalid_argument("empty candidate");
    for (int item : c)
      if (item < 0 || item >= universe_size)
        throw std::invalid_argument("candidate item out of range");
  }

  ExactCoverOutcome out;
  LimitState limits(options.limits);
  Dlx dlx(universe_size, candidates);

  std::vector<int> forced;
  if (options.fix_first_item && universe_size > 0) {
    int c = dlx.least_candidate(0);
    if (c < 0) {
      out.status = SearchStatus::ExhaustedNonexistent;
      return out;
    }
    if (!dlx.commit(c, candidates))
      throw std::logic_error("forced candidate not committable");
    forced.push_back(c);
  }

  Dlx::SolveParams params;
  params.lex_branching = options.lex_branching;
  params.count_all = options.count_all;
  params.limits = &limits;
  if (options.row_filter) params.row_filter = &options.row_filter;

  Dlx::SolveResult res = dlx.solve(params);
  out.nodes_explored = limits.nodes;
  out.solutions = res.solutions;
  out.canonical = options.lex_branching && res.found;
  if (res.found) {
    out.status = SearchStatus::Found;
    out.witness = res.witness;
  } else if (res.complete) {
    out.status = SearchStatus::ExhaustedNonexistent;
  } else {
    out.status = SearchStatus::Timeout;
  }
  return out;
}

MsSearchOutcome search_ms(const MixedAlphabet& q, int t, int k, int d_min,
                          const SearchLimits& limits) {
  if (t < 1 || k < t || k > q.length())
    throw std::invalid_argument("need 1 <= t <= k <= n");
  long long universe = count_weight_words(q, t);
  if (universe > 100'000)
    throw std::invalid_argument("too many weight-t words for exhaustive search");

  std::vector<Block> words = enumerate_weight_words(q, t);
  std::unordered_map<Block, int, BlockHash> word_index;
  word_index.reserve(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i)
    word_index[words[i]] = static_cast<int>(i);

  std::vector<Block> blocks = enumerate_weight_words(q, k);
  std::vector<std::vector<int>> candidates(blocks.size());
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const auto& pts = blocks[c].points();
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      std::vector<Point> sub(t);
      for (int i = 0; i < t; ++i) sub[i] = pts[idx[i]];
      candidates[c].push_back(word_index.at(Block(std::move(sub))));
      int i = t - 1;
      while (i >= 0 && idx[i] == k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  ExactCoverOptions opt;
  opt.limits = limits;
  opt.lex_branching = true;
  if (d_min > 1)
    opt.row_filter = [&blocks, d_min](int cand, const std::vector<int>& chosen) {
      for (int other : chosen)
        if (hamming_distance(blocks[cand], blocks[other]) < d_min) return false;
      return true;
    };

  ExactCoverOutcome ec =
      exact_cover(static_cast<int>(words.size()), candidates, opt);

  MsSearchOutcome out;
  out.status = ec.status;
  out.nodes_explored = ec.nodes_explored;
  out.canonical = ec.canonical;
  if (ec.status == SearchStatus::Found) {
    std::vector<Block> chosen;
    for (int c : ec.witness) chosen.push_back(blocks[c]);
    DesignInstance design(q, t, k, std::move(chosen));
    VerificationReport rep = classify(design);
    bool distance_ok =
        !rep.min_distance || *rep.min_distance >= d_min;
    if (!rep.t_cover_ok || !distance_ok)
      throw std::logic_error("search witness failed re-verification");
    out.witness = std::move(design);
  }
  return out;
}

namespace {

struct PtSearchContext {
  int n;
  int r;
  LimitState limits;
  std::vector<std::vector<int>> pair_used;  // n x n upper-triangular flags
  std::vector<OneFactor> factors;
  std::vector<Triple> all_triples;
  std::optional<PairsTriplesDesign> witness;

  PtSearchContext(int n_, int r_, const SearchLimits& l)
      : n(n_), r(r_), limits(l), pair_used(n_, std::vector<int>(n_, 0)) {
    factors.reserve(r);  // recursion keeps pointers into this vector
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          all_triples.push_back(Triple{a, b, c});
  }

  bool used(int a, int b) const {
    return pair_used[std::min(a, b)][std::max(a, b)] != 0;
  }
  void set_used(int a, int b, int v) {
    pair_used[std::min(a, b)][std::max(a, b)] = v;
  }

  // Covers the residual pairs with triples; true when a partition exists.
  bool cover_residual() {
    std::vector<Pair> residual;
    std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!used(a, b)) {
          id[a][b] = static_cast<int>(residual.size());
          residual.push_back(Pair{a, b});
        }
    if (residual.size() % 3 != 0) return false;
    std::vector<std::vector<int>> cands;
    std::vector<Triple> cand_triples;
    for (const Triple& t : all_triples) {
      int ab = id[t[0]][t[1]], ac = id[t[0]][t[2]], bc = id[t[1]][t[2]];
      if (ab >= 0 && ac >= 0 && bc >= 0) {
        cands.push_back({ab, ac, bc});
        cand_triples.push_back(t);
      }
    }
    ExactCoverOptions opt;
    opt.lex_branching = true;
    if (limits.max_nodes)
      opt.limits.max_nodes =
          limits.max_nodes > limits.nodes ? limits.max_nodes - limits.nodes : 1;
    if (limits.has_deadline) {
      double rem = std::chrono::duration<double>(limits.deadline - Clock::now())
                       .count();
      opt.limits.timeout_seconds = std::max(rem, 1e-9);
    }
    ExactCoverOutcome ec =
        exact_cover(static_cast<int>(residual.size()), cands, opt);
    limits.nodes += ec.nodes_explored;
    if (ec.status == SearchStatus::Timeout) limits.out_of_budget = true;
    if (ec.status != SearchStatus::Found) return false;
    PairsTriplesDesign d;
    d.n = n;
    d.factors = factors;
    for (int c : ec.witness) d.triples.push_back(cand_triples[c]);
    std::sort(d.triples.begin(), d.triples.end());
    witness = std::move(d);
    return true;
  }

  // Extends the current factor by matching the lowest unmatched vertex.
  // `tight` enforces lexicographic order against the previous factor.
  bool extend_factor(OneFactor& current, std::vector<int>& matched,
                     const OneFactor* prev, bool tight) {
    if (!limits.tick()) return false;
    int v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      // factor complete
      if (tight) return false;  // equal to previous factor: not allowed
      factors.push_back(current);
      bool ok = search_factor(static_cast<int>(factors.size()));
      if (!ok) factors.pop_back();
      return ok;
    }
    std::size_t slot = current.size();
    int lower = 0;
    if (tight && prev) {
      const Pair& pp = (*prev)[slot];
      if (pp[0] != v) {
        // previous factor pairs a different low vertex; order decided
        if (pp[0] < v) tight = false;  // current is already greater
        else
          return false;  // current would be smaller, prune
      }
      if (tight) lower = pp[1];
    }
    for (int u = std::max(v + 1, lower); u < n; ++u) {
      if (matched[u] || used(v, u)) continue;
      bool still_tight = tight && prev && u == (*prev)[slot][1];
      if (tight && prev && u < (*prev)[slot][1]) continue;
      matched[v] = matched[u] = 1;
      set_used(v, u, 2);
      current.push_back(Pair{v, u});
      bool found = extend_factor(current, matched, prev, still_tight);
      current.pop_back();
      set_used(v, u, 0);
      matched[v] = matched[u] = 0;
      if (found || limits.out_of_budget) return found;
    }
    return false;
  }

  bool search_factor(int depth) {
    if (limits.out_of_budget) return false;
    if (depth == r) return cover_residual();
    OneFactor current;
    std::vector<int> matched(n, 0);
    const OneFactor* prev = depth > 0 ? &factors[depth - 1] : nullptr;
    return extend_factor(current, matched, prev, prev != nullptr);
  }
};

}  // namespace

PtSearchOutcome search_pt(int n, int r, const SearchLimits& limits) {
  PtSearchOutcome out;
  PtParameterResult pc = pt_parameter_check(n, r);
  if (!pc.ok) {
    out.status = SearchStatus::ExhaustedNonexistent;
    out.reason = "parameter check: " + pc.reasons.front();
    return out;
  }
  if (n > 14)
    throw std::invalid_argument("exhaustive mode supports n <= 14");

  PtSearchContext ctx(n, r, limits);
  bool found = ctx.search_factor(0);
  out.nodes_explored = ctx.limits.nodes;
  if (found && ctx.witness) {
    PtReport rep = verify_pt(*ctx.witness);
    if (!rep.ok) throw std::logic_error("search witness failed verify_pt");
    if (rep.definition_excluded) out.reason = "r = n-1 (definition-excluded)";
    out.status = SearchStatus::Found;
    out.witness = std::move(ctx.witness);
  } else if (ctx.limits.out_of_budget) {
    out.status = SearchStatus::Timeout;
  } else {
    out.status = SearchStatus::ExhaustedNonexistent;
  }
  return out;
}

}  // namespace msd
