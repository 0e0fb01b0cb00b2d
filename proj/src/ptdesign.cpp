#include "msd/ptdesign.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "msd/conditions.hpp"
#include "msd/verify.hpp"

namespace msd {

namespace {

Pair mk(int a, int b) {
  if (a > b) std::swap(a, b);
  return Pair{a, b};
}

Triple mk3(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

void canonicalize(PairsTriplesDesign& d) {
  for (auto& f : d.factors) std::sort(f.begin(), f.end());
  std::sort(d.triples.begin(), d.triples.end());
}

PairsTriplesDesign checked(PairsTriplesDesign d, const char* what) {
  canonicalize(d);
  PtReport rep = verify_pt(d);
  if (!rep.ok) {
    std::ostringstream os;
    os << what << " produced an invalid pairs-triples design:";
    for (const auto& v : rep.violations) os << " " << v << ";";
    throw std::logic_error(os.str());
  }
  return d;
}

}  // namespace

PairsTriplesDesign pt_base_catalog(int n, int r) {
  PairsTriplesDesign d;
  d.n = n;
  if (n == 6 && r == 3) {
    d.triples = {mk3(0, 1, 2), mk3(3, 4, 5)};
    d.factors = {{mk(0, 3), mk(1, 4), mk(2, 5)},
                 {mk(0, 4), mk(1, 5), mk(2, 3)},
                 {mk(0, 5), mk(1, 3), mk(2, 4)}};
  } else if (n == 10 && r == 3) {
    for (int i = 0; i < 10; ++i)
      d.triples.push_back(mk3(i, (i + 1) % 10, (i + 3) % 10));
    d.factors = {{mk(0, 5), mk(1, 7), mk(2, 6), mk(3, 9), mk(4, 8)},
                 {mk(0, 6), mk(1, 5), mk(2, 8), mk(3, 7), mk(4, 9)},
                 {mk(0, 4), mk(1, 6), mk(2, 7), mk(3, 8), mk(5, 9)}};
  } else if (n == 12 && r == 3) {
    for (int i = 0; i < 12; ++i)
      d.triples.push_back(mk3(i, (i + 2) % 12, (i + 5) % 12));
    for (int i = 0; i < 4; ++i)
      d.triples.push_back(mk3(i, (i + 4) % 12, (i + 8) % 12));
    OneFactor t0, t1, t2;
    for (int i = 0; i < 6; ++i) {
      t0.push_back(mk(i, i + 6));
      t1.push_back(mk(2 * i, 2 * i + 1));
      t2.push_back(mk(2 * i + 1, (2 * i + 2) % 12));
    }
    d.factors = {t0, t1, t2};
  } else if (n == 12 && r == 5) {
    for (int i = 0; i < 12; ++i)
      d.triples.push_back(mk3(i, (i + 2) % 12, (i + 5) % 12));
    OneFactor t0, t1;
    for (int i = 0; i < 6; ++i) {
      t0.push_back(mk(i, i + 6));
      t1.push_back(mk(2 * i, 2 * i + 1));
    }
    OneFactor t2 = {mk(0, 4), mk(5, 9), mk(6, 10), mk(3, 11), mk(1, 2), mk(7, 8)};
    OneFactor t3 = {mk(0, 8), mk(1, 5), mk(2, 6), mk(7, 11), mk(3, 4), mk(9, 10)};
    OneFactor t4 = {mk(1, 9), mk(2, 10), mk(3, 7), mk(4, 8), mk(0, 11), mk(5, 6)};
    d.factors = {t0, t1, t2, t3, t4};
  } else {
    throw std::invalid_argument("no catalog entry for (" + std::to_string(n) +
                                "," + std::to_string(r) + ")");
  }
  return checked(std::move(d), "catalog");
}

PairsTriplesDesign pt_from_sts(int n) {
  if (n % 6 != 0 && n % 6 != 2)
    throw std::invalid_argument("needs n = 0 or 2 (mod 6)");
  SteinerSystem s = sts(n + 1);
  PairsTriplesDesign d;
  d.n = n;
  OneFactor t1;
  for (const auto& b : s.blocks) {
    if (std::find(b.begin(), b.end(), n) != b.end()) {
      std::vector<int> rest;
      for (int x : b)
        if (x != n) rest.push_back(x);
      t1.push_back(mk(rest[0], rest[1]));
    } else {
      d.triples.push_back(mk3(b[0], b[1], b[2]));
    }
  }
  d.factors = {t1};
  return checked(std::move(d), "from-sts");
}

PairsTriplesDesign pt_double(const PairsTriplesDesign& in) {
  const int n = in.n;
  auto pt = [n](int x, int copy) { return x + n * copy; };
  PairsTriplesDesign d;
  d.n = 2 * n;
  for (int copy = 0; copy < 2; ++copy)
    for (const Triple& t : in.triples)
      d.triples.push_back(mk3(pt(t[0], copy), pt(t[1], copy), pt(t[2], copy)));
  for (int i = 0; i < n; ++i) {
    OneFactor f;
    for (int x = 0; x < n; ++x) f.push_back(mk(pt(x, 0), pt((x + i) % n, 1)));
    d.factors.push_back(std::move(f));
  }
  for (const OneFactor& f : in.factors) {
    OneFactor g;
    for (int copy = 0; copy < 2; ++copy)
      for (const Pair& p : f) g.push_back(mk(pt(p[0], copy), pt(p[1], copy)));
    d.factors.push_back(std::move(g));
  }
  return checked(std::move(d), "double");
}

PairsTriplesDesign pt_triple_same_r(const PairsTriplesDesign& in) {
  const int n = in.n;
  auto pt = [n](int x, int copy) { return x + n * copy; };
  PairsTriplesDesign d;
  d.n = 3 * n;
  for (int copy = 0; copy < 3; ++copy)
    for (const Triple& t : in.triples)
      d.triples.push_back(mk3(pt(t[0], copy), pt(t[1], copy), pt(t[2], copy)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      d.triples.push_back(mk3(pt(x, 0), pt(y, 1), pt((x + y) % n, 2)));
  for (const OneFactor& f : in.factors) {
    OneFactor g;
    for (int copy = 0; copy < 3; ++copy)
      for (const Pair& p : f) g.push_back(mk(pt(p[0], copy), pt(p[1], copy)));
    d.factors.push_back(std::move(g));
  }
  return checked(std::move(d), "triple");
}

PairsTriplesDesign pt_multiply_sts(const PairsTriplesDesign& in, int m) {
  if (m < 3 || (m % 6 != 1 && m % 6 != 3))
    throw std::invalid_argument("multiplier must be 1 or 3 (mod 6), m >= 3");
  const int n = in.n;
  auto pt = [n](int x, int copy) { return x + n * copy; };
  SteinerSystem s = sts(m);
  PairsTriplesDesign d;
  d.n = m * n;
  for (int copy = 0; copy < m; ++copy)
    for (const Triple& t : in.triples)
      d.triples.push_back(mk3(pt(t[0], copy), pt(t[1], copy), pt(t[2], copy)));
  for (const auto& b : s.blocks) {
    std::vector<int> cls = b;
    std::sort(cls.begin(), cls.end());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        d.triples.push_back(
            mk3(pt(x, cls[0]), pt(y, cls[1]), pt((x + y) % n, cls[2])));
  }
  for (const OneFactor& f : in.factors) {
    OneFactor g;
    for (int copy = 0; copy < m; ++copy)
      for (const Pair& p : f) g.push_back(mk(pt(p[0], copy), pt(p[1], copy)));
    d.factors.push_back(std::move(g));
  }
  return checked(std::move(d), "multiply");
}

PairsTriplesDesign pt_triple_grow(const PairsTriplesDesign& in) {
  const int n = in.n;
  if (n % 2 != 0) throw std::invalid_argument("needs even n");
  const int h = n / 2;
  auto pt = [n](int x, int copy) { return x + n * ((copy % 3 + 3) % 3); };
  PairsTriplesDesign d;
  d.n = 3 * n;
  for (int copy = 0; copy < 3; ++copy)
    for (const Triple& t : in.triples)
      d.triples.push_back(mk3(pt(t[0], copy), pt(t[1], copy), pt(t[2], copy)));

  // 3n/2 factors pairing lower/upper half-ranges of consecutive copies;
  // the +i offsets wrap modulo n/2 inside each half so every family is a
  // perfect matching.
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < h; ++i) {
      OneFactor f;
      for (int x = 0; x < h; ++x) {
        f.push_back(mk(pt(x, m), pt((x + i) % h, m + 1)));
        f.push_back(mk(pt(h + x, m + 1), pt((x + i) % h, m + 2)));
        f.push_back(mk(pt(h + x, m), pt(h + (x + i) % h, m + 2)));
      }
      d.factors.push_back(std::move(f));
    }
  // n/2 factors pairing lower halves with the next copy's upper halves
  for (int i = 0; i < h; ++i) {
    OneFactor f;
    for (int m = 0; m < 3; ++m)
      for (int x = 0; x < h; ++x)
        f.push_back(mk(pt(x, m), pt(h + (x + i) % h, m + 1)));
    d.factors.push_back(std::move(f));
  }
  for (const OneFactor& f : in.factors) {
    OneFactor g;
    for (int copy = 0; copy < 3; ++copy)
      for (const Pair& p : f) g.push_back(mk(pt(p[0], copy), pt(p[1], copy)));
    d.factors.push_back(std::move(g));
  }
  return checked(std::move(d), "grow");
}

PairsTriplesDesign pt_product(const PairsTriplesDesign& a,
                              const PairsTriplesDesign& b) {
  const int n1 = a.n, n2 = b.n;
  auto pt = [n1](int x, int copy) { return x + n1 * copy; };
  PairsTriplesDesign d;
  d.n = n1 * n2;
  for (int copy = 0; copy < n2; ++copy)
    for (const Triple& t : a.triples)
      d.triples.push_back(mk3(pt(t[0], copy), pt(t[1], copy), pt(t[2], copy)));
  for (const Triple& t : b.triples) {
    Triple cls = t;
    std::sort(cls.begin(), cls.end());
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n1; ++y)
        d.triples.push_back(
            mk3(pt(x, cls[0]), pt(y, cls[1]), pt((x + y) % n1, cls[2])));
  }
  for (const OneFactor& f : a.factors) {
    OneFactor g;
    for (int copy = 0; copy < n2; ++copy)
      for (const Pair& p : f) g.push_back(mk(pt(p[0], copy), pt(p[1], copy)));
    d.factors.push_back(std::move(g));
  }
  for (const OneFactor& f : b.factors)
    for (int y = 0; y < n1; ++y) {
      OneFactor g;
      for (const Pair& p : f)
        for (int x = 0; x < n1; ++x)
          g.push_back(mk(pt(x, p[0]), pt((x + y) % n1, p[1])));
      d.factors.push_back(std::move(g));
    }
  return checked(std::move(d), "product");
}

std::string PtRecipe::str() const {
  std::ostringstream os;
  os << op;
  os << "(";
  bool first = true;
  for (long long a : args) {
    if (!first) os << ",";
    first = false;
    os << a;
  }
  for (const PtRecipe& c : children) {
    if (!first) os << ",";
    first = false;
    os << c.str();
  }
  os << ")";
  return os.str();
}

PairsTriplesDesign pt_run(const PtRecipe& r) {
  if (r.op == "base")
    return pt_base_catalog(static_cast<int>(r.args[0]),
                           static_cast<int>(r.args[1]));
  if (r.op == "from-sts") return pt_from_sts(static_cast<int>(r.args[0]));
  if (r.op == "double") return pt_double(pt_run(r.children[0]));
  if (r.op == "triple") return pt_triple_same_r(pt_run(r.children[0]));
  if (r.op == "multiply")
    return pt_multiply_sts(pt_run(r.children[0]), static_cast<int>(r.args[0]));
  if (r.op == "grow") return pt_triple_grow(pt_run(r.children[0]));
  if (r.op == "product")
    return pt_product(pt_run(r.children[0]), pt_run(r.children[1]));
  throw std::invalid_argument("unknown recipe op: " + r.op);
}

namespace {

// sts() supports orders up to this cap inside recipes
constexpr int kPlanStsCap = 1000;

bool sts_buildable(int m) {
  return m >= 3 && m <= kPlanStsCap && (m % 6 == 1 || m % 6 == 3);
}

std::optional<PtRecipe> plan_search(int n, int r,
                                    std::map<std::pair<int, int>,
                                             std::optional<PtRecipe>>& memo) {
  if (n < 6 || r < 1 || r >= n - 1) return std::nullopt;
  if (!pt_parameter_check(n, r).ok) return std::nullopt;
  auto key = std::make_pair(n, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  memo[key] = std::nullopt;  // cycle guard; plans strictly shrink n anyway

  std::vector<PtRecipe> found;
  auto leaf = [&](const char* op, std::vector<long long> args) {
    PtRecipe rec;
    rec.op = op;
    rec.args = std::move(args);
    found.push_back(std::move(rec));
  };
  if ((n == 6 && r == 3) || (n == 10 && r == 3) || (n == 12 && r == 3) ||
      (n == 12 && r == 5))
    leaf("base", {n, r});
  if (r == 1 && (n % 6 == 0 || n % 6 == 2) && sts_buildable(n + 1))
    leaf("from-sts", {n});

  auto inner = [&](const char* op, std::vector<long long> args,
                   std::vector<PtRecipe> children) {
    PtRecipe rec;
    rec.op = op;
    rec.args = std::move(args);
    rec.children = std::move(children);
    found.push_back(std::move(rec));
  };

  if (n % 2 == 0 && r > n / 2)
    if (auto c = plan_search(n / 2, r - n / 2, memo))
      inner("double", {}, {*c});
  if (n % 3 == 0)
    if (auto c = plan_search(n / 3, r, memo))
      inner("triple", {}, {*c});
  for (int m = 7; m * 6 <= n; m += 2)
    if (n % m == 0 && sts_buildable(m))
      if (auto c = plan_search(n / m, r, memo))
        inner("multiply", {m}, {*c});
  if (n % 3 == 0 && r > 2 * (n / 3))
    if (auto c = plan_search(n / 3, r - 2 * (n / 3), memo))
      inner("grow", {}, {*c});
  for (int n1 = 6; n1 * 6 <= n; ++n1) {
    if (n % n1 != 0) continue;
    int n2 = n / n1;
    for (int r2 = 1; r2 < n2 - 1; ++r2) {
      int r1 = r - n1 * r2;
      if (r1 < 1) break;
      auto c1 = plan_search(n1, r1, memo);
      if (!c1) continue;
      auto c2 = plan_search(n2, r2, memo);
      if (c2) inner("product", {}, {*c1, *c2});
    }
  }

  std::optional<PtRecipe> best;
  for (PtRecipe& rec : found)
    if (!best || rec.str() < best->str()) best = std::move(rec);
  memo[key] = best;
  return best;
}

}  // namespace

PtPlan pt_plan(int n, int r) {
  if (n > 100'000)
    throw std::invalid_argument("planner supports n <= 100000");
  PtPlan plan;
  PtParameterResult pc = pt_parameter_check(n, r);
  if (!pc.ok) {
    plan.status = PtPlanStatus::Invalid;
    plan.note = pc.reasons.front();
    return plan;
  }
  if (r == n - 1) {
    plan.status = PtPlanStatus::Excluded;
    plan.note = "r = n-1 is the one-factorization case, outside the definition";
    return plan;
  }
  std::map<std::pair<int, int>, std::optional<PtRecipe>> memo;
  auto rec = plan_search(n, r, memo);
  if (rec) {
    plan.status = PtPlanStatus::Found;
    plan.recipe = *rec;
  } else {
    plan.status = PtPlanStatus::Unknown;
    plan.note = "no composition of the known constructions reaches (" +
                std::to_string(n) + "," + std::to_string(r) + ")";
  }
  return plan;
}

}  // namespace msd
