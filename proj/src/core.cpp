#include "msd/core.hpp"

#include <algorithm>
#include <sstream>

namespace msd {

MixedAlphabet::MixedAlphabet(std::vector<int> radices)
    : radices_(std::move(radices)) {
  if (radices_.empty())
    throw std::invalid_argument("alphabet must have length >= 1");
  for (int q : radices_)
    if (q < 2) throw std::invalid_argument("every radix must be >= 2");
}

int MixedAlphabet::radix(int coord) const {
  if (coord < 1 || coord > length())
    throw std::invalid_argument("coordinate out of range");
  return radices_[coord - 1];
}

std::string MixedAlphabet::describe() const {
  std::ostringstream os;
  int i = 0, n = length();
  bool first = true;
  while (i < n) {
    int j = i;
    while (j < n && radices_[j] == radices_[i]) ++j;
    if (!first) os << " x ";
    first = false;
    os << "Z" << radices_[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

Block::Block(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    if (points_[i].coord == points_[i + 1].coord)
      throw std::invalid_argument("block has two symbols at coordinate " +
                                  std::to_string(points_[i].coord));
  for (const Point& p : points_)
    if (p.coord < 1 || p.symbol < 1)
      throw std::invalid_argument("block point must have coord >= 1, symbol >= 1");
}

bool Block::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

int Block::symbol_at(int coord) const {
  auto it = std::lower_bound(points_.begin(), points_.end(),
                             Point{coord, 0},
                             [](const Point& a, const Point& b) {
                               return a.coord < b.coord;
                             });
  if (it != points_.end() && it->coord == coord) return it->symbol;
  return 0;
}

std::string Block::describe() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) os << ",";
    os << "(" << points_[i].coord << "," << points_[i].symbol << ")";
  }
  os << "}";
  return os.str();
}

std::size_t BlockHash::operator()(const Block& b) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Point& p : b.points()) {
    std::size_t v = (static_cast<std::size_t>(p.coord) << 20) ^
                    static_cast<std::size_t>(p.symbol);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

void validate_block(const MixedAlphabet& q, const Block& b) {
  for (const Point& p : b.points()) {
    if (p.coord < 1 || p.coord > q.length())
      throw std::invalid_argument("coordinate " + std::to_string(p.coord) +
                                  " out of range 1.." +
                                  std::to_string(q.length()));
    if (p.symbol < 1 || p.symbol >= q.radix(p.coord))
      throw std::invalid_argument(
          "symbol " + std::to_string(p.symbol) + " >= radix " +
          std::to_string(q.radix(p.coord)) + " at coordinate " +
          std::to_string(p.coord));
  }
}

int hamming_distance(const Block& a, const Block& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  std::size_t i = 0, j = 0;
  int d = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].coord < pb[j].coord) {
      ++d;
      ++i;
    } else if (pa[i].coord > pb[j].coord) {
      ++d;
      ++j;
    } else {
      if (pa[i].symbol != pb[j].symbol) ++d;
      ++i;
      ++j;
    }
  }
  d += static_cast<int>((pa.size() - i) + (pb.size() - j));
  return d;
}

bool covers(const Block& c, const Block& x) {
  const auto& pc = c.points();
  const auto& px = x.points();
  if (px.size() > pc.size()) return false;
  std::size_t i = 0;
  for (const Point& p : px) {
    while (i < pc.size() && pc[i].coord < p.coord) ++i;
    if (i == pc.size() || pc[i] != p) return false;
    ++i;
  }
  return true;
}

DesignInstance::DesignInstance(MixedAlphabet alphabet, int t, int k,
                               std::vector<Block> blocks)
    : alphabet_(std::move(alphabet)), t_(t), k_(k), blocks_(std::move(blocks)) {
  if (t_ < 1) throw std::invalid_argument("declared t must be >= 1");
  if (k_ < t_) throw std::invalid_argument("declared k must be >= t");
  for (const Block& b : blocks_) validate_block(alphabet_, b);
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i)
    if (blocks_[i] == blocks_[i + 1])
      throw std::invalid_argument("duplicate block " + blocks_[i].describe());
}

WeightWordStream::WeightWordStream(const MixedAlphabet& q, int w)
    : q_(&q), w_(w) {
  if (w_ < 0) throw std::invalid_argument("weight must be >= 0");
  reset();
}

void WeightWordStream::reset() {
  done_ = w_ > q_->length();
  coords_.resize(w_);
  symbols_.assign(w_, 1);
  for (int i = 0; i < w_; ++i) coords_[i] = i + 1;
}

bool WeightWordStream::next(Block& out) {
  if (done_) return false;
  std::vector<Point> pts(w_);
  for (int i = 0; i < w_; ++i) pts[i] = Point{coords_[i], symbols_[i]};
  out = Block(std::move(pts));
  done_ = !advance();
  return true;
}

bool WeightWordStream::advance() {
  // Symbol odometer first (last position varies fastest), then the
  // coordinate combination in lexicographic order.
  for (int i = w_ - 1; i >= 0; --i) {
    if (symbols_[i] < q_->radix(coords_[i]) - 1) {
      ++symbols_[i];
      for (int j = i + 1; j < w_; ++j) symbols_[j] = 1;
      return true;
    }
  }
  int n = q_->length();
  for (int i = w_ - 1; i >= 0; --i) {
    if (coords_[i] < n - (w_ - 1 - i)) {
      ++coords_[i];
      for (int j = i + 1; j < w_; ++j) coords_[j] = coords_[j - 1] + 1;
      symbols_.assign(w_, 1);
      return true;
    }
  }
  return false;
}

std::vector<Block> enumerate_weight_words(const MixedAlphabet& q, int w) {
  std::vector<Block> out;
  WeightWordStream s(q, w);
  Block b;
  while (s.next(b)) out.push_back(b);
  return out;
}

long long count_weight_words(const MixedAlphabet& q, int w) {
  if (w < 0 || w > q.length()) return 0;
  // e_w of the (q_i - 1) by the usual one-row DP.
  std::vector<long long> e(w + 1, 0);
  e[0] = 1;
  for (int q_i : q.radices()) {
    long long v = q_i - 1;
    for (int s = std::min<int>(w, q.length()); s >= 1; --s)
      e[s] += e[s - 1] * v;
  }
  return e[w];
}

}  // namespace msd
