#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core domain types for designs over mixed alphabets: the alphabet itself,
// sparse nonzero-entry words (blocks), Hamming geometry on them, and the
// design container everything else operates on.
//
// Conventions used throughout the library:
//   * coordinates are 1-based, 1..n
//   * symbols are 0..q_i-1 with 0 the distinguished zero; blocks store only
//     the nonzero entries, so a word is a sorted list of (coordinate, symbol)
//     points with pairwise distinct coordinates

namespace msd {

// Radix vector (q_1, ..., q_n). No sortedness is imposed; operations that
// need the ascending convention sort an internal copy.
class MixedAlphabet {
 public:
  explicit MixedAlphabet(std::vector<int> radices);

  int length() const { return static_cast<int>(radices_.size()); }
  // 1-based coordinate access.
  int radix(int coord) const;
  const std::vector<int>& radices() const { return radices_; }

  bool operator==(const MixedAlphabet&) const = default;

  // Compact rendering, e.g. "Z2^6 x Z4" (run-length over adjacent radices).
  std::string describe() const;

 private:
  std::vector<int> radices_;
};

// One nonzero entry of a word: symbol `symbol` (1 <= symbol < q) at
// coordinate `coord` (1-based).
struct Point {
  int coord = 0;
  int symbol = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Sparse word: nonzero entries sorted by coordinate, coordinates distinct.
// Canonicalized on construction; two points on the same coordinate with
// different symbols are rejected.
class Block {
 public:
  Block() = default;
  explicit Block(std::vector<Point> points);
  Block(std::initializer_list<Point> points)
      : Block(std::vector<Point>(points)) {}

  int weight() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;
  // Symbol at a coordinate, 0 if the coordinate is zero in this word.
  int symbol_at(int coord) const;

  friend auto operator<=>(const Block&, const Block&) = default;

  std::string describe() const;

 private:
  std::vector<Point> points_;
};

struct BlockHash {
  std::size_t operator()(const Block& b) const;
};

// Throws std::invalid_argument if a point of `b` is out of range for `q`.
void validate_block(const MixedAlphabet& q, const Block& b);

// Number of coordinates in which the implied full-length words differ.
// Works directly on the sparse representation; callers are responsible for
// the blocks living over a common alphabet (see validate_block).
int hamming_distance(const Block& a, const Block& b);

// True iff every point of x is a point of c, i.e. d(x,c) = wt(c) - wt(x).
bool covers(const Block& c, const Block& x);

// A block set over an alphabet together with its declared parameters. The
// declared (t, k) are claims to be verified, never trusted. Blocks are kept
// sorted; duplicates are rejected.
class DesignInstance {
 public:
  DesignInstance(MixedAlphabet alphabet, int t, int k,
                 std::vector<Block> blocks);

  const MixedAlphabet& alphabet() const { return alphabet_; }
  int t() const { return t_; }
  int k() const { return k_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool operator==(const DesignInstance&) const = default;

 private:
  MixedAlphabet alphabet_;
  int t_;
  int k_;
  std::vector<Block> blocks_;
};

// Restartable enumeration of all weight-w words over Q, in lexicographic
// order by (coordinate set, then symbol tuple). Each stream instance is
// independent; concurrent streams over shared alphabets are fine.
class WeightWordStream {
 public:
  WeightWordStream(const MixedAlphabet& q, int w);

  // Writes the next word into `out`; returns false when exhausted.
  bool next(Block& out);
  void reset();

 private:
  bool advance();

  const MixedAlphabet* q_;
  int w_;
  bool done_;
  std::vector<int> coords_;   // current coordinate combination, 1-based
  std::vector<int> symbols_;  // current symbol per chosen coordinate
};

std::vector<Block> enumerate_weight_words(const MixedAlphabet& q, int w);

// Closed-form count: sum over w-subsets Y of prod_{j in Y} (q_j - 1),
// i.e. the elementary symmetric polynomial e_w of the (q_i - 1).
long long count_weight_words(const MixedAlphabet& q, int w);

}  // namespace msd
