#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msd/construct.hpp"
#include "msd/core.hpp"
#include "msd/ingredients.hpp"
#include "msd/ptdesign.hpp"

// Line-oriented, versioned file formats (LF endings, '#' comments):
//
//   design:  MSD 1 / Q q1 .. qn / T t / K k / [D d] / B c:s c:s ...
//   pairs-triples:  PTD 1 / N n / R r / T a b c ... / F i a b  (i in 1..r)
//   orthogonal array:  OA 1 / K k / N n / k^2 rows of n integers
//
// parse(render(x)) = x for every in-memory value; rendering is canonical
// and deterministic.

namespace msd {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string render_design(const DesignInstance& design);
DesignInstance parse_design(std::string_view text);

// Optional minimum-distance claim carried by the D line (used when storing
// perfect codes, whose radius is (d-1)/2).
struct DesignFile {
  DesignInstance design;
  std::optional<int> declared_d;
};
DesignFile parse_design_file(std::string_view text);
std::string render_design(const DesignInstance& design,
                          std::optional<int> declared_d);

std::string render_pt(const PairsTriplesDesign& d);
PairsTriplesDesign parse_pt(std::string_view text);

std::string render_oa(const OrthogonalArray& oa);
OrthogonalArray parse_oa(std::string_view text);

enum class FileKind { Design, PairsTriples, OrthogonalArray, Unknown };
FileKind sniff_format(std::string_view text);

// Flag shorthand "2x8 4" -> eight 2s and one 4.
MixedAlphabet parse_alphabet_spec(const std::string& spec);

}  // namespace msd
