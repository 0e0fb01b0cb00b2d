#include "msd/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace msd {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, content)
};

Lines significant_lines(std::string_view text) {
  Lines out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t i = line.find_first_not_of(" \t");
    if (i != std::string_view::npos && line[i] != '#')
      out.rows.emplace_back(lineno, std::string(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, int lineno) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "malformed integer '" + tok + "'");
  return v;
}

}  // namespace

std::string render_design(const DesignInstance& design,
                          std::optional<int> declared_d) {
  std::ostringstream os;
  os << "MSD 1\n";
  os << "Q";
  for (int q : design.alphabet().radices()) os << " " << q;
  os << "\n";
  os << "T " << design.t() << "\n";
  os << "K " << design.k() << "\n";
  if (declared_d) os << "D " << *declared_d << "\n";
  for (const Block& b : design.blocks()) {
    os << "B";
    for (const Point& p : b.points()) os << " " << p.coord << ":" << p.symbol;
    os << "\n";
  }
  return os.str();
}

std::string render_design(const DesignInstance& design) {
  return render_design(design, std::nullopt);
}

DesignFile parse_design_file(std::string_view text) {
  Lines lines = significant_lines(text);
  if (lines.rows.empty()) throw ParseError(1, "empty design file");

  std::optional<MixedAlphabet> alphabet;
  std::optional<int> t, k, d;
  std::vector<Block> blocks;
  bool header_seen = false;

  for (const auto& [lineno, line] : lines.rows) {
    std::vector<std::string> toks = tokens(line);
    if (toks.empty()) continue;
    const std::string& dir = toks[0];
    if (!header_seen) {
      if (dir != "MSD" || toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "expected header 'MSD 1'");
      header_seen = true;
      continue;
    }
    if (dir == "Q") {
      if (toks.size() < 2) throw ParseError(lineno, "Q needs radices");
      std::vector<int> radices;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        long long v = to_int(toks[i], lineno);
        if (v < 2) throw ParseError(lineno, "radix must be >= 2");
        radices.push_back(static_cast<int>(v));
      }
      alphabet = MixedAlphabet(std::move(radices));
    } else if (dir == "T" || dir == "K" || dir == "D") {
      if (toks.size() != 2)
        throw ParseError(lineno, dir + " needs one integer");
      int v = static_cast<int>(to_int(toks[1], lineno));
      (dir == "T" ? t : dir == "K" ? k : d) = v;
    } else if (dir == "B") {
      if (!alphabet) throw ParseError(lineno, "B before Q");
      std::vector<Point> pts;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::size_t colon = toks[i].find(':');
        if (colon == std::string::npos)
          throw ParseError(lineno, "point must be coord:symbol");
        int coord =
            static_cast<int>(to_int(toks[i].substr(0, colon), lineno));
        int symbol =
            static_cast<int>(to_int(toks[i].substr(colon + 1), lineno));
        if (coord < 1 || coord > alphabet->length())
          throw ParseError(lineno, "coordinate " + std::to_string(coord) +
                                       " out of range");
        if (symbol < 1 || symbol >= alphabet->radix(coord))
          throw ParseError(lineno,
                           "symbol " + std::to_string(symbol) + " >= radix " +
                               std::to_string(alphabet->radix(coord)));
        pts.push_back({coord, symbol});
      }
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          if (pts[i].coord == pts[j].coord)
            throw ParseError(lineno, "duplicate coordinate " +
                                         std::to_string(pts[i].coord) +
                                         " in block");
      blocks.emplace_back(std::move(pts));
    } else {
      throw ParseError(lineno, "unknown directive '" + dir + "'");
    }
  }
  if (!alphabet) throw ParseError(1, "missing Q line");
  if (!t || !k) throw ParseError(1, "missing T or K line");
  try {
    return DesignFile{DesignInstance(*alphabet, *t, *k, std::move(blocks)), d};
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

DesignInstance parse_design(std::string_view text) {
  return parse_design_file(text).design;
}

std::string render_pt(const PairsTriplesDesign& d) {
  std::ostringstream os;
  os << "PTD 1\n";
  os << "N " << d.n << "\n";
  os << "R " << d.r() << "\n";
  for (const Triple& t : d.triples)
    os << "T " << t[0] << " " << t[1] << " " << t[2] << "\n";
  for (int i = 0; i < d.r(); ++i)
    for (const Pair& p : d.factors[i])
      os << "F " << (i + 1) << " " << p[0] << " " << p[1] << "\n";
  return os.str();
}

PairsTriplesDesign parse_pt(std::string_view text) {
  Lines lines = significant_lines(text);
  if (lines.rows.empty()) throw ParseError(1, "empty pairs-triples file");

  PairsTriplesDesign d;
  int r = -1;
  bool header_seen = false;
  for (const auto& [lineno, line] : lines.rows) {
    std::vector<std::string> toks = tokens(line);
    if (toks.empty()) continue;
    const std::string& dir = toks[0];
    if (!header_seen) {
      if (dir != "PTD" || toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "expected header 'PTD 1'");
      header_seen = true;
      continue;
    }
    if (dir == "N" || dir == "R") {
      if (toks.size() != 2) throw ParseError(lineno, dir + " needs one integer");
      int v = static_cast<int>(to_int(toks[1], lineno));
      if (dir == "N") {
        d.n = v;
      } else {
        r = v;
        if (r < 0) throw ParseError(lineno, "negative factor count");
        d.factors.assign(r, {});
      }
    } else if (dir == "T") {
      if (toks.size() != 4) throw ParseError(lineno, "T needs three points");
      Triple t;
      for (int i = 0; i < 3; ++i)
        t[i] = static_cast<int>(to_int(toks[i + 1], lineno));
      std::sort(t.begin(), t.end());
      d.triples.push_back(t);
    } else if (dir == "F") {
      if (toks.size() != 4)
        throw ParseError(lineno, "F needs factor index and two points");
      int i = static_cast<int>(to_int(toks[1], lineno));
      if (r < 0) throw ParseError(lineno, "F before R");
      if (i < 1 || i > r)
        throw ParseError(lineno, "factor index out of range 1.." +
                                     std::to_string(r));
      int a = static_cast<int>(to_int(toks[2], lineno));
      int b = static_cast<int>(to_int(toks[3], lineno));
      d.factors[i - 1].push_back({std::min(a, b), std::max(a, b)});
    } else {
      throw ParseError(lineno, "unknown directive '" + dir + "'");
    }
  }
  if (d.n == 0) throw ParseError(1, "missing N line");
  if (r < 0) throw ParseError(1, "missing R line");
  for (auto& f : d.factors) std::sort(f.begin(), f.end());
  std::sort(d.triples.begin(), d.triples.end());
  return d;
}

std::string render_oa(const OrthogonalArray& oa) {
  std::ostringstream os;
  os << "OA 1\n";
  os << "K " << oa.k << "\n";
  os << "N " << oa.n << "\n";
  for (const auto& row : oa.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

OrthogonalArray parse_oa(std::string_view text) {
  Lines lines = significant_lines(text);
  if (lines.rows.empty()) throw ParseError(1, "empty array file");

  OrthogonalArray oa;
  bool header_seen = false;
  bool k_seen = false, n_seen = false;
  for (const auto& [lineno, line] : lines.rows) {
    std::vector<std::string> toks = tokens(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "OA" || toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "expected header 'OA 1'");
      header_seen = true;
      continue;
    }
    if (!k_seen || !n_seen) {
      if (toks.size() != 2 || (toks[0] != "K" && toks[0] != "N"))
        throw ParseError(lineno, "expected K or N line");
      int v = static_cast<int>(to_int(toks[1], lineno));
      if (toks[0] == "K") {
        oa.k = v;
        k_seen = true;
      } else {
        oa.n = v;
        n_seen = true;
      }
      continue;
    }
    std::vector<int> row;
    for (const std::string& tok : toks)
      row.push_back(static_cast<int>(to_int(tok, lineno)));
    if (static_cast<int>(row.size()) != oa.n)
      throw ParseError(lineno, "row must have " + std::to_string(oa.n) +
                                   " entries");
    for (int v : row)
      if (v < 0 || v >= oa.k)
        throw ParseError(lineno, "entry out of range 0.." +
                                     std::to_string(oa.k - 1));
    oa.rows.push_back(std::move(row));
  }
  if (!k_seen || !n_seen) throw ParseError(1, "missing K or N line");
  if (static_cast<long long>(oa.rows.size()) !=
      static_cast<long long>(oa.k) * oa.k)
    throw ParseError(1, "expected k^2 rows");
  return oa;
}

FileKind sniff_format(std::string_view text) {
  Lines lines = significant_lines(text);
  if (lines.rows.empty()) return FileKind::Unknown;
  std::vector<std::string> toks = tokens(lines.rows.front().second);
  if (toks.empty()) return FileKind::Unknown;
  if (toks[0] == "MSD") return FileKind::Design;
  if (toks[0] == "PTD") return FileKind::PairsTriples;
  if (toks[0] == "OA") return FileKind::OrthogonalArray;
  return FileKind::Unknown;
}

MixedAlphabet parse_alphabet_spec(const std::string& spec) {
  std::vector<int> radices;
  std::istringstream is(spec);
  std::string tok;
  while (is >> tok) {
    std::size_t x = tok.find('x');
    long long value = 0, count = 1;
    try {
      if (x == std::string::npos) {
        value = std::stoll(tok);
      } else {
        value = std::stoll(tok.substr(0, x));
        count = std::stoll(tok.substr(x + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad alphabet token '" + tok + "'");
    }
    if (value < 2 || count < 1 || count > 100000)
      throw std::invalid_argument("bad alphabet token '" + tok + "'");
    for (long long i = 0; i < count; ++i)
      radices.push_back(static_cast<int>(value));
  }
  if (radices.empty()) throw std::invalid_argument("empty alphabet spec");
  return MixedAlphabet(std::move(radices));
}

}  // namespace msd
