#include "msd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "msd/conditions.hpp"
#include "msd/construct.hpp"
#include "msd/io.hpp"
#include "msd/search.hpp"

namespace msd {

namespace {

const char* kUsage = R"(usage: msd <command> [options]

commands:
  verify <file|-> [--t N] [--jobs J]     check a design / PT design / OA file
  conditions --q "Q" (--t N --k N | --large-set K | --perfect E)
  construct <recipe> [options] [-o FILE]
      trivial --q "Q" --k K
      ms1k --q "Q" --k K
      from-resolution --kind onefact|affine|large-set-sts9|kts15 [--n N|--g Q]
      from-oa --k K --cols N --r R
      perfect-partition --m M [--dims "K R"] [--jobs J]
      shell (--m M [--dims "K R"] | --in FILE)
      from-rt [FILE|-]
  pt base N R | from-sts N | double IN | triple IN | multiply IN M
     | grow IN | product IN1 IN2 | plan N R [--run]      [-o FILE]
  pt-to-ms [FILE|-] [-o FILE]
  search ms --q "Q" --t N --k N --d D [--nodes N] [--timeout S] [-o FILE]
  search pt --n N --r R [--nodes N] [--timeout S] [-o FILE]

global options: --timing (print elapsed wall time), -o - writes to stdout
alphabet specs: "2 2 4" or shorthand "2x8 4" (eight 2s and one 4)
exit codes: 0 ok, 1 verification/condition/search failure, 2 usage or parse error
)";

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  bool timing = false;

  bool has(const std::string& f) const { return flags.count(f) > 0; }
  std::string get(const std::string& f, const std::string& dflt = "") const {
    auto it = flags.find(f);
    return it == flags.end() ? dflt : it->second;
  }
  long long get_int(const std::string& f, long long dflt) const {
    auto it = flags.find(f);
    if (it == flags.end()) return dflt;
    return std::stoll(it->second);
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Args parse_args(const std::vector<std::string>& argv, std::size_t start) {
  static const std::map<std::string, bool> kKnown = {
      {"--t", true},      {"--k", true},     {"--q", true},
      {"--d", true},      {"--n", true},     {"--r", true},
      {"--g", true},      {"--m", true},     {"--dims", true},
      {"--kind", true},   {"--cols", true},  {"--in", true},
      {"--nodes", true},  {"--timeout", true}, {"--jobs", true},
      {"--large-set", true}, {"--perfect", true}, {"-o", true},
      {"--run", false},   {"--timing", false}};
  Args out;
  for (std::size_t i = start; i < argv.size(); ++i) {
    const std::string& a = argv[i];
    if (a == "--timing") {
      out.timing = true;
      continue;
    }
    auto it = kKnown.find(a);
    if (it != kKnown.end()) {
      if (it->second) {
        if (i + 1 >= argv.size())
          throw UsageError("flag " + a + " needs a value");
        out.flags[a] = argv[++i];
      } else {
        out.flags[a] = "1";
      }
    } else if (!a.empty() && a[0] == '-' && a != "-") {
      throw UsageError("unknown flag " + a);
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << content;
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    default:
      return "n/a ";
  }
}

int print_condition_report(const ConditionReport& rep, std::ostream& out) {
  for (const auto& c : rep.checks)
    out << status_word(c.status) << "  " << c.name << ": " << c.detail << "\n";
  out << (rep.all_passed() ? "all conditions pass\n" : "conditions violated\n");
  return rep.all_passed() ? 0 : 1;
}

int cmd_verify(const Args& args, std::ostream& out, std::istream& in) {
  if (args.positional.empty()) throw UsageError("verify needs a file");
  std::string text = read_input(args.positional[0], in);
  switch (sniff_format(text)) {
    case FileKind::Design: {
      DesignFile file = parse_design_file(text);
      DesignInstance design = file.design;
      if (args.has("--t"))
        design = DesignInstance(design.alphabet(),
                                static_cast<int>(args.get_int("--t", 0)),
                                design.k(), design.blocks());
      VerificationReport rep = classify(design);
      out << rep.describe(design.alphabet()) << "\n";
      if (!rep.t_cover_ok) {
        for (const Block& b : rep.cov.uncovered)
          out << "uncovered: " << b.describe() << "\n";
        for (const auto& [b, m] : rep.cov.multiply_covered)
          out << "covered " << m << " times: " << b.describe() << "\n";
      }
      return rep.classification == DesignClass::Invalid ? 1 : 0;
    }
    case FileKind::PairsTriples: {
      PairsTriplesDesign d = parse_pt(text);
      PtReport rep = verify_pt(d);
      out << "(" << d.n << "," << d.r() << ")-pairs-triples design: "
          << (rep.ok ? "valid" : "INVALID");
      if (rep.definition_excluded) out << " (r = n-1, definition-excluded)";
      out << "\n";
      for (const auto& v : rep.violations) out << "violation: " << v << "\n";
      return rep.ok ? 0 : 1;
    }
    case FileKind::OrthogonalArray: {
      OrthogonalArray oa = parse_oa(text);
      bool ok = verify_oa(oa);
      out << "OA(2," << oa.n << "," << oa.k << "): "
          << (ok ? "valid" : "INVALID") << "\n";
      return ok ? 0 : 1;
    }
    default:
      throw ParseError(1, "unrecognized file header");
  }
}

int cmd_conditions(const Args& args, std::ostream& out) {
  if (!args.has("--q")) throw UsageError("conditions needs --q");
  MixedAlphabet q = parse_alphabet_spec(args.get("--q"));
  if (args.has("--large-set")) {
    int k = static_cast<int>(args.get_int("--large-set", 2));
    LargeSetSizes s = large_set_sizes(q, k);
    if (s.no_single_system) {
      out << "no single system exists (balance denominator <= 0)\n";
      return 1;
    }
    out << "size by largest-alphabet count: " << s.size_a << "\n";
    out << "size by leftover count: " << s.size_b.str() << "\n";
    out << (s.equal ? "sizes agree\n"
                    : "sizes differ: no large set exists\n");
    return s.equal ? 0 : 1;
  }
  if (args.has("--perfect")) {
    int e = static_cast<int>(args.get_int("--perfect", 1));
    return print_condition_report(perfect_code_divisibility(q, e), out);
  }
  if (!args.has("--t") || !args.has("--k"))
    throw UsageError("conditions needs --t and --k (or --large-set/--perfect)");
  int t = static_cast<int>(args.get_int("--t", 0));
  int k = static_cast<int>(args.get_int("--k", 0));
  return print_condition_report(necessary_report(q, t, k), out);
}

// Reports go next to the artifact unless the artifact itself is going to
// stdout, in which case they move to stderr so pipelines stay clean.
std::ostream& info_stream(const Args& args, std::ostream& out,
                          std::ostream& err) {
  return args.get("-o") == "-" ? err : out;
}

int emit_design(const DesignInstance& design, const Args& args,
                std::ostream& out, std::ostream& err,
                std::optional<int> declared_d = {}) {
  VerificationReport rep = classify(design);
  std::ostream& info = info_stream(args, out, err);
  info << rep.describe(design.alphabet()) << "\n";
  if (rep.classification == DesignClass::Invalid) {
    info << "verification failed; nothing written\n";
    return 1;
  }
  std::string path = args.get("-o");
  if (!path.empty())
    write_output(path, render_design(design, declared_d), out);
  return 0;
}

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  std::istringstream is(spec);
  int v;
  while (is >> v) dims.push_back(v);
  return dims;
}

int cmd_construct(const Args& args, std::ostream& out, std::ostream& err,
                  std::istream& in) {
  if (args.positional.empty()) throw UsageError("construct needs a recipe");
  const std::string& recipe = args.positional[0];
  int jobs = static_cast<int>(args.get_int("--jobs", 1));

  if (recipe == "trivial" || recipe == "ms1k") {
    if (!args.has("--q") || !args.has("--k"))
      throw UsageError(recipe + " needs --q and --k");
    MixedAlphabet q = parse_alphabet_spec(args.get("--q"));
    int k = static_cast<int>(args.get_int("--k", 0));
    if (recipe == "trivial") return emit_design(trivial_kk(q, k), args, out, err);
    ClassifiedDesign cd = ms1k(q, k);
    return emit_design(cd.design, args, out, err);
  }
  if (recipe == "from-resolution") {
    std::string kind = args.get("--kind");
    DesignInstance design = [&] {
      if (kind == "onefact")
        return ms_from_one_factorization(
            static_cast<int>(args.get_int("--n", 0)));
      if (kind == "affine")
        return ms_from_affine(static_cast<int>(args.get_int("--g", 0)));
      if (kind == "large-set-sts9") return ms_from_large_set_sts9();
      if (kind == "kts15") return ms_from_kirkman_sts15();
      throw UsageError("unknown --kind " + kind);
    }();
    return emit_design(design, args, out, err);
  }
  if (recipe == "from-oa") {
    int k = static_cast<int>(args.get_int("--k", 0));
    int cols = static_cast<int>(args.get_int("--cols", 3));
    int r = static_cast<int>(args.get_int("--r", cols - 1));
    return emit_design(from_oa(mols_oa(k, cols), r), args, out, err);
  }
  if (recipe == "perfect-partition") {
    int m = static_cast<int>(args.get_int("--m", 0));
    GroupPartition p = subspace_partition(m, parse_dims(args.get("--dims")));
    PerfectCode code = perfect_from_partition(p);
    PerfectSweepReport rep = verify_perfect_code(code, jobs);
    std::ostream& info = info_stream(args, out, err);
    info << "1-perfect code over " << code.alphabet.describe() << ": "
         << code.codewords.size() << " codewords, space " << rep.space_size
         << ", ball " << rep.ball_size << ", "
         << (rep.ok ? "verified" : "NOT PERFECT") << "\n";
    if (!rep.ok) return 1;
    std::string path = args.get("-o");
    if (!path.empty()) {
      DesignInstance as_design(code.alphabet, code.radius + 1,
                               2 * code.radius + 1, code.codewords);
      write_output(path, render_design(as_design, 2 * code.radius + 1), out);
    }
    return 0;
  }
  if (recipe == "shell") {
    PerfectCode code = [&]() -> PerfectCode {
      if (args.has("--in")) {
        DesignFile file = parse_design_file(read_input(args.get("--in"), in));
        if (!file.declared_d || *file.declared_d % 2 == 0)
          throw UsageError("code file needs an odd D line (d = 2e+1)");
        return PerfectCode{file.design.alphabet(), file.design.blocks(),
                           (*file.declared_d - 1) / 2, std::nullopt};
      }
      int m = static_cast<int>(args.get_int("--m", 0));
      GroupPartition p = subspace_partition(m, parse_dims(args.get("--dims")));
      return perfect_from_partition(p, /*lazy=*/true);
    }();
    if (!code.lazy()) {
      PerfectSweepReport rep = verify_perfect_code(code, jobs);
      if (!rep.ok) {
        info_stream(args, out, err) << "input code is not perfect; nothing written\n";
        return 1;
      }
    }
    return emit_design(weight_shell(code), args, out, err);
  }
  if (recipe == "from-rt") {
    std::string path = args.positional.size() > 1 ? args.positional[1] : "-";
    PairsTriplesDesign d = parse_pt(read_input(path, in));
    return emit_design(from_rt(d), args, out, err);
  }
  throw UsageError("unknown recipe " + recipe);
}

int emit_pt(const PairsTriplesDesign& d, const Args& args, std::ostream& out,
            std::ostream& err) {
  PtReport rep = verify_pt(d);
  std::ostream& info = info_stream(args, out, err);
  info << "(" << d.n << "," << d.r() << ")-pairs-triples design, "
       << d.triples.size() << " triples: " << (rep.ok ? "valid" : "INVALID");
  if (rep.definition_excluded) info << " (r = n-1, definition-excluded)";
  info << "\n";
  if (!rep.ok) {
    for (const auto& v : rep.violations) info << "violation: " << v << "\n";
    return 1;
  }
  std::string path = args.get("-o");
  if (!path.empty()) write_output(path, render_pt(d), out);
  return 0;
}

int cmd_pt(const Args& args, std::ostream& out, std::ostream& err,
           std::istream& in) {
  if (args.positional.empty()) throw UsageError("pt needs a subcommand");
  const std::string& sub = args.positional[0];
  auto pos_int = [&](std::size_t i) {
    if (i >= args.positional.size())
      throw UsageError("pt " + sub + ": missing argument");
    return std::stoi(args.positional[i]);
  };
  auto pos_pt = [&](std::size_t i) {
    if (i >= args.positional.size())
      throw UsageError("pt " + sub + ": missing input design");
    return parse_pt(read_input(args.positional[i], in));
  };

  if (sub == "base") return emit_pt(pt_base_catalog(pos_int(1), pos_int(2)), args, out, err);
  if (sub == "from-sts") return emit_pt(pt_from_sts(pos_int(1)), args, out, err);
  if (sub == "double") return emit_pt(pt_double(pos_pt(1)), args, out, err);
  if (sub == "triple") return emit_pt(pt_triple_same_r(pos_pt(1)), args, out, err);
  if (sub == "multiply")
    return emit_pt(pt_multiply_sts(pos_pt(1), pos_int(2)), args, out, err);
  if (sub == "grow") return emit_pt(pt_triple_grow(pos_pt(1)), args, out, err);
  if (sub == "product")
    return emit_pt(pt_product(pos_pt(1), pos_pt(2)), args, out, err);
  if (sub == "plan") {
    int n = pos_int(1), r = pos_int(2);
    PtPlan plan = pt_plan(n, r);
    std::ostream& info = info_stream(args, out, err);
    switch (plan.status) {
      case PtPlanStatus::Found:
        info << "recipe: " << plan.recipe->str() << "\n";
        if (args.has("--run")) return emit_pt(pt_run(*plan.recipe), args, out, err);
        return 0;
      case PtPlanStatus::Excluded:
        info << "excluded: " << plan.note << "\n";
        return 1;
      case PtPlanStatus::Invalid:
        info << "invalid parameters: " << plan.note << "\n";
        return 1;
      default:
        info << "unknown: " << plan.note << "\n";
        return 1;
    }
  }
  throw UsageError("unknown pt subcommand " + sub);
}

int cmd_pt_to_ms(const Args& args, std::ostream& out, std::istream& in) {
  std::string path = args.positional.empty() ? "-" : args.positional[0];
  PairsTriplesDesign d = parse_pt(read_input(path, in));
  DesignInstance design = from_rt(d);
  std::string outpath = args.get("-o", "-");
  VerificationReport rep = classify(design);
  if (rep.classification == DesignClass::Invalid) {
    out << rep.describe(design.alphabet()) << "\n";
    return 1;
  }
  write_output(outpath, render_design(design), out);
  return 0;
}

int cmd_search(const Args& args, std::ostream& out, std::ostream& err) {
  if (args.positional.empty()) throw UsageError("search needs ms or pt");
  SearchLimits limits;
  limits.max_nodes = static_cast<std::uint64_t>(args.get_int("--nodes", 0));
  limits.timeout_seconds = args.has("--timeout")
                               ? std::stod(args.get("--timeout"))
                               : 0.0;
  const std::string& sub = args.positional[0];
  if (sub == "ms") {
    if (!args.has("--q") || !args.has("--t") || !args.has("--k"))
      throw UsageError("search ms needs --q, --t, --k");
    MixedAlphabet q = parse_alphabet_spec(args.get("--q"));
    int t = static_cast<int>(args.get_int("--t", 0));
    int k = static_cast<int>(args.get_int("--k", 0));
    int d = static_cast<int>(args.get_int("--d", 1));
    MsSearchOutcome res = search_ms(q, t, k, d, limits);
    std::ostream& info = info_stream(args, out, err);
    info << "nodes: " << res.nodes_explored << "\n";
    switch (res.status) {
      case SearchStatus::Found: {
        VerificationReport rep = classify(*res.witness);
        info << "found: " << rep.describe(q) << "\n";
        std::string path = args.get("-o");
        if (!path.empty()) write_output(path, render_design(*res.witness), out);
        return 0;
      }
      case SearchStatus::ExhaustedNonexistent:
        info << "exhausted: nonexistent\n";
        return 1;
      default:
        info << "timeout\n";
        return 1;
    }
  }
  if (sub == "pt") {
    int n = static_cast<int>(args.get_int("--n", 0));
    int r = static_cast<int>(args.get_int("--r", 0));
    PtSearchOutcome res = search_pt(n, r, limits);
    std::ostream& info = info_stream(args, out, err);
    info << "nodes: " << res.nodes_explored << "\n";
    switch (res.status) {
      case SearchStatus::Found:
        info << "found: (" << n << "," << r << ")-pairs-triples design\n";
        if (!res.reason.empty()) info << "note: " << res.reason << "\n";
        if (args.has("-o")) write_output(args.get("-o"), render_pt(*res.witness), out);
        return 0;
      case SearchStatus::ExhaustedNonexistent:
        info << "exhausted: nonexistent";
        if (!res.reason.empty()) info << " (" << res.reason << ")";
        info << "\n";
        return 1;
      default:
        info << "timeout\n";
        return 1;
    }
  }
  throw UsageError("unknown search kind " + sub);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  auto started = std::chrono::steady_clock::now();
  int code = 2;
  bool timing = false;
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    Args parsed = parse_args(args, 1);
    timing = parsed.timing;
    if (cmd == "verify")
      code = cmd_verify(parsed, out, in);
    else if (cmd == "conditions")
      code = cmd_conditions(parsed, out);
    else if (cmd == "construct")
      code = cmd_construct(parsed, out, err, in);
    else if (cmd == "pt")
      code = cmd_pt(parsed, out, err, in);
    else if (cmd == "pt-to-ms")
      code = cmd_pt_to_ms(parsed, out, in);
    else if (cmd == "search")
      code = cmd_search(parsed, out, err);
    else if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      code = 0;
    } else {
      throw UsageError("unknown command " + cmd);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  if (timing) {
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    err << "elapsed: " << secs << " s\n";
  }
  return code;
}

}  // namespace msd
