// knotoid: command-line front end to the knotoid library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotoid/enumerate.hpp"
#include "knotoid/pipeline.hpp"

namespace {

using namespace knotoid;

// Raised for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string in;
  std::string out;
  int workers = 1;
  bool pretty = false;
};

struct SearchOpts {
  int r = 1;
  bool flypes = false;
  std::size_t state_cap = 5'000'000;

  ReachParams params(int workers) const { return {r, flypes, state_cap, -1, workers}; }
};

int default_workers() {
  if (const char* env = std::getenv("KNOTOID_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "knotoid: ignoring KNOTOID_WORKERS=" << env << "\n";
  }
  return 1;
}

// Non-blank, non-comment lines of --in or stdin.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw IoError("cannot open '" + path + "'");
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

// Writes to --out or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

int run_codes(const Common& c, bool canonical, const std::string& to) {
  Output out(c.out);
  for (const std::string& line : read_lines(c.in)) {
    Diagram d = parse_code(line);
    if (canonical) d = canonical_form(d);
    if (to == "pd")
      *out << print_pd(d) << '\n';
    else if (c.pretty)
      *out << print_em_pretty(d) << '\n';
    else
      *out << print_em(d) << '\n';
  }
  out.finish();
  return 0;
}

int run_invariants(const Common& c) {
  Output out(c.out);
  const auto lines = read_lines(c.in);
  std::vector<Diagram> ds;
  for (const std::string& line : lines) ds.push_back(parse_code(line));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const InvariantSignature s = signature(ds[i]);
    if (c.pretty) {
      if (i) *out << '\n';
      *out << "code:    " << lines[i] << '\n'
           << "bracket: " << s.bracket << '\n'
           << "arrow:   " << s.arrow << '\n'
           << "mock:    " << s.mock << '\n'
           << "affine:  " << s.affine << '\n'
           << "yamada:  " << s.yamada << '\n';
    } else {
      *out << s.bracket << '\n' << s.arrow << '\n' << s.mock << '\n' << s.affine << '\n' << s.yamada << '\n';
    }
  }
  out.finish();
  return 0;
}

int run_simplify(const Common& c, const SearchOpts& o) {
  Output out(c.out);
  for (const std::string& line : read_lines(c.in)) {
    const SimplifyResult s = simplify(parse_code(line), o.params(c.workers));
    *out << print_em(s.diagram);
    if (s.capped) *out << (c.pretty ? "  (state cap reached)" : "\tcapped");
    *out << '\n';
  }
  out.finish();
  return 0;
}

const char* label(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent:
      return "equivalent";
    case Equivalence::NotConnected:
      return "not_connected";
    case Equivalence::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

int run_equivalent(const Common& c, const SearchOpts& o, std::vector<std::string> codes) {
  if (codes.empty()) codes = read_lines(c.in);
  if (codes.size() % 2 != 0) throw UsageError("equivalent expects codes in pairs");
  Output out(c.out);
  for (std::size_t i = 0; i < codes.size(); i += 2)
    *out << label(equivalent(parse_code(codes[i]), parse_code(codes[i + 1]), o.params(c.workers))) << '\n';
  out.finish();
  return 0;
}

int run_enumerate(const Common& c, int n, bool shadows_only, bool counts, const std::string& planar) {
  std::vector<ShadowMap> shadows;
  if (!planar.empty()) {
    std::ifstream f(planar, std::ios::binary);
    if (!f) throw IoError("cannot open '" + planar + "'");
    shadows = ingest_planar_code(f).shadows;
  } else {
    if (n < 0) throw UsageError("enumerate needs --n or --planar-code");
    shadows = gen_shadows(n);
  }
  Output out(c.out);
  std::size_t diagrams = 0;
  for (const ShadowMap& s : shadows) {
    if (shadows_only) {
      if (!counts) *out << s.code << '\n';
      continue;
    }
    for (const Diagram& d : assign_crossings(s)) {
      ++diagrams;
      if (!counts) *out << print_em(d) << '\n';
    }
  }
  if (counts) {
    *out << "shadows " << shadows.size() << '\n';
    if (!shadows_only) *out << "diagrams " << diagrams << '\n';
  }
  out.finish();
  return 0;
}

int run_classify(const Common& c, int max_n, std::optional<std::size_t> state_cap, bool no_rotation) {
  ClassifyParams p = ClassifyParams::defaults(max_n);
  p.workers = c.workers;
  p.rotation_augmented = !no_rotation;
  if (state_cap)
    for (auto* list : {&p.reduce_stages, &p.search_stages, &p.rotation_stages})
      for (ReachParams& s : *list) s.max_states = *state_cap;
  try {
    p.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto records = classify(p, [](const ClassifyLog& l) {
    std::cerr << "n=" << l.crossings << " shadows=" << l.shadows << " diagrams=" << l.diagrams
              << " irreducible=" << l.irreducible << " prime=" << l.prime << " classes=" << l.classes
              << " records=" << l.records << std::endl;
  });
  Output out(c.out);
  write_census(*out, records);
  out.finish();
  return 0;
}

int run_verify(const Common& c, const std::string& fixtures, int max_crossings) {
  const auto entries = read_fixtures(fixtures);
  const FixtureReport r = verify_fixtures(entries, max_crossings, c.workers);
  Output out(c.out);
  static const char* names[] = {"bracket", "arrow", "mock", "affine", "yamada"};
  *out << "entries " << r.entries << '\n';
  for (int i = 0; i < 5; ++i) *out << names[i] << ' ' << r.matched[i] << '/' << r.entries << '\n';
  *out << "codes " << r.codes_matched << '/' << r.entries << '\n';
  for (const FixtureMismatch& m : r.mismatches)
    *out << "mismatch " << m.name << ' ' << m.invariant << " expected " << m.expected << " computed " << m.computed
         << '\n';
  out.finish();
  return r.all_matched() ? 0 : 1;
}

int run_report(const Common& c, int table) {
  std::vector<CensusRecord> records;
  if (c.in.empty() || c.in == "-")
    records = read_census(std::cin);
  else
    records = load(c.in);
  Output out(c.out);
  if (table == 1) {
    const auto rows = report_census(records);
    if (c.pretty) {
      *out << format_census(rows);
    } else {
      *out << "crossings,total,chiral_yes,chiral_no,rotatable_yes,rotatable_no,rotatable_conjectured,"
              "possible_duplicates\n";
      for (const CensusRow& row : rows)
        *out << row.crossings << ',' << row.total << ',' << row.chiral_yes << ',' << row.chiral_no << ','
             << row.rotatable_yes << ',' << row.rotatable_no << ',' << row.rotatable_conjectured << ','
             << row.possible_duplicates << '\n';
    }
  } else {
    const auto rows = report_uniqueness(records);
    if (c.pretty) {
      *out << format_uniqueness(rows, records.size());
    } else {
      *out << "invariant,unique,total\n";
      for (const UniquenessRow& row : rows) *out << row.invariant << ',' << row.unique << ',' << records.size() << '\n';
    }
  }
  out.finish();
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool with_in = true) {
  if (with_in) cmd->add_option("--in", c.in, "Input file, one code per line (default: stdin)");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--workers", c.workers, "Worker threads (default: KNOTOID_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--pretty", c.pretty, "Human-oriented output");
}

void add_search(CLI::App* cmd, SearchOpts& o) {
  cmd->add_option("--r", o.r, "Crossing-increasing R2 moves allowed per path")->check(CLI::NonNegativeNumber);
  cmd->add_option("--flypes", o.flypes, "Use flypes (true/false)");
  cmd->add_option("--state-cap", o.state_cap, "Distinct states explored per search")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabulation of spherical knotoids"};
  app.require_subcommand(1);
  Common c;
  c.workers = default_workers();
  SearchOpts search;

  auto* codes = app.add_subcommand("codes", "Convert codes between PD and EM");
  bool canonical = false;
  std::string to = "em";
  add_common(codes, c);
  codes->add_flag("--canonical", canonical, "Relabel into canonical form first");
  codes->add_option("--to", to, "Output format")->check(CLI::IsMember({"em", "pd"}));

  auto* invariants = app.add_subcommand("invariants", "Print bracket, arrow, mock, affine and Yamada polynomials");
  add_common(invariants, c);

  auto* simp = app.add_subcommand("simplify", "Minimum-crossing diagram within a move budget");
  add_common(simp, c);
  add_search(simp, search);

  auto* equiv = app.add_subcommand("equivalent", "Search for a move sequence between two diagrams");
  std::vector<std::string> pair;
  add_common(equiv, c);
  add_search(equiv, search);
  equiv->add_option("codes", pair, "Two codes (otherwise read in pairs from input)")->expected(0, 2);

  auto* enumerate = app.add_subcommand("enumerate", "List shadows or diagrams with n crossings");
  int n = -1;
  bool shadows_only = false, counts = false;
  std::string planar;
  add_common(enumerate, c, false);
  enumerate->add_option("--n", n, "Crossing number")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--planar-code", planar, "Read shadows from a planar_code file instead");
  enumerate->add_flag("--shadows", shadows_only, "List shadows rather than diagrams");
  enumerate->add_flag("--count", counts, "Print counts only");

  auto* classify_cmd = app.add_subcommand("classify", "Build the census up to a crossing number");
  int max_n = 5;
  std::optional<std::size_t> state_cap;
  bool no_rotation = false;
  add_common(classify_cmd, c, false);
  classify_cmd->add_option("--max-n", max_n, "Largest crossing number")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--state-cap", state_cap, "Override every stage's state cap")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--no-rotation", no_rotation, "Keep a knotoid and its rotation apart");

  auto* verify = app.add_subcommand("verify", "Check computed invariants against a fixture file");
  std::string fixtures;
  int max_crossings = -1;
  add_common(verify, c, false);
  verify->add_option("--fixtures", fixtures, "Fixture JSON lines")->required()->check(CLI::ExistingFile);
  verify->add_option("--max-crossings", max_crossings, "Skip larger entries");

  auto* report = app.add_subcommand("report", "Summarize a census file");
  int table = 1;
  add_common(report, c);
  report->add_option("--table", table, "1: counts per crossing number, 2: invariant uniqueness")
      ->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*codes) return run_codes(c, canonical, to);
    if (*invariants) return run_invariants(c);
    if (*simp) return run_simplify(c, search);
    if (*equiv) return run_equivalent(c, search, pair);
    if (*enumerate) return run_enumerate(c, n, shadows_only, counts, planar);
    if (*classify_cmd) return run_classify(c, max_n, state_cap, no_rotation);
    if (*verify) return run_verify(c, fixtures, max_crossings);
    if (*report) return run_report(c, table);
  } catch (const UsageError& e) {
    std::cerr << "knotoid: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "knotoid: syntax error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidDiagram& e) {
    std::cerr << "knotoid: invalid diagram: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "knotoid: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
