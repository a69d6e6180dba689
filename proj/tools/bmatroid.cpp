// Command-line front end: catalog, verify, enumerate, extend, minor-test,
// canon, classify.
//
// Exit status: 0 success, 1 failed check, 2 usage error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bm/catalog.hpp"
#include "bm/classify.hpp"
#include "bm/database.hpp"
#include "bm/generator.hpp"
#include "bm/minor.hpp"
#include "bm/splitter.hpp"
#include "bm/verify.hpp"

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// A matroid file holds either one record line "r=<w>;p1,...,pn" or the rows
// of a 0/1 matrix, most significant bit on top; entries may be separated by
// spaces. Blank lines and lines starting with '#' are ignored.
bm::BinaryMatroid read_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::string> rows;
  std::string line;
  int line_no = 0;
  int first_row_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("r=", 0) == 0) {
      if (!rows.empty()) throw UsageError(path + ":" + std::to_string(line_no) + ": record after matrix rows");
      bm::CanonicalKey key;
      try {
        key = bm::CanonicalKey::parse(t);
      } catch (const std::exception& e) {
        throw UsageError(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
      std::vector<bm::Word> cols(key.points.begin(), key.points.end());
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= cols.size(); ++i) labels.push_back(std::to_string(i));
      return bm::BinaryMatroid(key.width, std::move(cols), std::move(labels));
    }
    std::string row;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '0' || c == '1') {
        row += c;
      } else if (c != ' ' && c != '\t' && c != '\r') {
        throw UsageError(path + ":" + std::to_string(line_no) + ":" + std::to_string(i + 1) +
                         ": expected 0 or 1");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    }
    if (rows.empty()) first_row_line = line_no;
    rows.push_back(row);
  }
  if (rows.empty()) throw UsageError(path + ": no matrix or record found");
  if (rows.size() > 64) {
    throw UsageError(path + ":" + std::to_string(first_row_line) + ": more than 64 rows");
  }
  return bm::BinaryMatroid::from_matrix(bm::GF2Matrix::from_rows(rows));
}

bm::BinaryMatroid resolve_matroid(const std::string& name_or_file) {
  if (const bm::CatalogEntry* e = bm::find_catalog_entry(name_or_file)) return e->matroid;
  return read_matroid_file(name_or_file);
}

const bm::CatalogEntry& named(const std::string& name) {
  const bm::CatalogEntry* e = bm::find_catalog_entry(name);
  if (e == nullptr) throw UsageError("unknown catalog entry '" + name + "'");
  return *e;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int catalog_list() {
  std::cout << "name size rank 3-connected i4c prism-free description\n";
  for (const bm::CatalogEntry& e : bm::catalog()) {
    const bm::ExpectedFlags& f = e.expected;
    std::cout << e.name << ' ' << f.size << ' ' << f.rank << ' ' << yes_no(f.three_connected) << ' '
              << yes_no(f.internally_4connected) << ' ' << yes_no(f.prism_free);
    if (!e.description.empty()) std::cout << ' ' << e.description;
    std::cout << '\n';
  }
  return 0;
}

int catalog_show(const std::string& name) {
  const bm::CatalogEntry& e = named(name);
  const bm::BinaryMatroid& m = e.matroid;
  std::cout << e.name;
  if (!e.description.empty()) std::cout << " (" << e.description << ")";
  std::cout << "\nsize " << m.size() << "\nrank " << m.rank() << "\nelements";
  for (const std::string& l : m.labels()) std::cout << ' ' << l;
  std::cout << "\nmatrix\n";
  for (const std::string& row : m.to_rows()) std::cout << "  " << row << '\n';
  const int level = m.size() <= 40 ? m.connectivity_level(4) : 0;
  std::cout << "simple " << yes_no(m.is_simple()) << '\n';
  if (level > 0) {
    std::cout << "3-connected " << yes_no(level >= 3) << '\n';
    std::cout << "internally-4-connected " << yes_no(level >= 4) << '\n';
  }
  const int r = m.rank();
  const bool prism = r <= static_cast<int>(m.size()) - r ? bm::has_minor(m, bm::prism())
                                                         : bm::has_minor(m.dual(), bm::prism().dual());
  std::cout << "prism-free " << yes_no(!prism) << '\n';
  if (r <= bm::kMaxProjectiveWidth) std::cout << "key " << bm::matroid_key(m).to_string() << '\n';
  return 0;
}

int verify(const std::string& suite) {
  std::vector<bm::ClaimResult> results;
  try {
    results = bm::run_suite(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << bm::format_results(results);
  const auto failed = std::count_if(results.begin(), results.end(),
                                    [](const bm::ClaimResult& r) { return !r.pass; });
  std::cout << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : kFailed;
}

struct EnumerateArgs {
  int max_rank = 0;
  std::vector<std::string> exclude;
  std::string out;
  std::string resume;
  unsigned jobs = 1;
  int max_size = -1;
  bool long_run = false;
  bool minor_edges = false;
};

// Ranks above this take hours and need --long-run.
constexpr int kDeskRank = 6;

int enumerate(const EnumerateArgs& a) {
  if (a.max_rank > kDeskRank && !a.long_run) {
    throw UsageError("ranks above " + std::to_string(kDeskRank) + " need --long-run");
  }
  for (const std::string& n : a.exclude) named(n);
  bm::EnumerationOptions o;
  o.max_rank = a.max_rank;
  for (const std::string& n : a.exclude) o.excluded.push_back(named(n).name);
  o.jobs = a.jobs;
  o.max_size = a.max_size;
  o.checkpoint = a.out;
  o.progress = &std::cerr;
  std::optional<bm::MatroidDatabase> resume;
  if (!a.resume.empty()) resume = bm::load_db(a.resume);
  const bm::MatroidDatabase db = bm::enumerate_minor_free(o, resume ? &*resume : nullptr);
  if (!a.out.empty()) bm::save_db(db, a.out);
  std::cout << bm::format_report(bm::classify(db, a.minor_edges));
  return 0;
}

int extend(const std::string& seed, int steps, bool no_condition_iii,
           const std::vector<std::string>& forbid) {
  const bm::CatalogEntry& e = named(seed);
  bm::SplitterOptions o;
  o.max_steps = steps;
  o.condition_iii = !no_condition_iii;
  o.forbidden.clear();
  for (const std::string& n : forbid) o.forbidden.push_back(named(n).name);
  bm::SplitterSearch search(o);
  const std::vector<bm::SplitterHit> hits = search.run(e.matroid);
  int i4c = 0;
  for (const bm::SplitterHit& h : hits) {
    i4c += h.level >= 4 ? 1 : 0;
    std::cout << "depth " << h.depth << ' ' << h.key.to_string() << ' '
              << (h.level >= 4 ? "internally-4-connected" : "3-connected");
    if (!h.name.empty()) std::cout << ' ' << h.name;
    std::cout << '\n';
  }
  std::cout << hits.size() << " found, " << i4c << " internally 4-connected, "
            << search.nodes_examined() << " candidates examined\n";
  return 0;
}

int minor_test(const std::string& host, const std::string& target) {
  const bm::BinaryMatroid h = resolve_matroid(host);
  const bm::BinaryMatroid t = resolve_matroid(target);
  if (!t.is_simple()) throw UsageError("the target must be simple");
  std::cout << (bm::has_minor(h, t) ? "true" : "false") << '\n';
  return 0;
}

int canon(const std::string& file) {
  const bm::BinaryMatroid m = read_matroid_file(file);
  if (m.rank() > bm::kMaxProjectiveWidth) throw UsageError("rank above 16 is not supported");
  std::cout << bm::matroid_key(m).to_string() << '\n';
  return 0;
}

int classify_db(const std::string& path, bool minor_edges) {
  const bm::MatroidDatabase db = bm::load_db(path);
  std::cout << bm::format_report(bm::classify(db, minor_edges));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary matroid workbench: catalog, minor tests, enumeration and verification"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "List catalog entries or show one");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "Name, size, rank and flags of every entry");
  auto* show = cat->add_subcommand("show", "Matrix and properties of one entry");
  std::string show_name;
  show->add_option("name", show_name, "Catalog name")->required();

  auto* ver = app.add_subcommand("verify", "Run an assertion suite");
  std::string suite = "all";
  ver->add_option("suite", suite, "tables | sporadic | lemma3 | lemma6 | small-cases | all");

  auto* en = app.add_subcommand("enumerate", "Enumerate simple binary matroids avoiding minors");
  EnumerateArgs ea;
  en->add_option("--max-rank", ea.max_rank, "Largest rank")->required()->check(CLI::Range(1, 16));
  en->add_option("--exclude", ea.exclude, "Catalog names of excluded minors");
  en->add_option("--out", ea.out, "Database file, rewritten after every level");
  en->add_option("--resume", ea.resume, "Continue from this database");
  en->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  en->add_option("--max-size", ea.max_size, "Skip levels above this size")->check(CLI::NonNegativeNumber);
  en->add_flag("--long-run", ea.long_run, "Allow ranks above 6");
  en->add_flag("--minor-edges", ea.minor_edges, "Also list single-element minor links");

  auto* ext = app.add_subcommand("extend", "Splitter-style extension and coextension search");
  std::string seed;
  int steps = 3;
  bool no_iii = false;
  std::vector<std::string> forbid{"PRISM"};
  ext->add_option("--seed", seed, "Catalog name of the seed")->required();
  ext->add_option("--steps", steps, "Maximum number of steps")->check(CLI::Range(1, 6));
  ext->add_flag("--no-condition-iii", no_iii, "Keep matroids with a listed minor one element larger than the seed");
  ext->add_option("--forbid", forbid, "Excluded minors (default PRISM)");

  auto* mt = app.add_subcommand("minor-test", "Does the host have the target as a minor?");
  std::string host, target;
  mt->add_option("--host", host, "Catalog name or matroid file")->required();
  mt->add_option("--target", target, "Catalog name or matroid file")->required();

  auto* can = app.add_subcommand("canon", "Print the canonical key of a matroid file");
  std::string canon_file;
  can->add_option("file", canon_file, "Record line or 0/1 matrix")->required();

  auto* cls = app.add_subcommand("classify", "Connectivity report for a database");
  std::string db_path;
  bool edges = false;
  cls->add_option("db", db_path, "Database file")->required();
  cls->add_flag("--minor-edges", edges, "Also list single-element minor links");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (cat->parsed()) {
      return cat->got_subcommand("list") ? catalog_list() : catalog_show(show_name);
    }
    if (ver->parsed()) return verify(suite);
    if (en->parsed()) return enumerate(ea);
    if (ext->parsed()) return extend(seed, steps, no_iii, forbid);
    if (mt->parsed()) return minor_test(host, target);
    if (can->parsed()) return canon(canon_file);
    if (cls->parsed()) return classify_db(db_path, edges);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const bm::DatabaseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const bm::MatroidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
