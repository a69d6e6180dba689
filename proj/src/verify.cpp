#include "bm/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bm/catalog.hpp"
#include "bm/constructions.hpp"
#include "bm/graph.hpp"
#include "bm/minor.hpp"

namespace bm {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string claim, bool pass, std::string detail = {}) {
    results_.push_back(ClaimResult{suite_, std::move(claim), pass, std::move(detail)});
  }

  std::vector<ClaimResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<ClaimResult> results_;
};

std::string flag_string(int size, int rank, bool c3, bool i4c, bool pf) {
  std::ostringstream s;
  s << "size=" << size << " rank=" << rank << " 3c=" << c3 << " i4c=" << i4c << " prism-free=" << pf;
  return s.str();
}

// Prism containment, searched on whichever of M and M* has the smaller rank.
class PrismTest {
 public:
  PrismTest() : primal_(prism()), dual_(prism().dual()) {}

  bool found_in(const BinaryMatroid& m) {
    const int r = m.rank();
    return r <= static_cast<int>(m.size()) - r ? primal_.found_in(m) : dual_.found_in(m.dual());
  }

 private:
  MinorSearch primal_;
  MinorSearch dual_;
};

std::vector<ClaimResult> tables_suite() {
  Recorder rec("tables");
  PrismTest prism_test;
  std::vector<const CatalogEntry*> entries;
  for (int i = 1; i <= 36; ++i) entries.push_back(&catalog_entry("M" + std::to_string(i)));
  for (const CatalogEntry* e : sporadic_list()) entries.push_back(e);
  for (const CatalogEntry* e : entries) {
    const BinaryMatroid& m = e->matroid;
    const int level = m.connectivity_level(4);
    const bool pf = !prism_test.found_in(m);
    const ExpectedFlags& x = e->expected;
    const bool simple = m.is_simple();
    const bool pass = simple && static_cast<int>(m.size()) == x.size && m.rank() == x.rank &&
                      (level >= 3) == x.three_connected &&
                      (level >= 4) == x.internally_4connected && pf == x.prism_free;
    rec.check(e->name + " " + flag_string(x.size, x.rank, x.three_connected,
                                          x.internally_4connected, x.prism_free),
              pass,
              "observed " + flag_string(static_cast<int>(m.size()), m.rank(), level >= 3,
                                        level >= 4, pf) +
                  (simple ? "" : " (not simple)"));
  }

  // Named members of the list.
  const auto same = [](const BinaryMatroid& a, const BinaryMatroid& b) { return isomorphic(a, b); };
  rec.check("M1 is M(K4)", same(catalog_entry("M1").matroid, cycle_matroid(complete(4))));
  rec.check("M2 is F7", same(catalog_entry("M2").matroid, projective_geometry(3)));
  rec.check("M3 is F7*", same(catalog_entry("M3").matroid, projective_geometry(3).dual()));
  rec.check("M4 is M*(K3,3)",
            same(catalog_entry("M4").matroid, cycle_matroid(complete_bipartite(3, 3)).dual()));
  rec.check("M5 is M(K5)", same(catalog_entry("M5").matroid, cycle_matroid(complete(5))));
  rec.check("M13 is PG(3,2)", same(catalog_entry("M13").matroid, projective_geometry(4)));
  rec.check("M14 is M(K3,3)",
            same(catalog_entry("M14").matroid, cycle_matroid(complete_bipartite(3, 3))));
  {
    // R10: the ten weight-3 vectors of GF(2)^5.
    std::vector<Word> cols;
    for (Word v = 0; v < 32; ++v) {
      if (std::popcount(v) == 3) cols.push_back(v);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= cols.size(); ++i) labels.push_back(std::to_string(i));
    rec.check("M16 is R10", same(catalog_entry("M16").matroid, BinaryMatroid(5, cols, labels)));
  }
  rec.check("M36 is AG(3,2) cat U1,1", same(catalog_entry("M36").matroid, catalog_entry("CAT").matroid));

  const std::vector<const CatalogEntry*> list = internally_4connected_list();
  std::set<CanonicalKey> keys;
  for (const CatalogEntry* e : list) keys.insert(matroid_key(e->matroid));
  rec.check("the internally 4-connected list has 42 pairwise non-isomorphic members",
            list.size() == 42 && keys.size() == 42,
            std::to_string(list.size()) + " entries, " + std::to_string(keys.size()) + " classes");
  return rec.take();
}

std::vector<ClaimResult> sporadic_suite() {
  Recorder rec("sporadic");
  const auto& m = [](const char* name) -> const BinaryMatroid& { return catalog_entry(name).matroid; };
  struct Step {
    const char* claim;
    const char* source;
    bool contract;
    const char* element;
    const char* result;
  };
  const Step steps[] = {
      {"si(S1/16) is M5", "S1", true, "16", "M5"},
      {"si(S2/16) is M6", "S2", true, "16", "M6"},
      {"S3\\3 is S1", "S3", false, "3", "S1"},
      {"S3\\5 is S2", "S3", false, "5", "S2"},
      {"si(S4/1) is S1", "S4", true, "1", "S1"},
      {"S5\\29 is M20", "S5", false, "29", "M20"},
  };
  for (const Step& s : steps) {
    const BinaryMatroid minor = s.contract ? m(s.source).contract_element(s.element).simplify()
                                           : m(s.source).delete_element(s.element);
    rec.check(s.claim, isomorphic(minor, m(s.result)),
              "minor has " + std::to_string(minor.size()) + " elements, rank " +
                  std::to_string(minor.rank()));
  }
  return rec.take();
}

std::vector<ClaimResult> prism_minor_suite() {
  Recorder rec("lemma3");
  PrismTest prism_test;
  const auto both = [&](const std::string& name, const BinaryMatroid& cycle) {
    rec.check("cycle matroid of " + name + " has a prism minor", prism_test.found_in(cycle));
    rec.check("bond matroid of " + name + " has a prism minor", prism_test.found_in(cycle.dual()));
  };
  both("the terrahawk", cycle_matroid(terrahawk()));
  rec.check("the terrahawk is self-dual",
            isomorphic(cycle_matroid(terrahawk()), cycle_matroid(terrahawk()).dual()));
  for (int n = 3; n <= 5; ++n) {
    both("the planar quartic ladder on " + std::to_string(2 * n) + " vertices",
         cycle_matroid(planar_quartic_ladder(n)));
  }
  for (int n = 4; n <= 5; ++n) {
    both("the Moebius quartic ladder on " + std::to_string(2 * n - 1) + " vertices",
         cycle_matroid(mobius_quartic_ladder(n)));
  }
  const BinaryMatroid k5 = cycle_matroid(mobius_quartic_ladder(3));
  rec.check("the Moebius quartic ladder on 5 vertices is K5", isomorphic(k5, cycle_matroid(complete(5))));
  rec.check("bond matroid of the Moebius quartic ladder on 5 vertices has a prism minor",
            prism_test.found_in(k5.dual()));
  rec.check("M(K5) has no prism minor", !prism_test.found_in(k5));
  rec.check("AG(3,2) cat U1,1 has no prism minor", !prism_test.found_in(catalog_entry("CAT").matroid));
  return rec.take();
}

// M(W4) in the coordinates used for the extension argument.
BinaryMatroid wheel_four() {
  const std::vector<std::string> rows{"10001001", "01001100", "00100110", "00010011"};
  return BinaryMatroid::from_matrix(GF2Matrix::from_rows(rows),
                                    {"a", "b", "c", "d", "e", "f", "g", "h"});
}

bool triad_meets_triangle(const BinaryMatroid& m) {
  const std::vector<Triple> triangles = m.triangles();
  for (const Triple& t : m.triads()) {
    for (const Triple& u : triangles) {
      int common = 0;
      for (const auto& a : t) common += std::count(u.begin(), u.end(), a) ? 1 : 0;
      if (common == 2) return true;
    }
  }
  return false;
}

BinaryMatroid add_column(const BinaryMatroid& m, Word column) {
  std::vector<Word> cols = m.columns();
  std::vector<std::string> labels = m.labels();
  cols.push_back(column);
  labels.push_back("x");
  return BinaryMatroid(m.width(), std::move(cols), std::move(labels));
}

std::vector<ClaimResult> wheel_extension_suite() {
  Recorder rec("lemma6");
  const BinaryMatroid w4 = wheel_four();
  rec.check("the matrix represents M(W4)", isomorphic(w4, cycle_matroid(wheel(4))));
  rec.check("M(W4) is self-dual", isomorphic(w4, w4.dual()));
  const BinaryMatroid k33 = cycle_matroid(complete_bipartite(3, 3));
  const int r = w4.width();
  const Word ones = (Word{1} << r) - 1;
  // Row i is printed i-th from the top, so it is bit r-1-i.
  for (int row = 0; row < r; ++row) {
    const Word bit = Word{1} << (r - 1 - row);
    int tried = 0;
    int simple = 0;
    std::vector<std::string> failures;
    for (Word c = 1; c <= ones; ++c) {
      if (c & bit) continue;
      ++tried;
      const BinaryMatroid ext = add_column(w4, c);
      simple += ext.is_simple() ? 1 : 0;
      if (!triad_meets_triangle(ext) || ext.is_internally_4connected()) {
        failures.push_back(std::to_string(c));
      }
      const BinaryMatroid coext = ext.dual();
      if (!triad_meets_triangle(coext) || coext.is_internally_4connected()) {
        failures.push_back("co" + std::to_string(c));
      }
    }
    std::string detail = std::to_string(tried) + " columns, " + std::to_string(simple) + " simple";
    if (!failures.empty()) {
      detail += "; failing:";
      for (const auto& f : failures) detail += " " + f;
    }
    rec.check("each of the " + std::to_string(tried) + " extensions and coextensions with a zero in row " +
                  std::to_string(row + 1) + " has a triad meeting a triangle in two elements",
              tried == 7 && failures.empty(), detail);
  }
  const BinaryMatroid all_ones = add_column(w4, ones);
  rec.check("the all-ones extension is M*(K3,3)", isomorphic(all_ones, k33.dual()));
  rec.check("the all-ones coextension is M(K3,3)", isomorphic(all_ones.dual(), k33));
  return rec.take();
}

std::vector<ClaimResult> small_cases_suite() {
  Recorder rec("small-cases");
  const std::vector<CanonicalKey> found = small_internally_4connected(5, 5);
  std::vector<CanonicalKey> expected;
  for (const char* n : {"U00", "U01", "U11", "U12", "U13", "U23"}) {
    expected.push_back(matroid_key(catalog_entry(n).matroid));
  }
  std::sort(expected.begin(), expected.end());
  std::string detail = "found";
  for (const CanonicalKey& k : found) detail += " " + k.to_string();
  rec.check("the internally 4-connected binary matroids on at most 5 elements are U0,0 U0,1 U1,1 "
            "U1,2 U1,3 U2,3",
            found == expected, detail);
  return rec.take();
}

using Suite = std::function<std::vector<ClaimResult>()>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"tables", tables_suite},   {"sporadic", sporadic_suite},       {"lemma3", prism_minor_suite},
      {"lemma6", wheel_extension_suite},   {"small-cases", small_cases_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    return out;
  }();
  return names;
}

std::vector<ClaimResult> run_suite(std::string_view name) {
  std::vector<ClaimResult> out;
  bool matched = false;
  for (const auto& [n, suite] : suites()) {
    if (name == "all" || name == n) {
      matched = true;
      std::vector<ClaimResult> part = suite();
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (!matched) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return out;
}

std::string format_results(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const ClaimResult& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.claim << '\n';
    if (!r.pass && !r.detail.empty()) out << "  " << r.detail << '\n';
  }
  return out.str();
}

std::vector<CanonicalKey> small_internally_4connected(int width, int max_elements) {
  if (width < 0 || width > kMaxProjectiveWidth) throw std::invalid_argument("width out of range");
  const Word top = Word{1} << width;
  std::set<CanonicalKey> found;
  for (int n = 0; n <= max_elements; ++n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Word> cols(static_cast<std::size_t>(n), 0);
    for (;;) {
      const BinaryMatroid m(width, cols, labels);
      if (m.connectivity_level(4) == 4) found.insert(matroid_key(m));
      // Next non-decreasing tuple, so each multiset is visited once.
      int i = n - 1;
      while (i >= 0 && cols[static_cast<std::size_t>(i)] + 1 == top) --i;
      if (i < 0) break;
      const Word v = cols[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) cols[static_cast<std::size_t>(j)] = v;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace bm
