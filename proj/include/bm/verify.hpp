#pragma once

// Assertion suites re-deriving the named structural claims: the catalog
// property grid, the sporadic minor certificates, prism minors in the
// ladder families, the M(W4) extension analysis and the small-case list.

#include <string>
#include <string_view>
#include <vector>

#include "bm/projcanon.hpp"

namespace bm {

struct ClaimResult {
  std::string suite;
  std::string claim;
  bool pass = false;
  std::string detail;  // what was observed, mainly for failures
};

// tables, sporadic, lemma3 (prism minors in ladders and the terrahawk),
// lemma6 (extensions and coextensions of M(W4)), small-cases.
const std::vector<std::string>& suite_names();

// "all" runs every suite in order. Unknown names throw std::invalid_argument.
std::vector<ClaimResult> run_suite(std::string_view name);

// One "PASS|FAIL suite: claim" line per result, plus detail on failures.
std::string format_results(const std::vector<ClaimResult>& results);

// The internally 4-connected binary matroids on at most max_elements
// elements, found by trying every multiset of columns of the given width.
// Keys are matroid_key values, sorted.
std::vector<CanonicalKey> small_internally_4connected(int width, int max_elements);

}  // namespace bm
