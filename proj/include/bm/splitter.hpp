#pragma once

// Breadth-first growth of 3-connected binary matroids from a seed by
// single-element extensions and coextensions, avoiding a list of minors.
//
// With condition (iii) on, a node is dropped when it has a minor that is one
// element larger than the seed and isomorphic to a listed internally
// 4-connected matroid; a minimal counterexample grown from such a minor
// would be found from that minor instead.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bm/catalog.hpp"
#include "bm/minor.hpp"

namespace bm {

struct SplitterOptions {
  int max_steps = 3;
  std::vector<std::string> forbidden{"PRISM"};  // catalog names
  bool condition_iii = true;
};

struct SplitterHit {
  CanonicalKey key;
  int depth = 0;   // steps from the seed
  int level = 3;   // connectivity_level: 3 or 4
  std::string name;  // catalog name, if any
};

// Shares minor-test memos across seeds.
class SplitterSearch {
 public:
  explicit SplitterSearch(SplitterOptions options);
  ~SplitterSearch();

  // Seed must be 3-connected with at least 6 elements. Hits are sorted by
  // depth, then key; the seed itself is not reported.
  std::vector<SplitterHit> run(const BinaryMatroid& seed);

  std::size_t nodes_examined() const { return examined_; }

 private:
  struct Guard;
  bool contains_any(const std::vector<Point>& points, int width,
                    std::vector<std::unique_ptr<Guard>>& guards);
  Guard& guard_for(const std::string& name);

  SplitterOptions options_;
  std::vector<std::unique_ptr<Guard>> forbidden_;
  std::map<std::string, std::unique_ptr<Guard>> catalog_guards_;
  std::size_t examined_ = 0;
};

std::vector<SplitterHit> splitter_search(const BinaryMatroid& seed,
                                         const SplitterOptions& options = {});

}  // namespace bm
