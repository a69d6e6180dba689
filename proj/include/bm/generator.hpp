#pragma once

// Exhaustive enumeration of simple binary matroids avoiding a set of
// minors, one canonical representative per isomorphism class.
//
// Levels are stratified by rank: the classes of rank r and size k+1 arise
// from rank-r classes of size k (adding a point of the span) and from
// rank-(r-1) classes of size k (adding a point off the span). A candidate
// Y = X + x is kept iff x lies in the canonical least orbit of Y, which
// yields every class exactly once. Excluded minors are removed by checking
// that every single-element deletion and contraction is already listed.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bm/database.hpp"
#include "bm/matroid.hpp"

namespace bm {

// Decides which candidates survive a level.
class ExclusionFilter {
 public:
  ExclusionFilter() = default;
  ExclusionFilter(std::vector<BinaryMatroid> targets, const MatroidDatabase* db);

  bool active() const { return !targets_.empty(); }
  // key: canonical key of a simple candidate.
  bool keep(const CanonicalKey& key) const;

 private:
  struct Target {
    CanonicalKey key;
    int size;
    int rank;
  };
  std::vector<Target> targets_;
  const MatroidDatabase* db_ = nullptr;
};

// Classes of rank r and size k+1, sorted. same_rank holds rank-r classes
// of size k, lower_rank rank-(r-1) classes of size k.
std::vector<CanonicalKey> orderly_step(std::span<const CanonicalKey> same_rank,
                                       std::span<const CanonicalKey> lower_rank, int r,
                                       const ExclusionFilter& filter, unsigned jobs = 1);

struct EnumerationOptions {
  int max_rank = 1;
  std::vector<std::string> excluded;  // catalog names
  int max_size = -1;                  // levels above this size are skipped
  unsigned jobs = 1;
  std::filesystem::path checkpoint;   // rewritten after every level when set
  std::ostream* progress = nullptr;   // one line per completed level
};

// Resumes from `resume` when given: stored levels are reused and the rest
// are computed. Throws DatabaseError if its header does not match.
MatroidDatabase enumerate_minor_free(const EnumerationOptions& options,
                                     const MatroidDatabase* resume = nullptr);

}  // namespace bm
