#pragma once

// Minor containment for binary matroids.
//
// Only simple targets are supported, so the host can be simplified at every
// step: for simple N, M has an N-minor iff si(M) does.

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bm/database.hpp"
#include "bm/matroid.hpp"

namespace bm {

// Points of `pattern` in coordinates of a basis drawn from it, grouped so
// that a backtracking embedding can check each point as soon as the basis
// elements it uses have images.
class RestrictionPattern {
 public:
  RestrictionPattern() = default;
  // pattern: simple point set spanning GF(2)^width.
  RestrictionPattern(std::span<const Point> pattern, int width);

  int width() const { return width_; }
  std::size_t size() const { return size_; }

  // True iff some invertible linear map sends the pattern into host. The
  // host must span GF(2)^width. first_choices, when non-empty, limits the
  // image of the first basis element (e.g. to automorphism orbit
  // representatives of the host).
  bool embeds_in(std::span<const Point> host, std::span<const Point> first_choices = {}) const;

 private:
  int width_ = 0;
  std::size_t size_ = 0;
  // checks_[j]: coordinate masks of non-basis points whose highest basis
  // element is j.
  std::vector<std::vector<Point>> checks_;
};

// Recursive delete/contract search against one target, with a verdict memo
// keyed by canonical key that persists across hosts.
class MinorSearch {
 public:
  explicit MinorSearch(const BinaryMatroid& target, bool memoize = true);

  bool found_in(const BinaryMatroid& host);
  // host: simple point set spanning GF(2)^width.
  bool found_in_points(std::span<const Point> host, int width);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool search(std::vector<Point> points, int rank);

  RestrictionPattern pattern_;
  // Used when the host has the target's corank: only contractions remain,
  // so the dual target must be a restriction of the dual host.
  std::optional<RestrictionPattern> dual_pattern_;
  CanonicalKey target_key_;
  int size_ = 0;
  int rank_ = 0;
  int corank_ = 0;
  bool memoize_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> memo_;
};

// Target must be simple; the host may have loops and parallel elements.
bool has_minor(const BinaryMatroid& host, const BinaryMatroid& target, bool memoize = true);
bool has_minor_list(const BinaryMatroid& host, std::span<const BinaryMatroid> targets);

// True iff si(M\e) and si(M/e) are in db for every element e. db must hold
// every simple target-free matroid smaller than the candidate; a missing
// stratum throws DatabaseError naming it.
bool minor_free_by_database(const BinaryMatroid& candidate, const MatroidDatabase& db);
bool minor_free_by_database(std::span<const Point> points, int width, const MatroidDatabase& db);

}  // namespace bm
