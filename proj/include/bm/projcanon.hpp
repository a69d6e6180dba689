#pragma once

// Canonical forms of point sets of PG(r-1,2) under PGL(r,2).
//
// The canonical key of a point set is its lexicographically least sorted
// image under all invertible linear maps, taken at the width of its span.
// Two simple binary matroids are isomorphic iff their keys are equal.
//
// The search backtracks over ordered bases (b1, ..., bd) drawn from the set.
// Every minimal image sends some such basis to the unit vectors, so the
// image of a point is its coordinate vector in the chosen basis, and the
// points entering the span at step j form the block of image values in
// [2^(j-1), 2^j). Blocks are compared as they are completed (a longer block
// wins, then the lexicographically smaller one), which prunes every branch
// that cannot reach the minimum. Leaves tying the minimum are exactly the
// automorphisms, which yields the stabilizer order and generators.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bm {

using Point = std::uint32_t;

inline constexpr int kMaxProjectiveWidth = 16;

struct CanonicalKey {
  int width = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }

  // "r=<width>;<p1>,<p2>,...".
  std::string to_string() const;
  static CanonicalKey parse(std::string_view text);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

// An invertible linear map of GF(2)^width, stored as the images of the unit
// vectors.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int width, std::vector<Point> images);
  static LinearMap identity(int width);

  int width() const { return width_; }
  const std::vector<Point>& images() const { return images_; }

  Point apply(Point p) const {
    Point out = 0;
    for (int i = 0; p != 0; ++i, p >>= 1) {
      if (p & 1) out ^= images_[i];
    }
    return out;
  }

  // (this * other)(p) = this(other(p)).
  LinearMap compose(const LinearMap& other) const;
  LinearMap inverse() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  int width_ = 0;
  std::vector<Point> images_;
};

struct StabilizerGroup {
  int width = 0;
  std::vector<LinearMap> generators;
  std::uint64_t order = 1;

  // Image of every point of PG(width-1,2) under generator g; entry p-1 holds
  // the image of point p.
  std::vector<Point> permutation(std::size_t g) const;
};

class CanonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// |GL(width,2)|; throws std::overflow_error beyond 64 bits.
std::uint64_t general_linear_order(int width);

CanonicalKey canonical_key(std::span<const Point> points, int width);

StabilizerGroup stabilizer(std::span<const Point> points, int width);

// Orbits of the group generated by g's generators, restricted to domain.
// Orbits are sorted internally and listed by least element.
std::vector<std::vector<Point>> orbits_on_points(const StabilizerGroup& g,
                                                 std::span<const Point> domain);

// The orbit of the stabilizer on the set containing every point that some
// minimizing map sends to the least point of the canonical key.
std::vector<Point> canonical_least_orbit(std::span<const Point> points, int width);

// Which orbits a canonical search records alongside the key.
enum class OrbitScope {
  none,    // key, order and least orbit only
  set,     // generators chosen to connect the orbits on the input points
  space,   // generators chosen to connect the orbits on all of PG(d-1,2)
};

struct CanonicalForm {
  CanonicalKey key;
  LinearMap to_canonical;          // maps the input onto key.points
  std::uint64_t automorphisms = 1; // order of the setwise stabilizer
  std::vector<LinearMap> generators;
  std::vector<Point> least_orbit;  // sorted
};

// Canonical search on a spanning point multiset: rank(points) must equal
// width. Zero points are rejected.
CanonicalForm canonical_form(std::span<const Point> points, int width,
                             OrbitScope scope = OrbitScope::none);

// Canonical key of a multiset of nonzero points that may contain repeats
// (parallel elements). Not required to span.
CanonicalKey canonical_multiset_key(std::span<const Point> points, int width);

}  // namespace bm
