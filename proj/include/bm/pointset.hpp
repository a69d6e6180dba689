#pragma once

// Simple binary matroids handled directly as point sets of PG(r-1,2).
// These helpers are the fast path used by the searches; BinaryMatroid is the
// labelled, general-purpose representation.

#include <span>
#include <vector>

#include "bm/projcanon.hpp"

namespace bm {

int span_rank(std::span<const Point> points);

struct Compaction {
  int rank = 0;
  std::vector<Point> points;  // images under forward, all below 2^rank
  LinearMap forward;          // sends the span onto the low rank coordinates
  LinearMap backward;         // inverse of forward
};

// Change of basis putting the span of points onto the low coordinates.
// The span basis is picked greedily from the points in input order.
Compaction compact(std::span<const Point> points, int width);

// Sorted, duplicate-free, zero-free copy.
std::vector<Point> simplify_points(std::vector<Point> points);

// si(M/e) for the point e, in width-1 coordinates (e's lowest set bit is
// projected out). Points need not span.
std::vector<Point> contract_point(std::span<const Point> points, Point e);

// M\e as a sorted set.
std::vector<Point> delete_point(std::span<const Point> points, Point e);

struct PointMultiset {
  int width = 0;
  std::vector<Point> points;  // column order preserved; zeros are loops
};

// Columns of a representation of the dual, in input column order. The input
// must span width; the result has width |points| - width.
PointMultiset dual_points(std::span<const Point> points, int width);

}  // namespace bm
