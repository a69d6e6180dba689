#include "bm/pointset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bm/gf2.hpp"

namespace bm {

int span_rank(std::span<const Point> points) {
  XorBasis basis;
  for (Point p : points) basis.insert(p);
  return basis.size();
}

Compaction compact(std::span<const Point> points, int width) {
  XorBasis basis;
  std::vector<Point> columns;
  for (Point p : points) {
    if (basis.insert(p)) columns.push_back(p);
  }
  const int rank = static_cast<int>(columns.size());
  for (int i = 0; i < width && static_cast<int>(columns.size()) < width; ++i) {
    const Point unit = Point{1} << i;
    if (basis.insert(unit)) columns.push_back(unit);
  }
  Compaction out;
  out.rank = rank;
  out.backward = LinearMap(width, std::move(columns));
  out.forward = out.backward.inverse();
  out.points.reserve(points.size());
  for (Point p : points) out.points.push_back(out.forward.apply(p));
  return out;
}

std::vector<Point> simplify_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && points.front() == 0) points.erase(points.begin());
  return points;
}

std::vector<Point> contract_point(std::span<const Point> points, Point e) {
  const int p = std::countr_zero(e);
  const Point low = (Point{1} << p) - 1;
  std::vector<Point> out;
  out.reserve(points.size());
  for (Point y : points) {
    if (y >> p & 1) y ^= e;
    const Point projected = (y & low) | ((y >> (p + 1)) << p);
    if (projected != 0) out.push_back(projected);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> delete_point(std::span<const Point> points, Point e) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (Point y : points) {
    if (y != e) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointMultiset dual_points(std::span<const Point> points, int width) {
  std::vector<Word> cols(points.begin(), points.end());
  const GF2Matrix complement = orthogonal_complement(GF2Matrix(width, std::move(cols)));
  if (complement.width() > 32) throw std::length_error("dual too wide for 32-bit points");
  PointMultiset out;
  out.width = complement.width();
  out.points.assign(complement.columns().begin(), complement.columns().end());
  return out;
}

}  // namespace bm
