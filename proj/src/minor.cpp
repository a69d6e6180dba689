#include "bm/minor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "bm/pointset.hpp"

namespace bm {

namespace {

// Simple compact point set of m (loops and parallel copies dropped).
std::pair<std::vector<Point>, int> simple_points(const BinaryMatroid& m) {
  const BinaryMatroid c = m.simplify().compact();
  if (c.width() > kMaxProjectiveWidth) throw MatroidError("minor search supports rank at most 16");
  std::vector<Point> pts(c.columns().begin(), c.columns().end());
  std::sort(pts.begin(), pts.end());
  return {std::move(pts), c.width()};
}

// Representatives of the orbits of the generated group on points.
std::vector<Point> orbit_representatives(const std::vector<Point>& points,
                                         const std::vector<LinearMap>& generators) {
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const LinearMap& g : generators) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto j = static_cast<std::size_t>(
          std::lower_bound(points.begin(), points.end(), g.apply(points[i])) - points.begin());
      const std::size_t a = find(i);
      const std::size_t b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Point> reps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (find(i) == i) reps.push_back(points[i]);
  }
  return reps;
}

}  // namespace

RestrictionPattern::RestrictionPattern(std::span<const Point> pattern, int width)
    : width_(width), size_(pattern.size()), checks_(static_cast<std::size_t>(width)) {
  const Compaction c = compact(pattern, width);
  if (c.rank != width) throw MatroidError("restriction pattern must span");
  // compact() sends the greedy basis drawn from the pattern to the unit
  // vectors, so the other points' coordinates are their basis expansions.
  for (Point m : c.points) {
    if (m == 0) throw MatroidError("restriction pattern must be simple");
    if (std::has_single_bit(m)) continue;
    checks_[static_cast<std::size_t>(std::bit_width(m) - 1)].push_back(m);
  }
}

bool RestrictionPattern::embeds_in(std::span<const Point> host,
                                   std::span<const Point> first_choices) const {
  if (host.size() < size_) return false;
  if (width_ == 0) return true;
  const std::size_t cells = std::size_t{1} << width_;
  std::vector<char> in_host(cells, 0);
  for (Point p : host) in_host[p] = 1;
  std::vector<char> in_span(cells, 0);
  in_span[0] = 1;
  std::vector<Point> span{0};
  std::vector<Point> image(static_cast<std::size_t>(width_));

  auto image_of = [&](Point m) {
    Point v = 0;
    for (; m != 0; m &= m - 1) v ^= image[static_cast<std::size_t>(std::countr_zero(m))];
    return v;
  };
  std::function<bool(int)> place = [&](int j) {
    if (j == width_) return true;
    const std::span<const Point> choices = j == 0 && !first_choices.empty() ? first_choices : host;
    for (Point h : choices) {
      if (in_span[h]) continue;
      image[static_cast<std::size_t>(j)] = h;
      bool ok = true;
      for (Point m : checks_[static_cast<std::size_t>(j)]) {
        if (!in_host[image_of(m)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = span.size();
      for (std::size_t i = 0; i < old; ++i) {
        span.push_back(span[i] ^ h);
        in_span[span.back()] = 1;
      }
      const bool found = place(j + 1);
      for (std::size_t i = old; i < span.size(); ++i) in_span[span[i]] = 0;
      span.resize(old);
      if (found) return true;
    }
    return false;
  };
  return place(0);
}

MinorSearch::MinorSearch(const BinaryMatroid& target, bool memoize) : memoize_(memoize) {
  if (!target.is_simple()) throw MatroidError("minor targets must be simple");
  const auto [pts, width] = simple_points(target);
  target_key_ = canonical_key(pts, width);
  size_ = static_cast<int>(pts.size());
  rank_ = width;
  corank_ = size_ - rank_;
  pattern_ = RestrictionPattern(pts, width);
  const BinaryMatroid dual = target.dual();
  if (dual.is_simple()) {
    const auto [dpts, dwidth] = simple_points(dual);
    dual_pattern_ = RestrictionPattern(dpts, dwidth);
  }
}

bool MinorSearch::found_in(const BinaryMatroid& host) {
  auto [pts, width] = simple_points(host);
  return search(std::move(pts), width);
}

bool MinorSearch::found_in_points(std::span<const Point> host, int width) {
  std::vector<Point> pts(host.begin(), host.end());
  std::sort(pts.begin(), pts.end());
  return search(std::move(pts), width);
}

bool MinorSearch::search(std::vector<Point> points, int rank) {
  const int n = static_cast<int>(points.size());
  if (n < size_ || rank < rank_ || n - rank < corank_) return false;
  if (size_ == 0) return true;
  const CanonicalForm form = canonical_form(points, rank, OrbitScope::set);
  if (n == size_) return form.key == target_key_;
  if (memoize_) {
    const auto it = memo_.find(form.key);
    if (it != memo_.end()) return it->second;
  }
  if (rank == rank_) {
    // Only deletions remain, and binary representations are unique up to
    // a change of basis.
    const std::vector<Point> reps = orbit_representatives(points, form.generators);
    const bool found = pattern_.embeds_in(points, reps);
    if (memoize_) memo_.emplace(form.key, found);
    return found;
  }
  if (n - rank == corank_ && dual_pattern_) {
    // Only contractions remain; dually, only deletions.
    const PointMultiset d = dual_points(points, rank);
    const std::vector<Point> dpts = simplify_points(d.points);
    const bool found = span_rank(dpts) == d.width && dual_pattern_->embeds_in(dpts);
    if (memoize_) memo_.emplace(form.key, found);
    return found;
  }

  bool found = false;
  const bool contract_first = rank > rank_;
  for (Point e : orbit_representatives(points, form.generators)) {
    for (int pass = 0; pass < 2 && !found; ++pass) {
      const bool contract = (pass == 0) == contract_first;
      if (contract) {
        found = search(contract_point(points, e), rank - 1);
      } else {
        std::vector<Point> rest = delete_point(points, e);
        const int r = span_rank(rest);
        if (r == rank) {
          found = search(std::move(rest), rank);
        } else {
          // e was a coloop; deleting it is contracting it.
          found = search(contract_point(points, e), rank - 1);
        }
      }
    }
    if (found) break;
  }
  if (memoize_) memo_.emplace(form.key, found);
  return found;
}

bool has_minor(const BinaryMatroid& host, const BinaryMatroid& target, bool memoize) {
  return MinorSearch(target, memoize).found_in(host);
}

bool has_minor_list(const BinaryMatroid& host, std::span<const BinaryMatroid> targets) {
  return std::any_of(targets.begin(), targets.end(),
                     [&](const BinaryMatroid& t) { return has_minor(host, t); });
}

bool minor_free_by_database(std::span<const Point> points, int width, const MatroidDatabase& db) {
  const Compaction c = compact(points, width);
  const std::vector<Point> pts = simplify_points(c.points);
  if (pts.size() != points.size()) throw MatroidError("database minor test needs a simple matroid");
  const int r = c.rank;
  const int n = static_cast<int>(pts.size());
  for (Point e : pts) {
    std::vector<Point> del = delete_point(pts, e);
    const int dr = span_rank(del);
    db.require(StratumId{dr, n - 1});
    if (!db.contains(canonical_key(del, r))) return false;
    const std::vector<Point> con = contract_point(pts, e);
    db.require(StratumId{r - 1, static_cast<int>(con.size())});
    if (!db.contains(canonical_key(con, r - 1))) return false;
  }
  return true;
}

bool minor_free_by_database(const BinaryMatroid& candidate, const MatroidDatabase& db) {
  if (!candidate.is_simple()) throw MatroidError("database minor test needs a simple matroid");
  const auto [pts, width] = simple_points(candidate);
  return minor_free_by_database(pts, width, db);
}

}  // namespace bm
