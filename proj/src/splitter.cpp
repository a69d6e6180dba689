#include "bm/splitter.hpp"

#include <algorithm>
#include <set>

#include "bm/classify.hpp"
#include "bm/pointset.hpp"

namespace bm {

// Minor test against one target, run on whichever of the host and its dual
// has the smaller rank.
struct SplitterSearch::Guard {
  explicit Guard(const BinaryMatroid& target)
      : primal(target),
        dual(target.dual()),
        size(static_cast<int>(target.size())),
        rank(target.rank()),
        corank(size - rank) {}

  bool found_in(const std::vector<Point>& points, int width) {
    const int n = static_cast<int>(points.size());
    if (n < size || width < rank || n - width < corank) return false;
    if (width <= n - width) return primal.found_in_points(points, width);
    const PointMultiset d = dual_points(points, width);
    return dual.found_in_points(d.points, d.width);
  }

  MinorSearch primal;
  MinorSearch dual;
  int size;
  int rank;
  int corank;
};

namespace {

std::vector<Point> outside_representatives(const std::vector<Point>& points, int width) {
  const StabilizerGroup g = stabilizer(points, width);
  std::vector<Point> outside;
  for (Point p = 1; p < (Point{1} << width); ++p) {
    if (!std::binary_search(points.begin(), points.end(), p)) outside.push_back(p);
  }
  std::vector<Point> reps;
  for (const auto& orbit : orbits_on_points(g, outside)) reps.push_back(orbit.front());
  return reps;
}

std::vector<Point> with_point(const std::vector<Point>& points, Point x) {
  std::vector<Point> y(points);
  y.insert(std::upper_bound(y.begin(), y.end(), x), x);
  return y;
}

// Index of v among the vectors supported on free_bits: those bits of v,
// packed.
std::size_t pack(Word v, Word free_bits) {
  std::size_t id = 0;
  int k = 0;
  for (Word m = free_bits; m != 0; m &= m - 1, ++k) {
    if (v >> std::countr_zero(m) & 1) id |= std::size_t{1} << k;
  }
  return id;
}

Word unpack(std::size_t id, Word free_bits) {
  Word v = 0;
  int k = 0;
  for (Word m = free_bits; m != 0; m &= m - 1, ++k) {
    if (id >> k & 1) v |= m & -m;
  }
  return v;
}

// Single-element coextensions, one per automorphism orbit. A coextension
// adds a row v (a vector indexed by the elements) and a new element e whose
// column is the unit vector of that row; v only matters modulo the row
// space. The result is cosimple, and hence 3-connected as its dual is a
// simple extension of a 3-connected matroid, unless v is in the row space
// (e is a coloop) or v is a unit vector modulo it (e is in series).
std::vector<CanonicalKey> coextensions(const CanonicalKey& node) {
  const int r = node.width;
  const std::vector<Point>& pts = node.points;
  const std::size_t n = pts.size();
  XorBasis rows;
  for (int b = 0; b < r; ++b) {
    Word row = 0;
    for (std::size_t i = 0; i < n; ++i) row |= Word{(pts[i] >> b) & 1} << i;
    rows.insert(row);
  }
  const Word all = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
  const Word free_bits = all & ~rows.pivot_mask();
  const std::size_t cosets = std::size_t{1} << std::popcount(free_bits);

  // Automorphisms permute the elements, and hence the cosets.
  const StabilizerGroup g = stabilizer(pts, r);
  std::vector<std::vector<std::size_t>> perms;
  for (const LinearMap& map : g.generators) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = static_cast<std::size_t>(
          std::lower_bound(pts.begin(), pts.end(), map.apply(pts[i])) - pts.begin());
    }
    perms.push_back(std::move(perm));
  }
  std::vector<std::size_t> parent(cosets);
  for (std::size_t i = 0; i < cosets; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t id = 0; id < cosets; ++id) {
    const Word v = unpack(id, free_bits);
    for (const auto& perm : perms) {
      Word w = 0;
      for (std::size_t i = 0; i < n; ++i) w |= Word{(v >> i) & 1} << perm[i];
      const std::size_t a = find(id);
      const std::size_t b = find(pack(rows.normal_form(w), free_bits));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<char> excluded(cosets, 0);
  excluded[0] = 1;
  for (std::size_t i = 0; i < n; ++i) excluded[pack(rows.normal_form(Word{1} << i), free_bits)] = 1;

  std::vector<CanonicalKey> out;
  for (std::size_t id = 0; id < cosets; ++id) {
    if (find(id) != id || excluded[id]) continue;
    const Word v = unpack(id, free_bits);
    std::vector<Point> ext;
    ext.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) ext.push_back(pts[i] | static_cast<Point>((v >> i) & 1) << r);
    ext.push_back(Point{1} << r);
    std::sort(ext.begin(), ext.end());
    out.push_back(canonical_key(ext, r + 1));
  }
  return out;
}

// Single-element extensions and coextensions that are 3-connected, one per
// automorphism orbit. A simple extension of a 3-connected matroid with at
// least four elements is 3-connected, so every point off the matroid
// qualifies.
std::vector<CanonicalKey> neighbours(const CanonicalKey& node) {
  std::vector<CanonicalKey> out;
  const int r = node.width;
  for (Point x : outside_representatives(node.points, r)) {
    out.push_back(canonical_key(with_point(node.points, x), r));
  }
  for (CanonicalKey& k : coextensions(node)) out.push_back(std::move(k));
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

SplitterSearch::SplitterSearch(SplitterOptions options) : options_(std::move(options)) {
  for (const std::string& name : options_.forbidden) {
    forbidden_.push_back(std::make_unique<Guard>(catalog_entry(name).matroid));
  }
}

SplitterSearch::~SplitterSearch() = default;

SplitterSearch::Guard& SplitterSearch::guard_for(const std::string& name) {
  auto& slot = catalog_guards_[name];
  if (!slot) slot = std::make_unique<Guard>(catalog_entry(name).matroid);
  return *slot;
}

bool SplitterSearch::contains_any(const std::vector<Point>& points, int width,
                                  std::vector<std::unique_ptr<Guard>>& guards) {
  return std::any_of(guards.begin(), guards.end(),
                     [&](const std::unique_ptr<Guard>& g) { return g->found_in(points, width); });
}

std::vector<SplitterHit> SplitterSearch::run(const BinaryMatroid& seed) {
  if (seed.size() < 6 || !seed.is_3connected()) {
    throw MatroidError("splitter seeds must be 3-connected with at least 6 elements");
  }
  const std::vector<Point> seed_points = seed.points();
  const CanonicalKey seed_key = canonical_key(seed_points, seed.rank());

  // Condition (iii): listed internally 4-connected matroids one element
  // larger than the seed.
  std::vector<Guard*> larger;
  if (options_.condition_iii) {
    for (const CatalogEntry* e : internally_4connected_list()) {
      if (e->matroid.size() == seed.size() + 1) larger.push_back(&guard_for(e->name));
    }
  }

  std::vector<SplitterHit> hits;
  std::set<CanonicalKey> seen{seed_key};
  std::vector<CanonicalKey> frontier{seed_key};
  for (int depth = 1; depth <= options_.max_steps; ++depth) {
    std::vector<CanonicalKey> next;
    for (const CanonicalKey& node : frontier) {
      for (CanonicalKey& cand : neighbours(node)) {
        if (!seen.insert(cand).second) continue;
        ++examined_;
        if (contains_any(cand.points, cand.width, forbidden_)) continue;
        if (std::any_of(larger.begin(), larger.end(),
                        [&](Guard* g) { return g->found_in(cand.points, cand.width); })) {
          continue;
        }
        const BinaryMatroid m(cand.width, std::vector<Word>(cand.points.begin(), cand.points.end()),
                              default_labels(cand.size()));
        hits.push_back(SplitterHit{cand, depth, m.connectivity_level(4), catalog_name(cand)});
        next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(hits.begin(), hits.end(), [](const SplitterHit& a, const SplitterHit& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.key < b.key;
  });
  return hits;
}

std::vector<SplitterHit> splitter_search(const BinaryMatroid& seed, const SplitterOptions& options) {
  return SplitterSearch(options).run(seed);
}

}  // namespace bm
