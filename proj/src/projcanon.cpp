#include "bm/projcanon.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "bm/pointset.hpp"

namespace bm {

// ---------------------------------------------------------------------------
// CanonicalKey

std::string CanonicalKey::to_string() const {
  std::string out = "r=" + std::to_string(width) + ";";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(points[i]);
  }
  return out;
}

CanonicalKey CanonicalKey::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& what) -> CanonError {
    return CanonError("malformed key at column " + std::to_string(pos + 1) + ": " + what);
  };
  if (text.substr(0, 2) != "r=") throw fail(0, "expected 'r='");
  std::size_t pos = 2;
  auto read_number = [&](std::uint64_t& value) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw fail(pos, "expected a number");
    pos += static_cast<std::size_t>(ptr - first);
  };
  std::uint64_t width = 0;
  read_number(width);
  if (width > kMaxProjectiveWidth) throw fail(2, "width exceeds 16");
  if (pos >= text.size() || text[pos] != ';') throw fail(pos, "expected ';'");
  ++pos;
  CanonicalKey key;
  key.width = static_cast<int>(width);
  const std::uint64_t limit = std::uint64_t{1} << width;
  while (pos < text.size()) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    read_number(value);
    if (value >= limit) throw fail(start, "point exceeds width");
    if (!key.points.empty() && value < key.points.back()) throw fail(start, "points not sorted");
    key.points.push_back(static_cast<Point>(value));
    if (pos < text.size()) {
      if (text[pos] != ',') throw fail(pos, "expected ','");
      ++pos;
      if (pos == text.size()) throw fail(pos, "trailing ','");
    }
  }
  return key;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(key.width);
  for (Point p : key.points) {
    h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(int width, std::vector<Point> images)
    : width_(width), images_(std::move(images)) {
  if (width < 0 || width > 32 || static_cast<int>(images_.size()) != width) {
    throw CanonError("linear map needs one image per coordinate");
  }
}

LinearMap LinearMap::identity(int width) {
  std::vector<Point> images(width);
  for (int i = 0; i < width; ++i) images[i] = Point{1} << i;
  return LinearMap(width, std::move(images));
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  std::vector<Point> images(other.width_);
  for (int i = 0; i < other.width_; ++i) images[i] = apply(other.images_[i]);
  return LinearMap(other.width_, std::move(images));
}

LinearMap LinearMap::inverse() const {
  // Gauss-Jordan on [A | I] kept as column pairs (image, preimage).
  const int n = width_;
  std::vector<Point> value(images_);
  std::vector<Point> source(n);
  for (int i = 0; i < n; ++i) source[i] = Point{1} << i;
  std::vector<Point> inv(n, 0);
  for (int bit = 0; bit < n; ++bit) {
    int pivot = -1;
    for (int j = bit; j < n; ++j) {
      if (value[j] >> bit & 1) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) throw CanonError("linear map is singular");
    std::swap(value[bit], value[pivot]);
    std::swap(source[bit], source[pivot]);
    for (int j = 0; j < n; ++j) {
      if (j != bit && (value[j] >> bit & 1)) {
        value[j] ^= value[bit];
        source[j] ^= source[bit];
      }
    }
  }
  // Now A(source[i]) = e_i, so A^{-1}(e_i) = source[i].
  for (int i = 0; i < n; ++i) inv[i] = source[i];
  return LinearMap(n, std::move(inv));
}

std::uint64_t general_linear_order(int width) {
  unsigned __int128 order = 1;
  const unsigned __int128 q = static_cast<unsigned __int128>(1) << width;
  for (int i = 0; i < width; ++i) {
    order *= q - (static_cast<unsigned __int128>(1) << i);
    if (order > static_cast<unsigned __int128>(~std::uint64_t{0})) {
      throw std::overflow_error("|GL(" + std::to_string(width) + ",2)| exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(order);
}

std::vector<Point> StabilizerGroup::permutation(std::size_t g) const {
  const Point n = (Point{1} << width) - 1;
  std::vector<Point> out(n);
  for (Point p = 1; p <= n; ++p) out[p - 1] = generators[g].apply(p);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical search

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

enum class Order { worse, equal, better };

// Longer blocks win; equal lengths compare lexicographically.
Order compare_blocks(std::span<const Point> a, std::span<const Point> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Order::better : Order::worse;
  }
  if (a.size() == b.size()) return Order::equal;
  return a.size() > b.size() ? Order::better : Order::worse;
}

class Search {
 public:
  Search(std::span<const Point> points, int width, OrbitScope scope)
      : width_(width), scope_(scope) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      points_.push_back(sorted[i]);
      mult_.push_back(static_cast<int>(j - i));
      i = j;
    }
    const std::size_t n = points_.size();
    frames_.assign(width_ + 1, Frame{std::vector<Point>(n), std::vector<Point>(n)});
    for (std::size_t i = 0; i < n; ++i) {
      frames_[0].residual[i] = points_[i];
      frames_[0].coord[i] = 0;
    }
    scratch_.resize(width_ + 1);
    basis_.assign(width_, 0);
    least_.assign(n, 0);
    if (scope_ == OrbitScope::set) {
      orbits_.emplace(n);
    } else if (scope_ == OrbitScope::space) {
      orbits_.emplace(std::size_t{1} << width_);
    }
  }

  CanonicalForm run() {
    descend(0, false);
    CanonicalForm out;
    out.key.width = width_;
    out.key.points = best_key_;
    out.to_canonical = LinearMap(width_, best_unit_coords_);
    out.automorphisms = count_;
    out.generators = std::move(generators_);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (least_[i]) out.least_orbit.push_back(points_[i]);
    }
    return out;
  }

 private:
  struct Frame {
    std::vector<Point> residual;  // reduced modulo the span chosen so far
    std::vector<Point> coord;     // coordinates of (point - residual)
  };
  struct Explored {
    std::uint32_t child;
    std::uint64_t ties;     // leaves equal to the best as of `version`
    std::uint64_t version;  // bumped whenever a strictly better leaf appears
  };
  struct Scratch {
    std::vector<std::pair<Point, std::uint32_t>> outside;  // (residual, index)
    std::vector<Point> block;
    std::vector<Point> best_block;
    std::vector<std::uint32_t> children;
    std::vector<Explored> explored;
    std::vector<std::uint32_t> orbit;  // union-find over point indices
  };

  // Orbits of the automorphisms found so far that fix the first `depth`
  // basis points.
  void prefix_orbits(int depth, std::vector<std::uint32_t>& parent) const {
    parent.resize(points_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const std::vector<std::uint32_t>& g : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = g[basis_[i]] == basis_[i];
      if (!fixes) continue;
      for (std::uint32_t i = 0; i < g.size(); ++i) {
        const std::uint32_t a = find(parent, i);
        const std::uint32_t b = find(parent, g[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  static std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void block_for(const Frame& f, std::span<const std::pair<Point, std::uint32_t>> cls,
                 std::uint32_t z, Point top, std::vector<Point>& out) const {
    out.clear();
    for (const auto& [res, y] : cls) {
      const Point v = top | (f.coord[y] ^ f.coord[z]);
      for (int m = 0; m < mult_[y]; ++m) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
  }

  void descend(int depth, bool equal_to_best) {
    if (depth == width_) {
      leaf(equal_to_best);
      return;
    }
    const Frame& f = frames_[depth];
    Scratch& s = scratch_[depth];
    const Point top = Point{1} << depth;

    s.outside.clear();
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
      if (f.residual[i] != 0) s.outside.emplace_back(f.residual[i], i);
    }
    std::sort(s.outside.begin(), s.outside.end());

    // Only the heaviest cosets can give the longest block.
    int heaviest = 0;
    for (std::size_t i = 0; i < s.outside.size();) {
      std::size_t j = i;
      int weight = 0;
      while (j < s.outside.size() && s.outside[j].first == s.outside[i].first) {
        weight += mult_[s.outside[j].second];
        ++j;
      }
      heaviest = std::max(heaviest, weight);
      i = j;
    }

    s.children.clear();
    s.best_block.clear();
    bool have_local = false;
    for (std::size_t i = 0; i < s.outside.size();) {
      std::size_t j = i;
      int weight = 0;
      while (j < s.outside.size() && s.outside[j].first == s.outside[i].first) {
        weight += mult_[s.outside[j].second];
        ++j;
      }
      if (weight == heaviest) {
        const std::span<const std::pair<Point, std::uint32_t>> cls(s.outside.data() + i, j - i);
        for (const auto& [res, z] : cls) {
          block_for(f, cls, z, top, s.block);
          const Order o = have_local ? compare_blocks(s.block, s.best_block) : Order::better;
          if (o == Order::better) {
            s.best_block.swap(s.block);
            s.children.clear();
            s.children.push_back(z);
            have_local = true;
          } else if (o == Order::equal) {
            s.children.push_back(z);
          }
        }
      }
      i = j;
    }

    if (have_best_ && equal_to_best) {
      const std::size_t begin = depth == 0 ? 0 : best_block_end_[depth - 1];
      const std::span<const Point> theirs(best_key_.data() + begin,
                                          best_block_end_[depth] - begin);
      const Order o = compare_blocks(s.best_block, theirs);
      if (o == Order::worse) return;
      if (o == Order::better) equal_to_best = false;
    } else if (!have_best_) {
      equal_to_best = false;
    }

    const std::size_t key_mark = path_key_.size();
    path_key_.insert(path_key_.end(), s.best_block.begin(), s.best_block.end());
    path_block_end_.push_back(path_key_.size());

    // s is reused by deeper frames only at their own depth, so the child
    // list stays valid across the recursion.
    s.explored.clear();
    std::size_t gens_used = 0;
    for (std::size_t c = 0; c < s.children.size(); ++c) {
      const std::uint32_t z = s.children[c];
      // An automorphism fixing the prefix and sending an explored child to
      // z maps that subtree onto z's, leaf for leaf.
      if (!s.explored.empty() && !automorphisms_.empty()) {
        if (automorphisms_.size() != gens_used) {
          prefix_orbits(depth, s.orbit);
          gens_used = automorphisms_.size();
        }
        const Explored* twin = nullptr;
        for (const Explored& e : s.explored) {
          if (find(s.orbit, e.child) == find(s.orbit, z)) {
            twin = &e;
            break;
          }
        }
        if (twin != nullptr) {
          if (twin->version == version_ && twin->ties > 0) {
            count_ += twin->ties;
            if (depth == 0) least_[z] = 1;
          }
          continue;
        }
      }
      const std::uint64_t before = count_;
      const std::uint64_t version = version_;
      step(depth, z);
      basis_[depth] = z;
      descend(depth + 1, equal_to_best);
      s.explored.push_back(Explored{z, version_ == version ? count_ - before : count_, version_});
      // The best leaf now passes through this prefix.
      equal_to_best = true;
    }

    path_block_end_.pop_back();
    path_key_.resize(key_mark);
  }

  void step(int depth, std::uint32_t z) {
    const Frame& f = frames_[depth];
    Frame& g = frames_[depth + 1];
    const Point rz = f.residual[z];
    const Point cz = f.coord[z] ^ (Point{1} << depth);
    const int pivot = std::countr_zero(rz);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Point r = f.residual[i];
      if (r >> pivot & 1) {
        g.residual[i] = r ^ rz;
        g.coord[i] = f.coord[i] ^ cz;
      } else {
        g.residual[i] = r;
        g.coord[i] = f.coord[i];
      }
    }
  }

  void leaf(bool equal_to_best) {
    if (!have_best_ || !equal_to_best) {
      have_best_ = true;
      best_key_ = path_key_;
      best_block_end_ = path_block_end_;
      best_basis_ = basis_;
      // Coordinates of each unit vector in the best basis, i.e. the images
      // of the unit vectors under the canonical map.
      std::vector<Point> basis_points(width_);
      for (int i = 0; i < width_; ++i) basis_points[i] = points_[basis_[i]];
      best_unit_coords_ = width_ == 0 ? std::vector<Point>{}
                                      : LinearMap(width_, basis_points).inverse().images();
      count_ = 1;
      ++version_;
      std::fill(least_.begin(), least_.end(), 0);
      if (width_ > 0) least_[basis_[0]] = 1;
      return;
    }
    ++count_;
    least_[basis_[0]] = 1;

    // Automorphism sending the best basis onto the current one.
    std::vector<Point> images(width_);
    for (int m = 0; m < width_; ++m) {
      Point v = 0;
      for (Point c = best_unit_coords_[m]; c != 0; c &= c - 1) {
        v ^= points_[basis_[std::countr_zero(c)]];
      }
      images[m] = v;
    }
    LinearMap sigma(width_, std::move(images));
    std::vector<std::uint32_t> perm(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto it = std::lower_bound(points_.begin(), points_.end(), sigma.apply(points_[i]));
      perm[i] = static_cast<std::uint32_t>(it - points_.begin());
    }
    automorphisms_.push_back(std::move(perm));
    if (scope_ == OrbitScope::none) return;

    bool merged = false;
    if (scope_ == OrbitScope::set) {
      for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point img = sigma.apply(points_[i]);
        const auto it = std::lower_bound(points_.begin(), points_.end(), img);
        merged |= orbits_->unite(i, static_cast<std::size_t>(it - points_.begin()));
      }
    } else {
      const Point n = (Point{1} << width_) - 1;
      for (Point p = 1; p <= n; ++p) merged |= orbits_->unite(p, sigma.apply(p));
    }
    if (merged) generators_.push_back(std::move(sigma));
  }

  int width_;
  OrbitScope scope_;
  std::vector<Point> points_;  // distinct, ascending
  std::vector<int> mult_;
  std::vector<Frame> frames_;
  std::vector<Scratch> scratch_;
  std::vector<std::uint32_t> basis_;
  std::vector<Point> path_key_;
  std::vector<std::size_t> path_block_end_;

  bool have_best_ = false;
  std::vector<Point> best_key_;
  std::vector<std::size_t> best_block_end_;
  std::vector<std::uint32_t> best_basis_;
  std::vector<Point> best_unit_coords_;
  std::uint64_t count_ = 0;
  std::uint64_t version_ = 0;
  std::vector<char> least_;
  // Every automorphism met at a leaf, as a permutation of point indices.
  std::vector<std::vector<std::uint32_t>> automorphisms_;

  std::optional<DisjointSets> orbits_;
  std::vector<LinearMap> generators_;
};

void check_points(std::span<const Point> points, int width) {
  if (width < 0 || width > kMaxProjectiveWidth) {
    throw CanonError("width must lie in [0, 16], got " + std::to_string(width));
  }
  const Point limit = Point{1} << width;
  for (Point p : points) {
    if (p == 0) throw CanonError("zero point: canonical forms need a loopless set");
    if (p >= limit) {
      throw CanonError("point " + std::to_string(p) + " exceeds width " + std::to_string(width));
    }
  }
}

}  // namespace

CanonicalForm canonical_form(std::span<const Point> points, int width, OrbitScope scope) {
  check_points(points, width);
  if (span_rank(points) != width) {
    throw CanonError("canonical_form needs a spanning set; compact it first");
  }
  return Search(points, width, scope).run();
}

CanonicalKey canonical_multiset_key(std::span<const Point> points, int width) {
  check_points(points, width);
  const Compaction c = compact(points, width);
  return Search(c.points, c.rank, OrbitScope::none).run().key;
}

CanonicalKey canonical_key(std::span<const Point> points, int width) {
  return canonical_multiset_key(points, width);
}

StabilizerGroup stabilizer(std::span<const Point> points, int width) {
  check_points(points, width);
  const Compaction c = compact(points, width);
  const int d = c.rank;
  const CanonicalForm form = Search(c.points, d, OrbitScope::space).run();

  StabilizerGroup group;
  group.width = width;
  unsigned __int128 order = form.automorphisms;
  if (d < width) {
    order *= general_linear_order(width - d);
    order <<= d * (width - d);
  }
  if (order > static_cast<unsigned __int128>(~std::uint64_t{0})) {
    throw std::overflow_error("stabilizer order exceeds 64 bits");
  }
  group.order = static_cast<std::uint64_t>(order);

  // In compact coordinates: lifts of the span automorphisms, then the
  // transvections moving the complement coordinates, which generate every
  // map fixing the span pointwise.
  std::vector<LinearMap> compact_gens;
  for (const LinearMap& g : form.generators) {
    std::vector<Point> images(width);
    for (int i = 0; i < width; ++i) images[i] = i < d ? g.images()[i] : Point{1} << i;
    compact_gens.emplace_back(width, std::move(images));
  }
  for (int j = d; j < width; ++j) {
    for (int i = 0; i < width; ++i) {
      if (i == j) continue;
      LinearMap t = LinearMap::identity(width);
      std::vector<Point> images = t.images();
      images[j] ^= Point{1} << i;
      compact_gens.emplace_back(width, std::move(images));
    }
  }
  for (const LinearMap& g : compact_gens) {
    group.generators.push_back(c.backward.compose(g).compose(c.forward));
  }
  return group;
}

std::vector<std::vector<Point>> orbits_on_points(const StabilizerGroup& g,
                                                 std::span<const Point> domain) {
  const std::size_t n = std::size_t{1} << g.width;
  DisjointSets sets(n);
  for (const LinearMap& gen : g.generators) {
    for (Point p = 1; p < n; ++p) sets.unite(p, gen.apply(p));
  }
  std::vector<Point> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<Point>> orbits;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Point p : sorted) {
    if (p == 0 || p >= n) throw CanonError("domain point outside PG(r-1,2)");
    const std::size_t root = sets.find(p);
    if (slot[root] == SIZE_MAX) {
      slot[root] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(p);
  }
  return orbits;
}

std::vector<Point> canonical_least_orbit(std::span<const Point> points, int width) {
  check_points(points, width);
  const Compaction c = compact(points, width);
  const CanonicalForm form = Search(c.points, c.rank, OrbitScope::none).run();
  std::vector<Point> out;
  for (Point p : form.least_orbit) out.push_back(c.backward.apply(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bm
