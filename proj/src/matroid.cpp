#include "bm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "bm/pointset.hpp"

namespace bm {

namespace {

// Exhaustive separation search walks 2^(n-1) subsets.
constexpr std::size_t kMaxSeparationElements = 40;

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

int rank_of_columns(const std::vector<Word>& columns, Word mask) {
  XorBasis basis;
  for (; mask != 0; mask &= mask - 1) basis.insert(columns[std::countr_zero(mask)]);
  return basis.size();
}

}  // namespace

BinaryMatroid::BinaryMatroid(int width, std::vector<Word> columns, std::vector<std::string> labels)
    : width_(width), columns_(std::move(columns)), labels_(std::move(labels)) {
  if (width < 0 || width > kMaxWidth) {
    throw MatroidError("width out of range: " + std::to_string(width));
  }
  if (labels_.size() != columns_.size()) {
    throw MatroidError("need one label per column");
  }
  const Word limit = width == kMaxWidth ? ~Word{0} : (Word{1} << width) - 1;
  for (Word c : columns_) {
    if ((c & ~limit) != 0) {
      throw MatroidError("column " + std::to_string(c) + " exceeds width " + std::to_string(width));
    }
  }
  std::unordered_set<std::string> seen;
  for (const std::string& l : labels_) {
    if (!seen.insert(l).second) throw MatroidError("duplicate label '" + l + "'");
  }
}

BinaryMatroid BinaryMatroid::from_matrix(const GF2Matrix& m, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(m.num_columns());
  return BinaryMatroid(m.width(), m.columns(), std::move(labels));
}

BinaryMatroid BinaryMatroid::from_points(std::span<const Point> points, int width,
                                         std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(points.size());
  return BinaryMatroid(width, std::vector<Word>(points.begin(), points.end()), std::move(labels));
}

std::size_t BinaryMatroid::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw MatroidError("unknown element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Word BinaryMatroid::mask_of(std::span<const std::string> subset) const {
  if (size() > 64) throw MatroidError("subset masks need at most 64 elements");
  Word mask = 0;
  for (const std::string& l : subset) mask |= Word{1} << index_of(l);
  return mask;
}

std::vector<std::string> BinaryMatroid::labels_of_mask(Word mask) const {
  std::vector<std::string> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(labels_[std::countr_zero(mask)]);
  return out;
}

int BinaryMatroid::rank() const { return bm::rank(columns_); }

int BinaryMatroid::rank_of(std::span<const std::string> subset) const {
  XorBasis basis;
  for (const std::string& l : subset) basis.insert(column_of(l));
  return basis.size();
}

int BinaryMatroid::rank_of_mask(Word mask) const { return rank_of_columns(columns_, mask); }

BinaryMatroid BinaryMatroid::delete_elements(std::span<const std::string> subset) const {
  std::vector<char> drop(size(), 0);
  for (const std::string& l : subset) drop[index_of(l)] = 1;
  std::vector<Word> cols;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!drop[i]) {
      cols.push_back(columns_[i]);
      labels.push_back(labels_[i]);
    }
  }
  return BinaryMatroid(width_, std::move(cols), std::move(labels));
}

BinaryMatroid BinaryMatroid::restrict_to(std::span<const std::string> subset) const {
  std::vector<char> keep(size(), 0);
  for (const std::string& l : subset) keep[index_of(l)] = 1;
  std::vector<std::string> drop;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!keep[i]) drop.push_back(labels_[i]);
  }
  return delete_elements(drop);
}

BinaryMatroid BinaryMatroid::contract_elements(std::span<const std::string> subset) const {
  std::vector<char> drop(size(), 0);
  for (const std::string& l : subset) drop[index_of(l)] = 1;
  std::vector<Word> cols(columns_);
  // Eliminate each contracted column in turn, collecting its pivot row.
  Word pivot_rows = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!drop[i] || cols[i] == 0) continue;
    const Word c = cols[i];
    const int p = std::countr_zero(c);
    for (Word& y : cols) {
      if (y >> p & 1) y ^= c;
    }
    pivot_rows |= Word{1} << p;
  }
  std::vector<Word> out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!drop[i]) {
      out.push_back(remove_bits(cols[i], pivot_rows));
      labels.push_back(labels_[i]);
    }
  }
  return BinaryMatroid(width_ - std::popcount(pivot_rows), std::move(out), std::move(labels));
}

BinaryMatroid BinaryMatroid::delete_element(const std::string& e) const {
  return delete_elements(std::span<const std::string>(&e, 1));
}

BinaryMatroid BinaryMatroid::contract_element(const std::string& e) const {
  return contract_elements(std::span<const std::string>(&e, 1));
}

BinaryMatroid BinaryMatroid::simplify() const {
  std::vector<Word> cols;
  std::vector<std::string> labels;
  std::unordered_set<Word> seen;
  for (std::size_t i = 0; i < size(); ++i) {
    if (columns_[i] != 0 && seen.insert(columns_[i]).second) {
      cols.push_back(columns_[i]);
      labels.push_back(labels_[i]);
    }
  }
  return BinaryMatroid(width_, std::move(cols), std::move(labels));
}

BinaryMatroid BinaryMatroid::dual() const {
  const GF2Matrix c = orthogonal_complement(matrix());
  return BinaryMatroid(c.width(), c.columns(), labels_);
}

BinaryMatroid BinaryMatroid::compact() const {
  std::vector<Word> basis_cols;
  XorBasis basis;
  for (Word c : columns_) {
    if (basis.insert(c)) basis_cols.push_back(c);
  }
  // Coordinates relative to the chosen basis: eliminate with a basis that
  // remembers which chosen columns were combined.
  const int r = static_cast<int>(basis_cols.size());
  Word vec[kMaxWidth];
  Word comb[kMaxWidth];
  Word pivots = 0;
  for (int j = 0; j < r; ++j) {
    Word v = basis_cols[j];
    Word m = Word{1} << j;
    while (v != 0 && (pivots >> std::countr_zero(v) & 1)) {
      const int p = std::countr_zero(v);
      v ^= vec[p];
      m ^= comb[p];
    }
    const int p = std::countr_zero(v);
    vec[p] = v;
    comb[p] = m;
    pivots |= Word{1} << p;
  }
  std::vector<Word> out;
  out.reserve(size());
  for (Word c : columns_) {
    Word m = 0;
    while (c != 0) {
      const int p = std::countr_zero(c);
      c ^= vec[p];
      m ^= comb[p];
    }
    out.push_back(m);
  }
  return BinaryMatroid(r, std::move(out), labels_);
}

bool BinaryMatroid::is_simple() const {
  std::unordered_set<Word> seen;
  for (Word c : columns_) {
    if (c == 0 || !seen.insert(c).second) return false;
  }
  return true;
}

int BinaryMatroid::lambda(std::span<const std::string> subset) const {
  return lambda_mask(mask_of(subset));
}

int BinaryMatroid::lambda_mask(Word mask) const {
  const Word all = size() == 64 ? ~Word{0} : (Word{1} << size()) - 1;
  return rank_of_mask(mask) + rank_of_mask(all & ~mask) - rank();
}

std::optional<Separation> BinaryMatroid::find_separation(int k) const {
  const std::size_t n = size();
  if (n < 2) return std::nullopt;
  if (n > kMaxSeparationElements) {
    throw MatroidError("separation search supports at most 40 elements");
  }
  const Word all = (Word{1} << n) - 1;
  const int r = rank();
  // The last element always lies outside X.
  const Word limit = Word{1} << (n - 1);
  for (Word x = 1; x < limit; ++x) {
    const int s = std::popcount(x);
    if (s < k || static_cast<int>(n) - s < k) continue;
    if (rank_of_mask(x) + rank_of_mask(all & ~x) - r <= k - 1) {
      return Separation{labels_of_mask(x), k};
    }
  }
  return std::nullopt;
}

int BinaryMatroid::connectivity_level(int cap) const {
  const std::size_t n = size();
  if (n >= 4 && cap >= 3 && !(is_simple() && is_cosimple())) {
    // Simple and cosimple are necessary for 3-connectivity from 4 elements on.
    return find_separation(1) ? 1 : 2;
  }
  if (cap >= 4 && n >= 8) {
    // A triangle meeting a triad spans a 4-element 3-separation.
    const std::vector<Triple> tri = triangles();
    if (!tri.empty()) {
      for (const Triple& t : triads()) {
        for (const Triple& u : tri) {
          int common = 0;
          for (const auto& a : t) common += std::count(u.begin(), u.end(), a) ? 1 : 0;
          if (common == 2) return find_separation(1) ? 1 : (find_separation(2) ? 2 : 3);
        }
      }
    }
  }
  if (n < 2) return 4;
  if (n > kMaxSeparationElements) {
    throw MatroidError("separation search supports at most 40 elements");
  }
  // One pass over X (the last element stays outside).
  const Word all = (Word{1} << n) - 1;
  const int r = rank();
  const Word limit = Word{1} << (n - 1);
  int level = 4;
  for (Word x = 1; x < limit; ++x) {
    const int s = std::popcount(x);
    const int small = std::min(s, static_cast<int>(n) - s);
    const int lam = rank_of_mask(x) + rank_of_mask(all & ~x) - r;
    if (lam == 0) return 1;
    if (lam == 1 && small >= 2) level = std::min(level, 2);
    if (lam == 2 && small >= 4) level = std::min(level, 3);
    if (level < cap) return level;
  }
  return level;
}

bool BinaryMatroid::is_3connected() const { return connectivity_level(3) >= 3; }

bool BinaryMatroid::is_internally_4connected() const { return connectivity_level(4) >= 4; }

std::vector<Triple> BinaryMatroid::triangles() const {
  std::vector<Triple> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Word a = columns_[i];
      const Word b = columns_[j];
      if (a == 0 || b == 0 || a == b) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (columns_[k] == (a ^ b)) out.push_back({labels_[i], labels_[j], labels_[k]});
      }
    }
  }
  return out;
}

std::vector<Point> BinaryMatroid::points() const {
  const BinaryMatroid c = compact();
  if (c.width() > kMaxProjectiveWidth) throw MatroidError("rank exceeds 16");
  std::vector<Point> out;
  out.reserve(size());
  for (Word w : c.columns()) {
    if (w != 0) out.push_back(static_cast<Point>(w));
  }
  return out;
}

CanonicalKey matroid_key(const BinaryMatroid& m) {
  const BinaryMatroid c = m.compact();
  if (c.width() > kMaxProjectiveWidth) throw MatroidError("rank exceeds 16");
  std::vector<Point> nonzero;
  std::size_t loops = 0;
  for (Word w : c.columns()) {
    if (w == 0) {
      ++loops;
    } else {
      nonzero.push_back(static_cast<Point>(w));
    }
  }
  CanonicalKey key = canonical_multiset_key(nonzero, c.width());
  key.points.insert(key.points.begin(), loops, Point{0});
  return key;
}

bool isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  return a.size() == b.size() && a.rank() == b.rank() && matroid_key(a) == matroid_key(b);
}

}  // namespace bm
