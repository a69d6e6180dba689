#include "bm/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace bm {

BinaryMatroid decode_sequence(std::span<const Word> values, int rank) {
  if (rank < 0 || rank > kMaxWidth) throw MatroidError("rank out of range");
  const Word limit = rank == kMaxWidth ? ~Word{0} : (Word{1} << rank) - 1;
  std::vector<std::string> labels;
  for (Word v : values) {
    if (v == 0 || v > limit) {
      throw MatroidError("value " + std::to_string(v) + " outside [1, 2^" + std::to_string(rank) +
                         " - 1]");
    }
    labels.push_back(std::to_string(v));
  }
  return BinaryMatroid(rank, std::vector<Word>(values.begin(), values.end()), std::move(labels));
}

BinaryMatroid projective_geometry(int r) {
  if (r < 1 || r > kMaxProjectiveWidth) throw MatroidError("projective rank out of range");
  std::vector<Word> values;
  for (Word v = 1; v < (Word{1} << r); ++v) values.push_back(v);
  return decode_sequence(values, r);
}

BinaryMatroid affine_geometry_32() {
  return BinaryMatroid::from_matrix(GF2Matrix(4, {8, 4, 2, 1, 7, 11, 13, 14}));
}

BinaryMatroid uniform_matroid(int r, int n) {
  if (r < 0 || n < r) throw MatroidError("need 0 <= r <= n");
  std::vector<Word> cols;
  if (r == 0) {
    cols.assign(n, 0);
  } else if (r == 1) {
    cols.assign(n, 1);
  } else if (n == r) {
    for (int i = 0; i < r; ++i) cols.push_back(Word{1} << i);
  } else if (n == r + 1) {
    for (int i = 0; i < r; ++i) cols.push_back(Word{1} << i);
    cols.push_back((Word{1} << r) - 1);
  } else {
    throw MatroidError("U_{" + std::to_string(r) + "," + std::to_string(n) + "} is not binary");
  }
  return BinaryMatroid::from_matrix(GF2Matrix(r, std::move(cols)));
}

BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2) {
  const int w = m1.width() + m2.width();
  if (w > kMaxWidth) throw MatroidError("direct sum too wide");
  std::vector<Word> cols(m1.columns());
  std::vector<std::string> labels(m1.labels());
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (std::size_t i = 0; i < m2.size(); ++i) {
    if (used.count(m2.labels()[i])) {
      throw MatroidError("label '" + m2.labels()[i] + "' used by both matroids");
    }
    cols.push_back(m2.columns()[i] << m1.width());
    labels.push_back(m2.labels()[i]);
  }
  return BinaryMatroid(w, std::move(cols), std::move(labels));
}

BinaryMatroid cat(const BinaryMatroid& m1, const BinaryMatroid& m2) {
  for (const BinaryMatroid* m : {&m1, &m2}) {
    for (std::size_t i = 0; i < m->size(); ++i) {
      if (m->columns()[i] == 0) throw MatroidError("cat needs loopless matroids");
    }
  }
  const BinaryMatroid sum = direct_sum(m1, m2);
  std::vector<Word> cols(sum.columns());
  std::vector<std::string> labels(sum.labels());
  for (std::size_t a = 0; a < m1.size(); ++a) {
    for (std::size_t b = 0; b < m2.size(); ++b) {
      cols.push_back(sum.columns()[a] ^ sum.columns()[m1.size() + b]);
      labels.push_back("(" + m1.labels()[a] + "," + m2.labels()[b] + ")");
    }
  }
  return BinaryMatroid(sum.width(), std::move(cols), std::move(labels));
}

namespace {

// Column indices in m of the labels in t.
std::vector<std::size_t> indices(const BinaryMatroid& m, const std::vector<std::string>& t) {
  std::vector<std::size_t> out;
  for (const auto& l : t) out.push_back(m.index_of(l));
  return out;
}

bool is_triangle(const BinaryMatroid& m, const std::vector<std::size_t>& t) {
  const Word a = m.columns()[t[0]];
  const Word b = m.columns()[t[1]];
  const Word c = m.columns()[t[2]];
  return a != 0 && b != 0 && a != b && (a ^ b) == c;
}

// Some cocircuit lies inside t iff the rest does not span.
bool contains_cocircuit(const BinaryMatroid& m, const std::vector<std::size_t>& t) {
  Word rest = (m.size() == 64 ? ~Word{0} : (Word{1} << m.size()) - 1);
  for (std::size_t i : t) rest &= ~(Word{1} << i);
  return m.rank_of_mask(rest) < m.rank();
}

}  // namespace

BinaryMatroid three_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                        const std::vector<std::string>& t) {
  if (m1.size() < 7 || m2.size() < 7) {
    throw MatroidError("3-sum condition (i) fails: both matroids need at least 7 elements");
  }
  if (t.size() != 3) throw MatroidError("3-sum condition (ii) fails: T must have 3 elements");
  {
    std::unordered_set<std::string> in1(m1.labels().begin(), m1.labels().end());
    std::unordered_set<std::string> ts(t.begin(), t.end());
    if (ts.size() != 3) throw MatroidError("3-sum condition (ii) fails: T must have 3 elements");
    for (const auto& l : m2.labels()) {
      if (in1.count(l) != ts.count(l)) {
        throw MatroidError("3-sum condition (ii) fails: common elements must be exactly T");
      }
    }
    for (const auto& l : t) {
      if (!in1.count(l)) throw MatroidError("3-sum condition (ii) fails: T not in both matroids");
    }
  }
  const auto t1 = indices(m1, t);
  const auto t2 = indices(m2, t);
  if (!is_triangle(m1, t1) || !is_triangle(m2, t2)) {
    throw MatroidError("3-sum condition (ii) fails: T is not a triangle of both matroids");
  }
  if (contains_cocircuit(m1, t1) || contains_cocircuit(m2, t2)) {
    throw MatroidError("3-sum condition (iii) fails: T contains a cocircuit");
  }
  const std::size_t n1 = m1.size();
  const std::size_t n2 = m2.size();
  if (n1 + n2 > 64) throw MatroidError("3-sum supports at most 64 combined elements");

  // Cycle bases of both sides, laid side by side (m2 shifted by n1).
  std::vector<Word> basis;
  for (const auto& v : null_space_basis(m1.matrix())) basis.push_back(v.bits);
  for (const auto& v : null_space_basis(m2.matrix())) basis.push_back(v.bits << n1);

  // Combinations agreeing on T: kernel of the 3-bit disagreement syndrome.
  std::vector<Word> syndromes;
  for (Word z : basis) {
    Word s = 0;
    for (int i = 0; i < 3; ++i) {
      const Word b1 = z >> t1[i] & 1;
      const Word b2 = z >> (n1 + t2[i]) & 1;
      s |= (b1 ^ b2) << i;
    }
    syndromes.push_back(s);
  }
  const auto combos = null_space_basis(GF2Matrix(3, syndromes));

  // Keep the coordinates off T.
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n1; ++i) {
    if (std::find(t1.begin(), t1.end(), i) == t1.end()) {
      keep.push_back(i);
      labels.push_back(m1.labels()[i]);
    }
  }
  for (std::size_t i = 0; i < n2; ++i) {
    if (std::find(t2.begin(), t2.end(), i) == t2.end()) {
      keep.push_back(n1 + i);
      labels.push_back(m2.labels()[i]);
    }
  }
  // Matrix whose rows are the cycles; its complement represents the sum.
  std::vector<Word> cycle_cols(keep.size(), 0);
  for (std::size_t c = 0; c < combos.size(); ++c) {
    Word z = 0;
    for (Word sel = combos[c].bits; sel != 0; sel &= sel - 1) z ^= basis[std::countr_zero(sel)];
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (z >> keep[j] & 1) cycle_cols[j] |= Word{1} << c;
    }
  }
  const GF2Matrix rep = orthogonal_complement(GF2Matrix(static_cast<int>(combos.size()), cycle_cols));
  return BinaryMatroid(rep.width(), rep.columns(), std::move(labels)).compact();
}

BinaryMatroid parallel_extension(const BinaryMatroid& m, const std::string& e,
                                 const std::string& label) {
  std::vector<Word> cols(m.columns());
  std::vector<std::string> labels(m.labels());
  cols.push_back(m.column_of(e));
  labels.push_back(label);
  return BinaryMatroid(m.width(), std::move(cols), std::move(labels));
}

BinaryMatroid cycle_matroid(const SimpleGraph& g) {
  const int nv = g.vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges()) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Roots are the least vertex of each component; they get no row.
  std::vector<int> row(nv, -1);
  int rows = 0;
  for (int v = 0; v < nv; ++v) {
    if (find(v) != v) ++rows;
  }
  if (rows > kMaxWidth) throw MatroidError("graph too large for a word-sized representation");
  int next = rows - 1;
  for (int v = 0; v < nv; ++v) {
    if (find(v) != v) row[v] = next--;
  }
  std::vector<Word> cols;
  std::vector<std::string> labels;
  for (const auto& [a, b] : g.edges()) {
    Word c = 0;
    if (row[a] >= 0) c ^= Word{1} << row[a];
    if (row[b] >= 0) c ^= Word{1} << row[b];
    cols.push_back(c);
    labels.push_back(std::to_string(a) + "-" + std::to_string(b));
  }
  return BinaryMatroid(rows, std::move(cols), std::move(labels));
}

}  // namespace bm
