#include "bm/gf2.hpp"

#include <stdexcept>

namespace bm {

GF2Matrix::GF2Matrix(int width, std::vector<Word> columns)
    : width_(width), columns_(std::move(columns)) {
  if (width < 0 || width > kMaxWidth) {
    throw std::invalid_argument("matrix width out of range: " + std::to_string(width));
  }
  const Word limit = width == kMaxWidth ? ~Word{0} : (Word{1} << width) - 1;
  for (Word c : columns_) {
    if ((c & ~limit) != 0) {
      throw std::invalid_argument("column " + std::to_string(c) + " exceeds width " +
                                  std::to_string(width));
    }
  }
}

GF2Matrix GF2Matrix::from_rows(std::span<const std::string> rows) {
  const int width = static_cast<int>(rows.size());
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<Word> cols(n, 0);
  for (int r = 0; r < width; ++r) {
    const std::string& row = rows[r];
    if (row.size() != n) throw std::invalid_argument("ragged matrix rows");
    const int bit = width - 1 - r;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == '1') {
        cols[j] |= Word{1} << bit;
      } else if (row[j] != '0') {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
    }
  }
  return GF2Matrix(width, std::move(cols));
}

Word GF2Matrix::row(int i) const {
  Word r = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j] >> i & 1) r |= Word{1} << j;
  }
  return r;
}

std::vector<std::string> GF2Matrix::to_rows() const {
  std::vector<std::string> out;
  for (int r = width_ - 1; r >= 0; --r) {
    std::string line;
    for (Word c : columns_) line.push_back((c >> r & 1) ? '1' : '0');
    out.push_back(std::move(line));
  }
  return out;
}

int rank(std::span<const Word> columns) {
  XorBasis basis;
  for (Word c : columns) basis.insert(c);
  return basis.size();
}

int rank(const GF2Matrix& m) { return rank(m.columns()); }

std::vector<GF2Vector> null_space_basis(const GF2Matrix& m) {
  const std::size_t n = m.num_columns();
  if (n > static_cast<std::size_t>(kMaxWidth)) {
    throw std::length_error("null space supports at most 64 columns");
  }
  const int w = static_cast<int>(n);
  // Each pivot vector carries the combination of columns that produced it.
  Word vec[kMaxWidth];
  Word comb[kMaxWidth];
  Word pivots = 0;
  std::vector<GF2Vector> out;
  for (std::size_t j = 0; j < n; ++j) {
    Word v = m.columns()[j];
    Word c = Word{1} << j;
    while (v != 0) {
      const int p = std::countr_zero(v);
      if ((pivots >> p & 1) == 0) break;
      v ^= vec[p];
      c ^= comb[p];
    }
    if (v == 0) {
      out.push_back({c, w});
    } else {
      const int p = std::countr_zero(v);
      vec[p] = v;
      comb[p] = c;
      pivots |= Word{1} << p;
    }
  }
  return out;
}

GF2Matrix orthogonal_complement(const GF2Matrix& m) {
  const std::vector<GF2Vector> basis = null_space_basis(m);
  std::vector<Word> cols(m.num_columns(), 0);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (basis[t].bits >> i & 1) cols[i] |= Word{1} << t;
    }
  }
  return GF2Matrix(static_cast<int>(basis.size()), std::move(cols));
}

Word remove_bits(Word v, Word positions) {
  // Highest position first so lower positions keep their index.
  while (positions != 0) {
    const int p = kMaxWidth - 1 - std::countl_zero(positions);
    positions &= ~(Word{1} << p);
    const Word low = v & ((Word{1} << p) - 1);
    const Word high = p == kMaxWidth - 1 ? 0 : (v >> (p + 1)) << p;
    v = low | high;
  }
  return v;
}

}  // namespace bm
