#pragma once

// Bit-packed GF(2) vectors and column matrices.
//
// A column is a machine word; bit i holds the entry of row i counted from
// the bottom of the printed matrix (least significant bit = bottom row).

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bm {

using Word = std::uint64_t;

inline constexpr int kMaxWidth = 64;

struct GF2Vector {
  Word bits = 0;
  int width = 1;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
};

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int width, std::vector<Word> columns);

  // Rows are given top to bottom, one character per column ('0'/'1').
  static GF2Matrix from_rows(std::span<const std::string> rows);

  int width() const { return width_; }
  std::size_t num_columns() const { return columns_.size(); }
  const std::vector<Word>& columns() const { return columns_; }
  GF2Vector column(std::size_t i) const { return {columns_[i], width_}; }

  // Row i (bit i of every column) as a bitmask over column indices.
  Word row(int i) const;

  // Rows printed top to bottom, most significant bit first.
  std::vector<std::string> to_rows() const;

 private:
  int width_ = 0;
  std::vector<Word> columns_;
};

// Incremental elimination basis; pivots on the lowest set bit.
class XorBasis {
 public:
  // Reduces v against the basis; the result is zero iff v is in the span.
  Word reduce(Word v) const {
    while (v != 0) {
      const int p = std::countr_zero(v);
      if ((pivots_ >> p & 1) == 0) return v;
      v ^= pivot_[p];
    }
    return 0;
  }

  bool contains(Word v) const { return reduce(v) == 0; }

  // The representative of v + span that is zero at every pivot position.
  Word normal_form(Word v) const {
    for (Word m = pivots_; m != 0; m &= m - 1) {
      const int p = std::countr_zero(m);
      if (v >> p & 1) v ^= pivot_[p];
    }
    return v;
  }

  // Returns true if v enlarged the span.
  bool insert(Word v) {
    v = reduce(v);
    if (v == 0) return false;
    pivot_[std::countr_zero(v)] = v;
    pivots_ |= Word{1} << std::countr_zero(v);
    ++size_;
    return true;
  }

  int size() const { return size_; }
  Word pivot_mask() const { return pivots_; }
  Word pivot(int bit) const { return (pivots_ >> bit & 1) ? pivot_[bit] : 0; }

 private:
  // Only entries flagged in pivots_ are meaningful.
  Word pivot_[kMaxWidth];
  Word pivots_ = 0;
  int size_ = 0;
};

int rank(std::span<const Word> columns);
int rank(const GF2Matrix& m);

// Basis of {x : m x = 0}; vector t is a characteristic vector over column
// indices (width = number of columns). Requires at most 64 columns.
std::vector<GF2Vector> null_space_basis(const GF2Matrix& m);

// A matrix on the same columns whose row space is the orthogonal complement
// of the row space of m. Column i of the result corresponds to column i of m.
GF2Matrix orthogonal_complement(const GF2Matrix& m);

// Drops the given bit positions from v and closes the gaps.
Word remove_bits(Word v, Word positions);

}  // namespace bm
