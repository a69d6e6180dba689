#pragma once

// Labelled binary matroids given by a column representation.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bm/gf2.hpp"
#include "bm/projcanon.hpp"

namespace bm {

class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Triple = std::array<std::string, 3>;

struct Separation {
  std::vector<std::string> side;
  int order = 0;  // lambda(side) = order - 1
};

class BinaryMatroid {
 public:
  BinaryMatroid() = default;  // U_{0,0}
  BinaryMatroid(int width, std::vector<Word> columns, std::vector<std::string> labels);

  // Labels default to "1", "2", ... in column order.
  static BinaryMatroid from_matrix(const GF2Matrix& m, std::vector<std::string> labels = {});
  static BinaryMatroid from_points(std::span<const Point> points, int width,
                                   std::vector<std::string> labels = {});

  int width() const { return width_; }
  std::size_t size() const { return columns_.size(); }
  const std::vector<Word>& columns() const { return columns_; }
  const std::vector<std::string>& labels() const { return labels_; }
  GF2Matrix matrix() const { return GF2Matrix(width_, columns_); }

  std::size_t index_of(const std::string& label) const;
  Word column_of(const std::string& label) const { return columns_[index_of(label)]; }

  int rank() const;
  int rank_of(std::span<const std::string> subset) const;
  // Subset given as a bitmask over element indices (at most 64 elements).
  int rank_of_mask(Word mask) const;

  BinaryMatroid delete_elements(std::span<const std::string> subset) const;
  BinaryMatroid contract_elements(std::span<const std::string> subset) const;
  BinaryMatroid restrict_to(std::span<const std::string> subset) const;
  BinaryMatroid delete_element(const std::string& e) const;
  BinaryMatroid contract_element(const std::string& e) const;

  // Drops loops and keeps the first element of each parallel class.
  BinaryMatroid simplify() const;
  BinaryMatroid dual() const;
  // Same matroid with width equal to rank.
  BinaryMatroid compact() const;

  bool is_simple() const;
  bool is_cosimple() const { return dual().is_simple(); }

  int lambda(std::span<const std::string> subset) const;
  int lambda_mask(Word mask) const;

  // Some X with lambda(X) <= k-1 and both sides of size >= k, if any.
  std::optional<Separation> find_separation(int k) const;
  bool is_connected() const { return !find_separation(1).has_value(); }
  bool is_3connected() const;
  // 1 disconnected, 2 connected, 3 3-connected, 4 internally 4-connected.
  // Returns as soon as the answer is known to be below cap.
  int connectivity_level(int cap = 4) const;
  bool is_internally_4connected() const;

  std::vector<Triple> triangles() const;
  std::vector<Triple> triads() const { return dual().triangles(); }

  // Nonzero columns after compaction to width = rank. Requires a simple
  // matroid of rank at most 16.
  std::vector<Point> points() const;

  // Printed rows, most significant bit on top.
  std::vector<std::string> to_rows() const { return matrix().to_rows(); }

 private:
  std::vector<std::string> labels_of_mask(Word mask) const;
  Word mask_of(std::span<const std::string> subset) const;

  int width_ = 0;
  std::vector<Word> columns_;
  std::vector<std::string> labels_;
};

// Isomorphism invariant covering loops and parallel elements: the canonical
// multiset key of the nonzero columns (repeats kept), preceded by one 0 per
// loop. Equals canonical_key of the points for simple matroids.
CanonicalKey matroid_key(const BinaryMatroid& m);

bool isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);

}  // namespace bm
