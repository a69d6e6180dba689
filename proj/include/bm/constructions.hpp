#pragma once

// Named binary matroids and the operations that build them.

#include <span>
#include <string>
#include <vector>

#include "bm/graph.hpp"
#include "bm/matroid.hpp"

namespace bm {

// Columns are the binary encodings of the values (least significant bit in
// the bottom row); each element is labelled by its value.
BinaryMatroid decode_sequence(std::span<const Word> values, int rank);

// PG(r-1,2): every nonzero vector of GF(2)^r, labelled by its value.
BinaryMatroid projective_geometry(int r);

// AG(3,2) as [I_4 | J - I], labelled 1..8.
BinaryMatroid affine_geometry_32();

// U_{r,n} for the binary cases (r <= 1, n - r <= 1, or U_{2,3}).
BinaryMatroid uniform_matroid(int r, int n);

// m1 in the low rows, m2 above it. Labels must be disjoint.
BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2);

// Direct sum plus an element "(a,b)" on the line through a and b for every
// a in m1, b in m2, ordered by (a, b) in element order.
BinaryMatroid cat(const BinaryMatroid& m1, const BinaryMatroid& m2);

// 3-sum along the common triangle t. Ground set is (E1 - t) then (E2 - t).
BinaryMatroid three_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                        const std::vector<std::string>& t);

// Adds an element parallel to e.
BinaryMatroid parallel_extension(const BinaryMatroid& m, const std::string& e,
                                 const std::string& label);

// Signed incidence over GF(2) with one row per vertex, dropping the first
// vertex of each component. The lowest remaining vertex is the top row.
// Edge {u,v} is labelled "u-v".
BinaryMatroid cycle_matroid(const SimpleGraph& g);

}  // namespace bm
