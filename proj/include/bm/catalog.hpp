#pragma once

// The named matroids: the internally 4-connected prism-free list M1-M36,
// the sporadic matroids S1-S5, the small uniform matroids, and a few
// reference objects (geometries, graphs, the prism).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bm/matroid.hpp"

namespace bm {

class CatalogError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ExpectedFlags {
  int size = 0;
  int rank = 0;
  bool three_connected = false;
  bool internally_4connected = false;
  bool prism_free = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;  // e.g. "M(K5)"; empty when there is no common name
  BinaryMatroid matroid;
  ExpectedFlags expected;
};

// Loaded once; size and rank of every entry are checked against the
// expected flags on load.
const std::vector<CatalogEntry>& catalog();

// Case-insensitive lookup.
const CatalogEntry& catalog_entry(std::string_view name);
const CatalogEntry* find_catalog_entry(std::string_view name);

// The 42 internally 4-connected prism-free matroids: the six small uniform
// matroids and M1-M36, in that order.
std::vector<const CatalogEntry*> internally_4connected_list();

// S1-S5.
std::vector<const CatalogEntry*> sporadic_list();

// Cycle matroid of the triangular prism.
const BinaryMatroid& prism();

}  // namespace bm
