#pragma once

// Connectivity census of an enumerated database.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bm/database.hpp"

namespace bm {

struct ClassifyReport {
  std::map<StratumId, std::size_t> counts;
  // Simple ones, read from the database.
  std::vector<CanonicalKey> internally_4connected;
  // Ones with loops or parallel pairs, keyed by matroid_key. These have at
  // most three elements and are found by direct search.
  std::vector<CanonicalKey> internally_4connected_nonsimple;
  std::vector<CanonicalKey> three_connected_only;  // 3-connected, not internally 4-connected
  // Members of three_connected_only with an internally 4-connected minor on
  // at least 6 elements other than M(K4), F7, F7* and M(K3,3).
  std::vector<CanonicalKey> exceptional;
  // (minor, host) pairs for single deletions and contractions, when asked.
  std::vector<std::pair<CanonicalKey, CanonicalKey>> minor_edges;
};

ClassifyReport classify(const MatroidDatabase& db, bool with_minor_edges = false);

// Catalog name of a key ("M12", "S3", ...) or empty.
std::string catalog_name(const CanonicalKey& key);

// Deterministic human-readable report.
std::string format_report(const ClassifyReport& report);

}  // namespace bm
