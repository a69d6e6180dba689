#include "bm/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bm/catalog.hpp"
#include "bm/minor.hpp"
#include "bm/pointset.hpp"
#include "bm/verify.hpp"

namespace bm {

namespace {

std::vector<std::string> labels_for(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Keys of si(Y\e) and si(Y/e) over all e, deduplicated.
std::vector<CanonicalKey> single_minors(const CanonicalKey& y) {
  std::set<CanonicalKey> out;
  const int r = y.width;
  for (Point e : y.points) {
    const std::vector<Point> del = delete_point(y.points, e);
    // Deleting a coloop gives the contraction.
    if (span_rank(del) == r) out.insert(canonical_key(del, r));
    out.insert(canonical_key(contract_point(y.points, e), r - 1));
  }
  return {out.begin(), out.end()};
}

// Internally 4-connected matroids with a loop or a parallel pair. A loop or
// a parallel pair is a 1- or 2-separation once there are four elements, so
// only multisets of at most three columns need checking.
std::vector<CanonicalKey> nonsimple_internally_4connected(const MatroidDatabase& db) {
  std::vector<BinaryMatroid> excluded;
  for (const std::string& name : db.header().excluded) excluded.push_back(catalog_entry(name).matroid);
  std::vector<CanonicalKey> out;
  for (const CanonicalKey& k : small_internally_4connected(std::min(3, db.header().max_rank), 3)) {
    const bool simple = (k.points.empty() || k.points.front() != 0) &&
                        std::adjacent_find(k.points.begin(), k.points.end()) == k.points.end();
    if (simple) continue;
    const BinaryMatroid m(k.width, std::vector<Word>(k.points.begin(), k.points.end()),
                          labels_for(k.size()));
    if (!has_minor_list(m, excluded)) out.push_back(k);
  }
  return out;
}

}  // namespace

ClassifyReport classify(const MatroidDatabase& db, bool with_minor_edges) {
  ClassifyReport report;

  // Excluded from the "large" internally 4-connected minors.
  std::set<CanonicalKey> small_names;
  for (const char* name : {"M1", "M2", "M3", "M14"}) {
    small_names.insert(matroid_key(catalog_entry(name).matroid));
  }

  // Strata are keyed by (rank, size); walk them by size so that every
  // single-element minor is decided before its hosts.
  std::vector<const CanonicalKey*> order;
  for (const auto& [id, keys] : db.strata()) {
    report.counts[id] = keys.size();
    for (const CanonicalKey& k : keys) order.push_back(&k);
  }
  std::stable_sort(order.begin(), order.end(), [](const CanonicalKey* a, const CanonicalKey* b) {
    return a->size() < b->size();
  });

  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> has_large;
  for (const CanonicalKey* key : order) {
    const BinaryMatroid m = BinaryMatroid(key->width,
                                          std::vector<Word>(key->points.begin(), key->points.end()),
                                          labels_for(key->size()));
    const int level = m.connectivity_level(4);
    if (level == 4) {
      report.internally_4connected.push_back(*key);
    } else if (level == 3) {
      report.three_connected_only.push_back(*key);
    }
    bool large = level == 4 && key->size() >= 6 && small_names.count(*key) == 0;
    for (const CanonicalKey& minor : single_minors(*key)) {
      if (with_minor_edges) report.minor_edges.emplace_back(minor, *key);
      if (large) continue;
      const auto it = has_large.find(minor);
      if (it == has_large.end()) {
        throw std::logic_error("database is not minor-closed: " + minor.to_string() +
                               " is missing for " + key->to_string());
      }
      large = it->second;
    }
    has_large.emplace(*key, large);
    if (level == 3 && large) report.exceptional.push_back(*key);
  }

  report.internally_4connected_nonsimple = nonsimple_internally_4connected(db);

  std::sort(report.internally_4connected.begin(), report.internally_4connected.end());
  std::sort(report.three_connected_only.begin(), report.three_connected_only.end());
  std::sort(report.exceptional.begin(), report.exceptional.end());
  std::sort(report.minor_edges.begin(), report.minor_edges.end());
  return report;
}

std::string catalog_name(const CanonicalKey& key) {
  static const std::unordered_map<CanonicalKey, std::string, CanonicalKeyHash> names = [] {
    std::unordered_map<CanonicalKey, std::string, CanonicalKeyHash> out;
    for (const CatalogEntry& e : catalog()) {
      if (e.matroid.rank() > kMaxProjectiveWidth) continue;
      out.emplace(matroid_key(e.matroid), e.name);  // first name wins
    }
    return out;
  }();
  const auto it = names.find(key);
  return it == names.end() ? std::string() : it->second;
}

std::string format_report(const ClassifyReport& report) {
  std::ostringstream out;
  std::size_t total = 0;
  for (const auto& [id, n] : report.counts) {
    out << "stratum r=" << id.rank << " k=" << id.size << " classes=" << n << '\n';
    total += n;
  }
  out << "total " << total << '\n';
  auto list = [&](const char* title, const std::vector<CanonicalKey>& keys) {
    out << title << ' ' << keys.size() << '\n';
    for (const CanonicalKey& k : keys) {
      const std::string name = catalog_name(k);
      out << "  " << k.to_string();
      if (!name.empty()) out << ' ' << name;
      out << '\n';
    }
  };
  const std::size_t i4c =
      report.internally_4connected.size() + report.internally_4connected_nonsimple.size();
  out << "internally-4-connected total " << i4c << '\n';
  list("internally-4-connected simple", report.internally_4connected);
  list("internally-4-connected non-simple", report.internally_4connected_nonsimple);
  list("3-connected-only", report.three_connected_only);
  list("exceptional", report.exceptional);
  if (!report.minor_edges.empty()) {
    out << "minor-edges " << report.minor_edges.size() << '\n';
    for (const auto& [minor, host] : report.minor_edges) {
      out << "  " << minor.to_string() << " < " << host.to_string() << '\n';
    }
  }
  return out.str();
}

}  // namespace bm
