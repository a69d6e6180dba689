#include "bm/generator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include "bm/catalog.hpp"
#include "bm/minor.hpp"
#include "bm/pointset.hpp"

namespace bm {

ExclusionFilter::ExclusionFilter(std::vector<BinaryMatroid> targets, const MatroidDatabase* db)
    : db_(db) {
  for (const BinaryMatroid& t : targets) {
    const BinaryMatroid s = t.simplify();
    if (s.size() != t.size()) throw MatroidError("excluded minors must be simple");
    const std::vector<Point> pts = s.points();
    targets_.push_back(Target{canonical_key(pts, s.rank()), static_cast<int>(s.size()), s.rank()});
  }
}

bool ExclusionFilter::keep(const CanonicalKey& key) const {
  const int n = static_cast<int>(key.size());
  const int r = key.width;
  bool could_contain_smaller = false;
  for (const Target& t : targets_) {
    if (t.key == key) return false;
    if (n > t.size && r >= t.rank && n - r >= t.size - t.rank) could_contain_smaller = true;
  }
  if (!could_contain_smaller) return true;
  return minor_free_by_database(key.points, key.width, *db_);
}

namespace {

// Candidates grown from one parent, in acceptance order.
void extend_parent(const CanonicalKey& parent, int r, bool same_rank, const ExclusionFilter& filter,
                   std::vector<CanonicalKey>& out) {
  std::vector<Point> reps;
  if (same_rank) {
    const StabilizerGroup g = stabilizer(parent.points, r);
    std::vector<Point> outside;
    std::size_t j = 0;
    for (Point p = 1; p < (Point{1} << r); ++p) {
      while (j < parent.points.size() && parent.points[j] < p) ++j;
      if (j < parent.points.size() && parent.points[j] == p) continue;
      outside.push_back(p);
    }
    for (const auto& orbit : orbits_on_points(g, outside)) reps.push_back(orbit.front());
  } else {
    // The stabilizer of a set is transitive on the points off its span.
    reps.push_back(Point{1} << (r - 1));
  }
  for (Point x : reps) {
    std::vector<Point> y(parent.points);
    y.insert(std::upper_bound(y.begin(), y.end(), x), x);
    CanonicalForm form = canonical_form(y, r);
    if (!std::binary_search(form.least_orbit.begin(), form.least_orbit.end(), x)) continue;
    if (filter.active() && !filter.keep(form.key)) continue;
    out.push_back(std::move(form.key));
  }
}

}  // namespace

std::vector<CanonicalKey> orderly_step(std::span<const CanonicalKey> same_rank,
                                       std::span<const CanonicalKey> lower_rank, int r,
                                       const ExclusionFilter& filter, unsigned jobs) {
  const std::size_t total = same_rank.size() + lower_rank.size();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  std::vector<std::vector<CanonicalKey>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      // Strided split keeps the work balanced across workers.
      for (std::size_t i = w; i < total; i += jobs) {
        if (i < same_rank.size()) {
          extend_parent(same_rank[i], r, true, filter, parts[w]);
        } else {
          extend_parent(lower_rank[i - same_rank.size()], r, false, filter, parts[w]);
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CanonicalKey> merged;
  for (auto& p : parts) {
    merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(merged.begin(), merged.end());
  const auto dup = std::adjacent_find(merged.begin(), merged.end());
  if (dup != merged.end()) {
    throw std::logic_error("orderly step produced " + dup->to_string() + " twice");
  }
  return merged;
}

namespace {

DatabaseHeader header_for(const EnumerationOptions& o) {
  DatabaseHeader h;
  h.max_rank = o.max_rank;
  h.excluded = o.excluded;
  if (o.max_size >= 0) h.settings["max-size"] = std::to_string(o.max_size);
  return h;
}

bool has_lower_classes_from(const MatroidDatabase& db, int rank, int size) {
  for (const auto& [id, keys] : db.strata()) {
    if (id.rank == rank && id.size >= size && !keys.empty()) return true;
  }
  return false;
}

}  // namespace

MatroidDatabase enumerate_minor_free(const EnumerationOptions& options,
                                     const MatroidDatabase* resume) {
  if (options.max_rank < 0 || options.max_rank > kMaxProjectiveWidth) {
    throw std::invalid_argument("max rank must lie in [0, 16]");
  }
  std::vector<BinaryMatroid> targets;
  for (const std::string& name : options.excluded) targets.push_back(catalog_entry(name).matroid);

  MatroidDatabase db(header_for(options));
  if (resume != nullptr) {
    DatabaseHeader expected = header_for(options);
    DatabaseHeader stored = resume->header();
    expected.max_rank = stored.max_rank = 0;
    if (!(expected == stored)) {
      throw DatabaseError("resume database was built with different exclusions or settings");
    }
    db = *resume;
    db.header().max_rank = std::max(options.max_rank, resume->header().max_rank);
  }
  const ExclusionFilter filter(targets, &db);

  const auto start = std::chrono::steady_clock::now();
  auto report = [&](int r, int k, std::size_t classes) {
    if (options.progress == nullptr) return;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    *options.progress << "r=" << r << " k=" << k << " classes=" << classes << " elapsed=" << buf
                      << std::endl;
  };
  auto checkpoint = [&] {
    if (!options.checkpoint.empty()) save_db(db, options.checkpoint);
  };

  if (!db.has_stratum({0, 0})) {
    db.set_stratum({0, 0}, {CanonicalKey{0, {}}});
    report(0, 0, 1);
  }
  db.mark_complete(0);
  checkpoint();

  for (int r = 1; r <= options.max_rank; ++r) {
    if (db.rank_complete(r)) continue;
    bool truncated = false;
    for (int k = r - 1;; ++k) {
      if (options.max_size >= 0 && k + 1 > options.max_size) {
        truncated = true;
        break;
      }
      const StratumId next{r, k + 1};
      if (db.has_stratum(next)) continue;
      static const std::vector<CanonicalKey> kNone;
      // Rank r needs at least r points.
      const std::vector<CanonicalKey>& same = k >= r ? db.stratum({r, k}) : kNone;
      const bool lower_left = has_lower_classes_from(db, r - 1, k);
      if (same.empty() && !lower_left) break;
      const std::vector<CanonicalKey>& lower = db.stratum({r - 1, k});
      std::vector<CanonicalKey> level = orderly_step(same, lower, r, filter, options.jobs);
      const std::size_t n = level.size();
      db.set_stratum(next, std::move(level));
      report(r, k + 1, n);
      checkpoint();
    }
    if (!truncated) {
      db.mark_complete(r);
      checkpoint();
    }
  }
  return db;
}

}  // namespace bm
