#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "bm/catalog.hpp"
#include "bm/generator.hpp"
#include "bm/minor.hpp"
#include "bm/pointset.hpp"
#include "oracle.hpp"

using namespace bm;

namespace {

const MatroidDatabase& unrestricted_rank4() {
  static const MatroidDatabase db = [] {
    EnumerationOptions options;
    options.max_rank = 4;
    return enumerate_minor_free(options);
  }();
  return db;
}

const MatroidDatabase& prism_free_rank5() {
  static const MatroidDatabase db = [] {
    EnumerationOptions options;
    options.max_rank = 5;
    options.excluded = {"PRISM"};
    return enumerate_minor_free(options);
  }();
  return db;
}

// Orbit counts of subsets of PG(r-1,2), keyed by (rank of the subset, size).
std::map<std::pair<int, int>, int> orbit_counts(int r) {
  const oracle::SubsetOrbits orbits = oracle::subset_orbits(r);
  std::map<std::pair<int, int>, int> out;
  for (const auto& [rep, len] : orbits.size) {
    const std::vector<Point> pts = oracle::mask_points(rep);
    ++out[{span_rank(pts), static_cast<int>(pts.size())}];
  }
  return out;
}

}  // namespace

TEST(Generator, Rank3CountsMatchOrbitPartition) {
  const auto counts = orbit_counts(3);
  for (int k = 0; k <= 7; ++k) {
    for (int j = 0; j <= 3; ++j) {
      const auto it = counts.find({j, k});
      const std::size_t expected = it == counts.end() ? 0 : it->second;
      EXPECT_EQ(unrestricted_rank4().stratum({j, k}).size(), expected) << "rank " << j << " size " << k;
    }
  }
}

TEST(Generator, Rank4CountsMatchOrbitPartition) {
  const auto counts = orbit_counts(4);
  std::size_t total = 0;
  for (int k = 0; k <= 15; ++k) {
    const auto it = counts.find({4, k});
    const std::size_t expected = it == counts.end() ? 0 : it->second;
    EXPECT_EQ(unrestricted_rank4().stratum({4, k}).size(), expected) << "size " << k;
    total += expected;
  }
  // Spanning subsets of PG(3,2) up to isomorphism.
  EXPECT_GT(total, 0u);
}

TEST(Generator, SmallSubsetsOfRank5MatchCanonicalCensus) {
  std::map<int, std::set<CanonicalKey>> census;
  const Point top = 31;
  std::vector<Point> pts;
  auto rec = [&](auto&& self, Point from) -> void {
    const Compaction c = compact(pts, 5);
    census[static_cast<int>(pts.size())].insert(canonical_key(c.points, c.rank));
    if (pts.size() == 4) return;
    for (Point p = from; p <= top; ++p) {
      pts.push_back(p);
      self(self, p + 1);
      pts.pop_back();
    }
  };
  rec(rec, 1);
  for (int k = 0; k <= 4; ++k) {
    std::size_t listed = 0;
    for (int j = 0; j <= 4; ++j) listed += unrestricted_rank4().stratum({j, k}).size();
    EXPECT_EQ(listed, census[k].size()) << k;
  }
}

TEST(Generator, KeysAreCanonicalAndDistinct) {
  for (const MatroidDatabase* db : {&unrestricted_rank4(), &prism_free_rank5()}) {
    std::set<CanonicalKey> seen;
    for (const auto& [id, keys] : db->strata()) {
      for (const CanonicalKey& k : keys) {
        EXPECT_EQ(canonical_key(k.points, k.width), k);
        EXPECT_TRUE(seen.insert(k).second) << k.to_string();
      }
    }
  }
}

TEST(Generator, PrismFreeDatabaseIsMinorClosedAndExcludesThePrism) {
  const MatroidDatabase& db = prism_free_rank5();
  EXPECT_FALSE(db.contains(matroid_key(prism())));
  EXPECT_TRUE(db.contains(matroid_key(catalog_entry("M36").matroid)));
  std::size_t checked = 0;
  for (const auto& [id, keys] : db.strata()) {
    for (std::size_t i = 0; i < keys.size(); i += 5) {
      const CanonicalKey& k = keys[i];
      if (k.width == 0) continue;
      EXPECT_TRUE(minor_free_by_database(k.points, k.width, db)) << k.to_string();
      if (k.size() >= 9) {
        const BinaryMatroid m = BinaryMatroid::from_points(k.points, k.width);
        EXPECT_FALSE(has_minor(m, prism())) << k.to_string();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10u);
  // Rank 5 prism-free classes stop growing well below PG(4,2).
  EXPECT_TRUE(db.rank_complete(5));
  EXPECT_TRUE(db.stratum({5, 18}).empty());
}

TEST(Generator, ProgressLinesAndCheckpoint) {
  const auto dir = std::filesystem::temp_directory_path() / "bm_test_generator";
  std::filesystem::create_directories(dir);
  std::ostringstream progress;
  EnumerationOptions options;
  options.max_rank = 3;
  options.excluded = {"PRISM"};
  options.progress = &progress;
  options.checkpoint = dir / "ck.bmdb";
  const MatroidDatabase db = enumerate_minor_free(options);
  EXPECT_EQ(load_db(options.checkpoint), db);

  const std::regex line(R"(r=\d+ k=\d+ classes=\d+ elapsed=\d+\.\d\d)");
  std::istringstream in(progress.str());
  std::string s;
  std::size_t lines = 0;
  while (std::getline(in, s)) {
    EXPECT_TRUE(std::regex_match(s, line)) << s;
    ++lines;
  }
  // One line per stored stratum.
  EXPECT_EQ(lines, db.strata().size());
  std::filesystem::remove_all(dir);
}

TEST(Generator, ResumeGivesTheSameBytes) {
  EnumerationOptions options;
  options.max_rank = 3;
  options.excluded = {"PRISM"};
  const MatroidDatabase partial = enumerate_minor_free(options);
  options.max_rank = 4;
  const MatroidDatabase direct = enumerate_minor_free(options);
  const MatroidDatabase resumed = enumerate_minor_free(options, &partial);
  EXPECT_EQ(write_db(resumed), write_db(direct));

  // A database cut after a few levels, as a checkpoint would leave it.
  MatroidDatabase cut(direct.header());
  for (const auto& [id, keys] : direct.strata()) {
    if (id.rank < 4 || id.size <= 6) cut.set_stratum(id, keys);
  }
  for (int r : {0, 1, 2, 3}) cut.mark_complete(r);
  EXPECT_EQ(write_db(enumerate_minor_free(options, &cut)), write_db(direct));

  options.excluded = {"M1"};
  EXPECT_THROW(enumerate_minor_free(options, &partial), DatabaseError);
}

TEST(Generator, WorkerCountDoesNotChangeOutput) {
  EnumerationOptions options;
  options.max_rank = 5;
  options.excluded = {"PRISM"};
  options.jobs = 3;
  EXPECT_EQ(write_db(enumerate_minor_free(options)), write_db(prism_free_rank5()));
}

TEST(Generator, MaxSizeStopsEachRankEarly) {
  EnumerationOptions options;
  options.max_rank = 4;
  options.max_size = 5;
  const MatroidDatabase db = enumerate_minor_free(options);
  for (const auto& [id, keys] : db.strata()) EXPECT_LE(id.size, 5);
  EXPECT_EQ(db.stratum({4, 5}).size(), unrestricted_rank4().stratum({4, 5}).size());
  EXPECT_FALSE(db.rank_complete(4));
  EXPECT_EQ(db.header().settings.at("max-size"), "5");
}
