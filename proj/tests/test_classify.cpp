#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "bm/catalog.hpp"
#include "bm/classify.hpp"
#include "bm/generator.hpp"
#include "bm/minor.hpp"

using namespace bm;

namespace {

const MatroidDatabase& prism_free_rank5() {
  static const MatroidDatabase db = [] {
    EnumerationOptions options;
    options.max_rank = 5;
    options.excluded = {"PRISM"};
    return enumerate_minor_free(options);
  }();
  return db;
}

const ClassifyReport& report5() {
  static const ClassifyReport r = classify(prism_free_rank5(), true);
  return r;
}

std::set<std::string> names_of(const std::vector<CanonicalKey>& keys) {
  std::set<std::string> out;
  for (const CanonicalKey& k : keys) out.insert(catalog_name(k));
  return out;
}

}  // namespace

TEST(Classify, EmptyDatabase) {
  const ClassifyReport r = classify(MatroidDatabase());
  EXPECT_TRUE(r.counts.empty());
  EXPECT_TRUE(r.internally_4connected.empty());
  EXPECT_TRUE(r.three_connected_only.empty());
  EXPECT_TRUE(r.exceptional.empty());
  const std::string text = format_report(r);
  EXPECT_NE(text.find("total 0\n"), std::string::npos);
  EXPECT_NE(text.find("exceptional 0\n"), std::string::npos);
}

TEST(Classify, Rank5HasTheFortyTwoListedMatroids) {
  const ClassifyReport& r = report5();
  EXPECT_EQ(r.internally_4connected.size(), 39u);
  EXPECT_EQ(r.internally_4connected_nonsimple.size(), 3u);
  std::set<CanonicalKey> found(r.internally_4connected.begin(), r.internally_4connected.end());
  found.insert(r.internally_4connected_nonsimple.begin(), r.internally_4connected_nonsimple.end());
  std::set<CanonicalKey> listed;
  for (const CatalogEntry* e : internally_4connected_list()) {
    if (e->matroid.rank() <= 5) listed.insert(matroid_key(e->matroid));
  }
  EXPECT_EQ(listed.size(), 42u);
  EXPECT_EQ(found, listed);
  EXPECT_EQ(names_of(r.internally_4connected_nonsimple), (std::set<std::string>{"U01", "U12", "U13"}));
}

TEST(Classify, LevelsAgreeWithDirectChecks) {
  const ClassifyReport& r = report5();
  for (const CanonicalKey& k : r.internally_4connected) {
    EXPECT_TRUE(BinaryMatroid::from_points(k.points, k.width).is_internally_4connected());
  }
  for (std::size_t i = 0; i < r.three_connected_only.size(); i += 7) {
    const BinaryMatroid m = BinaryMatroid::from_points(r.three_connected_only[i].points,
                                                       r.three_connected_only[i].width);
    EXPECT_TRUE(m.is_3connected());
    EXPECT_FALSE(m.is_internally_4connected());
  }
}

TEST(Classify, ExceptionalMatchesMinorChainSearch) {
  const ClassifyReport& r = report5();
  EXPECT_EQ(names_of(r.exceptional), (std::set<std::string>{"S1", "S2", "S3", "S5"}));

  // Every minor is reached by single deletions and contractions, and a
  // simple minor survives simplification, so walking down through
  // simplified single-element minors finds every simple minor.
  std::set<CanonicalKey> large;
  std::vector<BinaryMatroid> large_matroids;
  for (const CatalogEntry* e : internally_4connected_list()) {
    const std::string& n = e->name;
    if (e->matroid.size() >= 6 && n != "M1" && n != "M2" && n != "M3" && n != "M14") {
      large.insert(matroid_key(e->matroid));
      large_matroids.push_back(e->matroid);
    }
  }
  std::set<CanonicalKey> expected;
  for (const CanonicalKey& k : r.three_connected_only) {
    std::set<CanonicalKey> seen{k};
    std::vector<CanonicalKey> todo{k};
    bool hit = false;
    while (!todo.empty() && !hit) {
      const CanonicalKey y = todo.back();
      todo.pop_back();
      for (Point e : y.points) {
        std::vector<Point> del;
        for (Point p : y.points) {
          if (p != e) del.push_back(p);
        }
        // Contracting e identifies p with p^e; the smaller names the coset.
        std::vector<Point> con;
        for (Point p : y.points) {
          if (p != e) con.push_back(std::min(p, p ^ e));
        }
        for (std::vector<Point>& pts : {std::ref(del), std::ref(con)}) {
          std::sort(pts.begin(), pts.end());
          pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
          const BinaryMatroid m = BinaryMatroid::from_points(pts, y.width);
          const CanonicalKey mk = matroid_key(m);
          if (large.count(mk)) hit = true;
          if (seen.insert(mk).second) todo.push_back(mk);
        }
      }
    }
    if (hit) expected.insert(k);
  }
  EXPECT_EQ(std::set<CanonicalKey>(r.exceptional.begin(), r.exceptional.end()), expected);
  for (const CanonicalKey& k : r.exceptional) {
    EXPECT_TRUE(has_minor_list(BinaryMatroid::from_points(k.points, k.width), large_matroids));
  }
}

TEST(Classify, MinorEdgesPointIntoTheDatabase) {
  const ClassifyReport& r = report5();
  ASSERT_FALSE(r.minor_edges.empty());
  for (const auto& [minor, host] : r.minor_edges) {
    EXPECT_TRUE(prism_free_rank5().contains(minor));
    EXPECT_TRUE(prism_free_rank5().contains(host));
    EXPECT_LT(minor.size(), host.size());
  }
}

TEST(Classify, ReportListsCountsAndNames) {
  const std::string text = format_report(report5());
  EXPECT_NE(text.find("internally-4-connected total 42\n"), std::string::npos);
  EXPECT_NE(text.find("stratum r=5 k=17 classes="), std::string::npos);
  EXPECT_NE(text.find(" M36\n"), std::string::npos);
  EXPECT_NE(text.find(" S5\n"), std::string::npos);
  EXPECT_EQ(text, format_report(classify(prism_free_rank5(), true)));
}

TEST(Classify, RejectsADatabaseThatIsNotMinorClosed) {
  MatroidDatabase db;
  db.set_stratum({3, 7}, {matroid_key(catalog_entry("M2").matroid)});
  EXPECT_THROW(classify(db), std::logic_error);
}
