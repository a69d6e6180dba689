#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bm/pointset.hpp"
#include "bm/projcanon.hpp"
#include "oracle.hpp"

namespace bm {
namespace {

const auto& group3() {
  static const auto g = oracle::general_linear_group(3);
  return g;
}

const auto& group4() {
  static const auto g = oracle::general_linear_group(4);
  return g;
}

TEST(GeneralLinearGroup, OracleOrders) {
  EXPECT_EQ(group3().size(), 168u);
  EXPECT_EQ(group4().size(), 20160u);
  EXPECT_EQ(general_linear_order(3), 168u);
  EXPECT_EQ(general_linear_order(4), 20160u);
  EXPECT_EQ(general_linear_order(5), 9999360u);
  EXPECT_EQ(general_linear_order(0), 1u);
  EXPECT_THROW(general_linear_order(9), std::overflow_error);
}

TEST(CanonicalKey, BasesShareAKey) {
  const std::vector<Point> a = {1, 2, 4, 8};
  const std::vector<Point> b = {7, 11, 13, 14};
  EXPECT_EQ(canonical_key(a, 4), canonical_key(b, 4));
  EXPECT_EQ(canonical_key(a, 4).to_string(), "r=4;1,2,4,8");
}

TEST(CanonicalKey, WholeGeometryIsFixed) {
  std::vector<Point> all;
  for (Point p = 1; p < 16; ++p) all.push_back(p);
  EXPECT_EQ(canonical_key(all, 4).points, all);
}

TEST(CanonicalKey, EmptySet) {
  EXPECT_EQ(canonical_key({}, 5).to_string(), "r=0;");
}

TEST(CanonicalKey, RejectsZeroAndOutOfRange) {
  const std::vector<Point> zero = {0, 1};
  const std::vector<Point> big = {8};
  EXPECT_THROW(canonical_key(zero, 3), CanonError);
  EXPECT_THROW(canonical_key(big, 3), CanonError);
}

TEST(CanonicalKey, MatchesBruteForceMinimumOnEverySpanningSubsetAtRankThree) {
  for (std::uint32_t mask = 1; mask < 128; ++mask) {
    const auto pts = oracle::mask_points(mask);
    if (span_rank(pts) != 3) continue;
    EXPECT_EQ(canonical_key(pts, 3).points, oracle::min_image(group3(), pts)) << mask;
  }
}

TEST(CanonicalKey, MatchesBruteForceMinimumOnSampledSpanningSubsetsAtRankFour) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 150) {
    const std::uint32_t mask = static_cast<std::uint32_t>(rng()) & 0x7fff;
    const auto pts = oracle::mask_points(mask);
    if (span_rank(pts) != 4) continue;
    EXPECT_EQ(canonical_key(pts, 4).points, oracle::min_image(group4(), pts)) << mask;
    ++checked;
  }
}

TEST(CanonicalKey, PartitionsRankThreeSubsetsIntoOrbits) {
  const auto orbits = oracle::subset_orbits(3);
  std::map<std::uint32_t, CanonicalKey> key_of_rep;
  std::map<CanonicalKey, std::uint32_t> rep_of_key;
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    const auto key = canonical_key(oracle::mask_points(mask), 3);
    const std::uint32_t rep = orbits.rep[mask];
    const auto [it, fresh] = key_of_rep.emplace(rep, key);
    EXPECT_EQ(it->second, key) << "orbit split by keys at mask " << mask;
    const auto [jt, fresh2] = rep_of_key.emplace(key, rep);
    EXPECT_EQ(jt->second, rep) << "key shared by two orbits at mask " << mask;
  }
  EXPECT_EQ(key_of_rep.size(), orbits.size.size());
}

TEST(CanonicalKey, PartitionsRankFourSubsetsIntoOrbits) {
  const auto orbits = oracle::subset_orbits(4);
  std::map<std::uint32_t, CanonicalKey> key_of_rep;
  std::map<CanonicalKey, std::uint32_t> rep_of_key;
  for (std::uint32_t mask = 0; mask < 32768; ++mask) {
    const auto key = canonical_key(oracle::mask_points(mask), 4);
    const std::uint32_t rep = orbits.rep[mask];
    const auto [it, fresh] = key_of_rep.emplace(rep, key);
    ASSERT_EQ(it->second, key) << "orbit split by keys at mask " << mask;
    const auto [jt, fresh2] = rep_of_key.emplace(key, rep);
    ASSERT_EQ(jt->second, rep) << "key shared by two orbits at mask " << mask;
  }
}

TEST(CanonicalKey, CanonicalSetsAreFixedPoints) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    std::vector<Point> pts;
    for (Point p = 1; p < (Point{1} << r); ++p) {
      if (rng() % 3 == 0) pts.push_back(p);
    }
    const CanonicalKey k = canonical_key(pts, r);
    EXPECT_EQ(canonical_key(k.points, k.width), k);
  }
}

TEST(CanonicalKey, IndependentOfCompletionBasis) {
  // The same rank-2 set embedded along different coordinate choices.
  const std::vector<Point> a = {1, 2, 3};
  const std::vector<Point> b = {12, 5, 9};
  const std::vector<Point> c = {16, 24, 8};
  EXPECT_EQ(canonical_key(a, 5), canonical_key(b, 5));
  EXPECT_EQ(canonical_key(a, 5), canonical_key(c, 5));
  EXPECT_EQ(canonical_key(a, 5).width, 2);
}

TEST(CanonicalKey, InvariantUnderRandomGroupElements) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    std::vector<Point> pts;
    for (Point p = 1; p < (Point{1} << r); ++p) {
      if (rng() % 4 == 0) pts.push_back(p);
    }
    const auto g = oracle::random_element(r, rng);
    EXPECT_EQ(canonical_key(pts, r), canonical_key(oracle::image(g, pts), r));
  }
}

TEST(CanonicalKey, StringRoundTripAndErrors) {
  const CanonicalKey k{4, {1, 2, 4, 8, 15}};
  EXPECT_EQ(CanonicalKey::parse(k.to_string()), k);
  EXPECT_EQ(CanonicalKey::parse("r=0;"), (CanonicalKey{0, {}}));
  EXPECT_THROW(CanonicalKey::parse("r=3;1,2,9"), CanonError);
  EXPECT_THROW(CanonicalKey::parse("r=3;2,1"), CanonError);
  EXPECT_THROW(CanonicalKey::parse("x=3;1"), CanonError);
  EXPECT_THROW(CanonicalKey::parse("r=3;1,"), CanonError);
  EXPECT_THROW(CanonicalKey::parse("r=3"), CanonError);
}

TEST(CanonicalForm, MapSendsInputOntoKey) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    std::vector<Point> pts;
    for (Point p = 1; p < (Point{1} << r); ++p) {
      if (rng() % 3 == 0) pts.push_back(p);
    }
    if (span_rank(pts) != r) continue;
    const CanonicalForm f = canonical_form(pts, r);
    std::vector<Point> img;
    for (Point p : pts) img.push_back(f.to_canonical.apply(p));
    std::sort(img.begin(), img.end());
    EXPECT_EQ(img, f.key.points);
  }
}

TEST(CanonicalMultisetKey, ParallelCopiesAreCounted) {
  const std::vector<Point> a = {1, 1, 2};
  const std::vector<Point> b = {1, 2, 2};
  const std::vector<Point> c = {1, 2, 3};
  EXPECT_EQ(canonical_multiset_key(a, 2), canonical_multiset_key(b, 2));
  EXPECT_NE(canonical_multiset_key(a, 2), canonical_multiset_key(c, 2));
  EXPECT_EQ(canonical_multiset_key(a, 2).size(), 3u);
}

std::uint64_t brute_stabilizer_order(const std::vector<std::vector<Point>>& group,
                                     std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  std::uint64_t n = 0;
  for (const auto& g : group) n += oracle::image(g, pts) == pts;
  return n;
}

TEST(Stabilizer, WholePlaneAndEmptySet) {
  const std::vector<Point> fano = {1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(stabilizer(fano, 3).order, 168u);
  EXPECT_EQ(stabilizer({}, 3).order, 168u);
}

TEST(Stabilizer, OrdersMatchBruteForceAtRankThree) {
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    const auto pts = oracle::mask_points(mask);
    const StabilizerGroup g = stabilizer(pts, 3);
    EXPECT_EQ(g.order, brute_stabilizer_order(group3(), pts)) << mask;
    for (const LinearMap& m : g.generators) {
      EXPECT_EQ(oracle::image(m.images(), pts), pts);
    }
  }
}

TEST(Stabilizer, OrdersMatchBruteForceAtRankFour) {
  const std::vector<Point> basis = {1, 2, 4, 8};
  EXPECT_EQ(stabilizer(basis, 4).order, brute_stabilizer_order(group4(), basis));
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = oracle::mask_points(static_cast<std::uint32_t>(rng()) & 0x7fff);
    EXPECT_EQ(stabilizer(pts, 4).order, brute_stabilizer_order(group4(), pts));
  }
}

// Orbits of the full stabilizer on all points, by brute force.
std::vector<std::vector<Point>> brute_orbits(const std::vector<std::vector<Point>>& group,
                                             std::vector<Point> pts, int r) {
  std::sort(pts.begin(), pts.end());
  std::vector<std::vector<Point>> stab;
  for (const auto& g : group) {
    if (oracle::image(g, pts) == pts) stab.push_back(g);
  }
  std::set<std::vector<Point>> orbits;
  for (Point p = 1; p < (Point{1} << r); ++p) {
    std::set<Point> orbit;
    for (const auto& g : stab) orbit.insert(oracle::map_point(g, p));
    orbits.insert(std::vector<Point>(orbit.begin(), orbit.end()));
  }
  return std::vector<std::vector<Point>>(orbits.begin(), orbits.end());
}

TEST(OrbitsOnPoints, GeneratorsReachFullOrbits) {
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    const auto pts = oracle::mask_points(mask);
    const auto g = stabilizer(pts, 3);
    std::vector<Point> all = {1, 2, 3, 4, 5, 6, 7};
    auto got = orbits_on_points(g, all);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute_orbits(group3(), pts, 3)) << mask;
  }
  std::mt19937_64 rng(31);
  std::vector<Point> all;
  for (Point p = 1; p < 16; ++p) all.push_back(p);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = oracle::mask_points(static_cast<std::uint32_t>(rng()) & 0x7fff);
    auto got = orbits_on_points(stabilizer(pts, 4), all);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute_orbits(group4(), pts, 4));
  }
}

TEST(OrbitsOnPoints, LineThroughTwoPoints) {
  const std::vector<Point> pair = {1, 2};
  const std::vector<Point> rest = {3, 4, 5, 6, 7};
  const auto orbits = orbits_on_points(stabilizer(pair, 3), rest);
  EXPECT_EQ(orbits, (std::vector<std::vector<Point>>{{3}, {4, 5, 6, 7}}));
}

TEST(OrbitsOnPoints, TrivialGroupGivesSingletons) {
  StabilizerGroup g;
  g.width = 3;
  const std::vector<Point> dom = {5, 1, 3};
  EXPECT_EQ(orbits_on_points(g, dom), (std::vector<std::vector<Point>>{{1}, {3}, {5}}));
}

// Every x sent to the least key point by some minimizing map.
std::vector<Point> brute_least_orbit(const std::vector<std::vector<Point>>& group,
                                     const std::vector<Point>& pts) {
  const auto best = oracle::min_image(group, pts);
  std::set<Point> out;
  for (const auto& g : group) {
    if (oracle::image(g, pts) != best) continue;
    for (Point p : pts) {
      if (oracle::map_point(g, p) == best.front()) out.insert(p);
    }
  }
  return std::vector<Point>(out.begin(), out.end());
}

TEST(CanonicalLeastOrbit, MatchesBruteForce) {
  for (std::uint32_t mask = 1; mask < 128; ++mask) {
    const auto pts = oracle::mask_points(mask);
    if (span_rank(pts) != 3) continue;
    EXPECT_EQ(canonical_least_orbit(pts, 3), brute_least_orbit(group3(), pts)) << mask;
  }
  std::mt19937_64 rng(37);
  int checked = 0;
  while (checked < 60) {
    const auto pts = oracle::mask_points(static_cast<std::uint32_t>(rng()) & 0x7fff);
    if (span_rank(pts) != 4) continue;
    EXPECT_EQ(canonical_least_orbit(pts, 4), brute_least_orbit(group4(), pts));
    ++checked;
  }
}

TEST(CanonicalLeastOrbit, TriangleAndPointOffIt) {
  const std::vector<Point> pts = {1, 2, 3, 4};
  EXPECT_EQ(canonical_least_orbit(pts, 3), brute_least_orbit(group3(), pts));
  const std::vector<Point> fano = {1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(canonical_least_orbit(fano, 3), fano);
  const std::vector<Point> basis = {1, 2, 4};
  EXPECT_EQ(canonical_least_orbit(basis, 3), basis);
}

TEST(LinearMap, InverseAndCompose) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 8);
    const LinearMap a(r, oracle::random_element(r, rng));
    EXPECT_EQ(a.compose(a.inverse()), LinearMap::identity(r));
    EXPECT_EQ(a.inverse().compose(a), LinearMap::identity(r));
  }
  EXPECT_THROW(LinearMap(2, {1, 1}).inverse(), CanonError);
}

TEST(Compaction, RoundTripsPoints) {
  const std::vector<Point> pts = {12, 5, 9};
  const Compaction c = compact(pts, 5);
  EXPECT_EQ(c.rank, 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_LT(c.points[i], 4u);
    EXPECT_EQ(c.backward.apply(c.points[i]), pts[i]);
  }
}

}  // namespace
}  // namespace bm
