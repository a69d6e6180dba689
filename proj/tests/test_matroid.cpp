#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bm/constructions.hpp"
#include "bm/graph.hpp"
#include "bm/matroid.hpp"
#include "oracle.hpp"

using namespace bm;

namespace {

BinaryMatroid random_matroid(std::mt19937_64& rng, int width, int n) {
  std::vector<Word> cols;
  for (int i = 0; i < n; ++i) cols.push_back(rng() & ((Word{1} << width) - 1));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return BinaryMatroid(width, cols, labels);
}

// Rank of every subset, with subsets named by labels so that matroids on
// the same ground set in different column orders compare equal.
std::map<std::set<std::string>, int> rank_function(const BinaryMatroid& m) {
  std::map<std::set<std::string>, int> out;
  const std::vector<int> rk = oracle::rank_table(m.columns());
  for (std::size_t x = 0; x < rk.size(); ++x) {
    std::set<std::string> s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (x >> i & 1) s.insert(m.labels()[i]);
    }
    out[s] = rk[x];
  }
  return out;
}

std::vector<std::string> subset_labels(const BinaryMatroid& m, Word mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mask >> i & 1) out.push_back(m.labels()[i]);
  }
  return out;
}

}  // namespace

TEST(Matroid, RankMatchesSpanOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 5, 8);
    const std::vector<int> rk = oracle::rank_table(m.columns());
    for (Word x = 0; x < rk.size(); ++x) ASSERT_EQ(m.rank_of_mask(x), rk[x]);
    EXPECT_EQ(m.rank(), rk.back());
  }
}

TEST(Matroid, ConstructorRejectsBadInput) {
  EXPECT_THROW(BinaryMatroid(2, {1, 4}, {"a", "b"}), MatroidError);
  EXPECT_THROW(BinaryMatroid(2, {1, 2}, {"a", "a"}), MatroidError);
  EXPECT_THROW(BinaryMatroid(2, {1, 2}, {"a"}), MatroidError);
  EXPECT_THROW(BinaryMatroid(65, {}, {}), MatroidError);
  const BinaryMatroid m(2, {1, 2}, {"a", "b"});
  EXPECT_THROW(m.index_of("c"), MatroidError);
}

TEST(Matroid, LambdaIsSymmetricAndDualInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 5, 9);
    const BinaryMatroid d = m.dual();
    const Word all = (Word{1} << m.size()) - 1;
    for (Word x = 0; x <= all; x += 7) {
      const std::vector<std::string> side = subset_labels(m, x);
      const std::vector<std::string> rest = subset_labels(m, all & ~x);
      ASSERT_EQ(m.lambda(side), m.lambda(rest));
      ASSERT_EQ(m.lambda(side), d.lambda(side));
    }
  }
}

TEST(Matroid, DualIsAnInvolution) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 4, 8);
    const BinaryMatroid d = m.dual();
    EXPECT_EQ(d.rank(), static_cast<int>(m.size()) - m.rank());
    EXPECT_EQ(rank_function(d.dual()), rank_function(m));
  }
}

TEST(Matroid, DeleteAndContractSwapUnderDuality) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 4, 8);
    const std::string e = m.labels()[rng() % m.size()];
    EXPECT_EQ(rank_function(m.delete_element(e).dual()), rank_function(m.dual().contract_element(e)));
    EXPECT_EQ(rank_function(m.contract_element(e).dual()), rank_function(m.dual().delete_element(e)));
  }
}

TEST(Matroid, ContractionRankFunction) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 5, 8);
    const std::vector<std::string> t = subset_labels(m, rng() & 0xff);
    const BinaryMatroid c = m.contract_elements(t);
    const int rt = m.rank_of(t);
    const auto rf = rank_function(c);
    for (const auto& [s, r] : rf) {
      std::vector<std::string> u(s.begin(), s.end());
      u.insert(u.end(), t.begin(), t.end());
      ASSERT_EQ(r, m.rank_of(u) - rt);
    }
  }
}

TEST(Matroid, ContractingALoopDeletesIt) {
  const BinaryMatroid m(3, {1, 0, 2, 3}, {"a", "z", "b", "c"});
  EXPECT_EQ(rank_function(m.contract_element("z")), rank_function(m.delete_element("z")));
}

TEST(Matroid, SimplifyKeepsFirstOfEachParallelClass) {
  const BinaryMatroid m(3, {1, 0, 2, 1, 3, 2}, {"a", "z", "b", "a2", "c", "b2"});
  const BinaryMatroid s = m.simplify();
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(s.is_simple());
  EXPECT_FALSE(m.is_simple());
}

TEST(Matroid, CompactKeepsTheMatroid) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 7, 6);
    const BinaryMatroid c = m.compact();
    EXPECT_EQ(c.width(), m.rank());
    EXPECT_EQ(rank_function(c), rank_function(m));
  }
}

TEST(Matroid, ConnectivityLevelsMatchDefinitions) {
  std::mt19937_64 rng(29);
  int counts[5] = {0, 0, 0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const int width = 3 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 11);
    const BinaryMatroid m = random_matroid(rng, width, n);
    const int expected = oracle::connectivity_level(m.columns());
    ASSERT_EQ(m.connectivity_level(4), expected) << trial;
    EXPECT_EQ(m.is_3connected(), expected >= 3);
    EXPECT_EQ(m.is_internally_4connected(), expected >= 4);
    EXPECT_EQ(m.is_connected(), expected >= 2);
    ++counts[expected];
  }
  // The sample should exercise every outcome.
  for (int level = 1; level <= 4; ++level) EXPECT_GT(counts[level], 0) << level;
}

TEST(Matroid, NamedConnectivity) {
  EXPECT_TRUE(cycle_matroid(complete(4)).is_internally_4connected());
  EXPECT_TRUE(projective_geometry(3).is_internally_4connected());
  const BinaryMatroid w4 = cycle_matroid(wheel(4));
  EXPECT_TRUE(w4.is_3connected());
  EXPECT_FALSE(w4.is_internally_4connected());
  const BinaryMatroid k33 = cycle_matroid(complete_bipartite(3, 3));
  EXPECT_TRUE(k33.is_internally_4connected());
  EXPECT_TRUE(k33.dual().is_internally_4connected());
  const std::optional<Separation> sep = w4.find_separation(3);
  ASSERT_TRUE(sep.has_value());
  EXPECT_LE(w4.lambda(sep->side), 2);
  EXPECT_GE(sep->side.size(), 3u);
}

TEST(Matroid, TrianglesAndTriads) {
  EXPECT_EQ(projective_geometry(3).triangles().size(), 7u);
  EXPECT_EQ(projective_geometry(3).dual().triads().size(), 7u);
  EXPECT_EQ(cycle_matroid(complete(4)).triangles().size(), 4u);
  EXPECT_EQ(cycle_matroid(complete(4)).triads().size(), 4u);
  EXPECT_TRUE(cycle_matroid(complete_bipartite(3, 3)).triangles().empty());
}

TEST(Matroid, KeyIgnoresBasisAndColumnOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatroid m = random_matroid(rng, 5, 9);
    const std::vector<Point> g = oracle::random_element(5, rng);
    std::vector<Word> cols;
    for (Word c : m.columns()) cols.push_back(oracle::map_point(g, static_cast<Point>(c)));
    std::vector<std::string> labels = m.labels();
    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Word> shuffled;
    std::vector<std::string> shuffled_labels;
    for (std::size_t i : order) {
      shuffled.push_back(cols[i]);
      shuffled_labels.push_back(labels[i]);
    }
    const BinaryMatroid image(5, shuffled, shuffled_labels);
    EXPECT_EQ(matroid_key(m), matroid_key(image));
    EXPECT_TRUE(isomorphic(m, image));
  }
}

TEST(Matroid, KeySeparatesLoopsAndParallels) {
  const BinaryMatroid loop(1, {0, 1}, {"a", "b"});
  const BinaryMatroid pair(1, {1, 1}, {"a", "b"});
  const BinaryMatroid free(2, {1, 2}, {"a", "b"});
  EXPECT_EQ(matroid_key(loop).to_string(), "r=1;0,1");
  EXPECT_EQ(matroid_key(pair).to_string(), "r=1;1,1");
  EXPECT_EQ(matroid_key(free).to_string(), "r=2;1,2");
  EXPECT_EQ(matroid_key(BinaryMatroid()).to_string(), "r=0;");
}

TEST(Matroid, RowsPrintMostSignificantBitOnTop) {
  const BinaryMatroid m(3, {4, 2, 1, 3}, {"a", "b", "c", "d"});
  EXPECT_EQ(m.to_rows(), (std::vector<std::string>{"1000", "0101", "0011"}));
}
