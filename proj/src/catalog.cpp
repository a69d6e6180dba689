#include "bm/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "bm/constructions.hpp"

namespace bm {

namespace {

// Column headers of the two tables, rows top to bottom.
constexpr const char* kProjectiveHeader[] = {
    "100011100011101",
    "010010011011011",
    "001001010110111",
    "000100101101111",
};

constexpr const char* kCatHeader[] = {
    "01000011110000111",
    "00100101101001011",
    "00010110100101101",
    "00001111000011110",
    "10000000011111111",
};

struct Row {
  const char* name;
  const char* description;
  const char* cells;  // 'x' keeps the column
};

constexpr Row kRankFourRows[] = {
    {"M3", "F7*", "....xxx...xxx.x"},
    {"M4", "M*(K3,3)", ".....xxxx.xxxxx"},
    {"M5", "M(K5)", "....xxxxxxxxxx."},
    {"M6", "", "....xxxxx.xxxxx"},
    {"M7", "", ".x..xxxxx.xxxxx"},
    {"M8", "", "....xxxxxxxxxxx"},
    {"M9", "", "xx..xxxxx.xxxxx"},
    {"M10", "", "x...xxxxxxxxxxx"},
    {"M11", "", "xx..xxxxxxxxxxx"},
    {"M12", "", "xxx.xxxxxxxxxxx"},
    {"M13", "PG(3,2)", "xxxxxxxxxxxxxxx"},
};

constexpr Row kRankFiveRows[] = {
    {"M14", "M(K3,3)", ".xxxxxx..xxx....."},
    {"M15", "", "xxxxxxx..xx....x."},
    {"M16", "R10", ".xxxxxx..xxx...x."},
    {"M17", "", "xxxxxxxx.xx.x...."},
    {"M18", "", "xxxxxxx..xxx...x."},
    {"M19", "", ".xxxxxxx.xxxx...."},
    {"M20", "", "xxxxxxxx.xx.x..x."},
    {"M21", "", "xxxxxxxx.xx.x...x"},
    {"M22", "", "xxxxxxxx.xxxx...."},
    {"M23", "", ".xxxxxxxxxxxx...."},
    {"M24", "", "xxxxxxxx.xx.x..xx"},
    {"M25", "", "xxxxxxxxxxxxx...."},
    {"M26", "", "xxxxxxxx.xxxxx..."},
    {"M27", "", ".xxxxxxxxxxxxx..."},
    {"M28", "", "xxxxxxxxxxxxxx..."},
    {"M29", "", "xxxxxxxx.xxxxxx.."},
    {"M30", "", ".xxxxxxxxxxxxxx.."},
    {"M31", "", "xxxxxxxxxxxxxxx.."},
    {"M32", "", "xxxxxxxx.xxxxxxx."},
    {"M33", "", ".xxxxxxxxxxxxxxx."},
    {"M34", "", "xxxxxxxxxxxxxxxx."},
    {"M35", "", ".xxxxxxxxxxxxxxxx"},
    {"M36", "AG(3,2) cat U1,1", "xxxxxxxxxxxxxxxxx"},
};

struct Sequence {
  const char* name;
  int rank;
  std::vector<Word> values;
};

const Sequence kSporadic[] = {
    {"S1", 5, {1, 4, 5, 8, 9, 14, 15, 16, 22, 27, 29}},
    {"S2", 5, {1, 3, 4, 8, 9, 14, 15, 16, 22, 27, 29}},
    {"S3", 5, {1, 3, 4, 5, 8, 9, 14, 15, 16, 22, 27, 29}},
    {"S4", 6, {1, 2, 4, 8, 15, 16, 32, 42, 44, 49, 56, 63}},
    {"S5", 5, {1, 2, 3, 4, 5, 8, 9, 14, 15, 16, 22, 27, 29}},
};

template <std::size_t R>
BinaryMatroid table_row(const char* const (&header)[R], const char* cells) {
  const GF2Matrix full = GF2Matrix::from_rows(std::vector<std::string>(header, header + R));
  std::vector<Word> cols;
  std::vector<std::string> labels;
  for (std::size_t j = 0; cells[j] != '\0'; ++j) {
    if (cells[j] == 'x') {
      cols.push_back(full.columns()[j]);
      labels.push_back(std::to_string(j + 1));
    }
  }
  return BinaryMatroid(static_cast<int>(R), std::move(cols), std::move(labels));
}

BinaryMatroid relabel(const BinaryMatroid& m, std::vector<std::string> labels) {
  return BinaryMatroid(m.width(), m.columns(), std::move(labels));
}

ExpectedFlags flags(int size, int rank, bool c3, bool i4c, bool prism_free) {
  return ExpectedFlags{size, rank, c3, i4c, prism_free};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string description, BinaryMatroid m, ExpectedFlags f) {
    out.push_back(CatalogEntry{std::move(name), std::move(description), std::move(m), f});
  };

  add("U00", "U0,0", uniform_matroid(0, 0), flags(0, 0, true, true, true));
  add("U01", "U0,1", uniform_matroid(0, 1), flags(1, 0, true, true, true));
  add("U11", "U1,1", uniform_matroid(1, 1), flags(1, 1, true, true, true));
  add("U12", "U1,2", uniform_matroid(1, 2), flags(2, 1, true, true, true));
  add("U13", "U1,3", uniform_matroid(1, 3), flags(3, 1, true, true, true));
  add("U23", "U2,3", uniform_matroid(2, 3), flags(3, 2, true, true, true));

  add("M1", "M(K4)", cycle_matroid(complete(4)), flags(6, 3, true, true, true));
  add("M2", "F7", projective_geometry(3), flags(7, 3, true, true, true));
  for (const Row& r : kRankFourRows) {
    BinaryMatroid m = table_row(kProjectiveHeader, r.cells);
    const int n = static_cast<int>(m.size());
    add(r.name, r.description, std::move(m), flags(n, 4, true, true, true));
  }
  for (const Row& r : kRankFiveRows) {
    BinaryMatroid m = table_row(kCatHeader, r.cells);
    const int n = static_cast<int>(m.size());
    add(r.name, r.description, std::move(m), flags(n, 5, true, true, true));
  }
  for (const Sequence& s : kSporadic) {
    add(s.name, "", decode_sequence(s.values, s.rank),
        flags(static_cast<int>(s.values.size()), s.rank, true, false, true));
  }

  const BinaryMatroid ag = affine_geometry_32();
  add("PG32", "PG(3,2)", projective_geometry(4), flags(15, 4, true, true, true));
  add("AG32", "AG(3,2)", ag, flags(8, 4, true, false, true));
  add("CAT", "AG(3,2) cat U1,1", cat(ag, relabel(uniform_matroid(1, 1), {"9"})),
      flags(17, 5, true, true, true));
  add("PRISM", "M(prism) = M*(K5\\e)", cycle_matroid(prism_graph()), flags(9, 5, true, false, false));
  add("TERRAHAWK", "M(terrahawk)", cycle_matroid(terrahawk()), flags(16, 8, true, true, false));
  add("W4", "M(W4)",
      relabel(cycle_matroid(wheel(4)), {"a", "b", "c", "d", "e", "f", "g", "h"}),
      flags(8, 4, true, false, true));
  add("K5", "M(K5)", cycle_matroid(complete(5)), flags(10, 4, true, true, true));
  add("K33", "M(K3,3)", cycle_matroid(complete_bipartite(3, 3)), flags(9, 5, true, true, true));

  for (const CatalogEntry& e : out) {
    if (static_cast<int>(e.matroid.size()) != e.expected.size ||
        e.matroid.rank() != e.expected.rank) {
      throw std::logic_error("catalog entry " + e.name + " has size " +
                             std::to_string(e.matroid.size()) + " and rank " +
                             std::to_string(e.matroid.rank()) + ", expected " +
                             std::to_string(e.expected.size) + " and " +
                             std::to_string(e.expected.rank));
    }
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  const std::string key = upper(name);
  for (const CatalogEntry& e : catalog()) {
    if (e.name == key) return &e;
  }
  return nullptr;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (e == nullptr) throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
  return *e;
}

std::vector<const CatalogEntry*> internally_4connected_list() {
  std::vector<const CatalogEntry*> out;
  for (const char* n : {"U00", "U01", "U11", "U12", "U13", "U23"}) out.push_back(&catalog_entry(n));
  for (int i = 1; i <= 36; ++i) out.push_back(&catalog_entry("M" + std::to_string(i)));
  return out;
}

std::vector<const CatalogEntry*> sporadic_list() {
  std::vector<const CatalogEntry*> out;
  for (int i = 1; i <= 5; ++i) out.push_back(&catalog_entry("S" + std::to_string(i)));
  return out;
}

const BinaryMatroid& prism() { return catalog_entry("PRISM").matroid; }

}  // namespace bm
