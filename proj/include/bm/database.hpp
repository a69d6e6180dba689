#pragma once

// Rank- and size-stratified collections of canonical keys, with a
// line-oriented text format (.bmdb):
//
//   #format bmdb
//   #version 1
//   #max-rank <r>
//   #exclude <NAME>            one line per excluded minor, in order
//   #setting <key> <value>     sorted by key
//   #complete <r>              rank r fully enumerated (missing strata empty)
//   #stratum <rank> <size>
//   r=<rank>;<p1>,...,<pn>     one record per line, strictly increasing
//   #count <n>
//   ...
//   #end

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bm/projcanon.hpp"

namespace bm {

class DatabaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// I/O failures (open, write, rename), as opposed to malformed content.
class DatabaseIoError : public DatabaseError {
 public:
  using DatabaseError::DatabaseError;
};

struct DatabaseHeader {
  int version = 1;
  int max_rank = 0;
  std::vector<std::string> excluded;
  std::map<std::string, std::string> settings;

  friend bool operator==(const DatabaseHeader&, const DatabaseHeader&) = default;
};

struct StratumId {
  int rank = 0;
  int size = 0;
  friend auto operator<=>(const StratumId&, const StratumId&) = default;
  std::string to_string() const;
};

class MatroidDatabase {
 public:
  static constexpr int kFormatVersion = 1;

  MatroidDatabase() = default;
  explicit MatroidDatabase(DatabaseHeader header) : header_(std::move(header)) {}

  const DatabaseHeader& header() const { return header_; }
  DatabaseHeader& header() { return header_; }

  // Replaces a stratum. Keys are sorted; duplicates or keys of the wrong
  // rank or size are rejected.
  void set_stratum(StratumId id, std::vector<CanonicalKey> keys);

  bool has_stratum(StratumId id) const { return strata_.count(id) != 0; }
  const std::map<StratumId, std::vector<CanonicalKey>>& strata() const { return strata_; }

  // The stratum, or an empty one when its rank is marked complete.
  const std::vector<CanonicalKey>& stratum(StratumId id) const;

  // Throws DatabaseError naming the stratum when it is neither stored nor
  // covered by a complete rank.
  void require(StratumId id) const;

  void mark_complete(int rank) { complete_.insert(rank); }
  bool rank_complete(int rank) const { return complete_.count(rank) != 0; }
  const std::set<int>& complete_ranks() const { return complete_; }

  bool contains(const CanonicalKey& key) const;
  std::size_t total() const;
  bool empty() const { return strata_.empty(); }

  friend bool operator==(const MatroidDatabase&, const MatroidDatabase&) = default;

 private:
  DatabaseHeader header_;
  std::map<StratumId, std::vector<CanonicalKey>> strata_;
  std::set<int> complete_;
};

std::string write_db(const MatroidDatabase& db);
MatroidDatabase read_db(const std::string& text);

// Written to a temporary sibling, then renamed into place.
void save_db(const MatroidDatabase& db, const std::filesystem::path& path);
MatroidDatabase load_db(const std::filesystem::path& path);

// Sorted union. Headers must agree on excluded minors and settings; the
// width bound is the larger of the two.
MatroidDatabase merge(const MatroidDatabase& a, const MatroidDatabase& b);

}  // namespace bm
