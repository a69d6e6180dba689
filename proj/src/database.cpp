#include "bm/database.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bm/catalog.hpp"

namespace bm {

std::string StratumId::to_string() const {
  return "rank " + std::to_string(rank) + " size " + std::to_string(size);
}

void MatroidDatabase::set_stratum(StratumId id, std::vector<CanonicalKey> keys) {
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].width != id.rank || static_cast<int>(keys[i].size()) != id.size) {
      throw DatabaseError("key " + keys[i].to_string() + " does not belong to stratum " +
                          id.to_string());
    }
    if (i > 0 && keys[i] == keys[i - 1]) {
      throw DatabaseError("duplicate key " + keys[i].to_string() + " in stratum " + id.to_string());
    }
  }
  strata_[id] = std::move(keys);
}

const std::vector<CanonicalKey>& MatroidDatabase::stratum(StratumId id) const {
  static const std::vector<CanonicalKey> kEmpty;
  const auto it = strata_.find(id);
  if (it != strata_.end()) return it->second;
  require(id);
  return kEmpty;
}

void MatroidDatabase::require(StratumId id) const {
  if (!has_stratum(id) && !rank_complete(id.rank)) {
    throw DatabaseError("database is missing stratum " + id.to_string());
  }
}

bool MatroidDatabase::contains(const CanonicalKey& key) const {
  const auto it = strata_.find(StratumId{key.width, static_cast<int>(key.size())});
  if (it == strata_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), key);
}

std::size_t MatroidDatabase::total() const {
  std::size_t n = 0;
  for (const auto& [id, keys] : strata_) n += keys.size();
  return n;
}

std::string write_db(const MatroidDatabase& db) {
  std::ostringstream out;
  const DatabaseHeader& h = db.header();
  out << "#format bmdb\n";
  out << "#version " << h.version << "\n";
  out << "#max-rank " << h.max_rank << "\n";
  for (const std::string& name : h.excluded) out << "#exclude " << name << "\n";
  for (const auto& [k, v] : h.settings) out << "#setting " << k << " " << v << "\n";
  for (int r : db.complete_ranks()) out << "#complete " << r << "\n";
  for (const auto& [id, keys] : db.strata()) {
    out << "#stratum " << id.rank << " " << id.size << "\n";
    for (const CanonicalKey& k : keys) out << k.to_string() << "\n";
    out << "#count " << keys.size() << "\n";
  }
  out << "#end\n";
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  MatroidDatabase run() {
    expect_directive("format", "bmdb");
    const int version = int_directive("version");
    if (version != MatroidDatabase::kFormatVersion) {
      fail("unsupported version " + std::to_string(version) + " (expected " +
           std::to_string(MatroidDatabase::kFormatVersion) + ")");
    }
    DatabaseHeader h;
    h.version = version;
    h.max_rank = int_directive("max-rank");
    while (peek_directive("exclude")) {
      std::string name = rest_of(next_line(), "#exclude ");
      if (find_catalog_entry(name) == nullptr) fail("excluded minor '" + name + "' is not in the catalog");
      h.excluded.push_back(std::move(name));
    }
    while (peek_directive("setting")) {
      const std::string body = rest_of(next_line(), "#setting ");
      const auto space = body.find(' ');
      if (space == std::string::npos || space == 0) fail("setting needs a key and a value");
      std::string key = body.substr(0, space);
      if (!h.settings.empty() && key <= h.settings.rbegin()->first) fail("settings out of order");
      h.settings.emplace(std::move(key), body.substr(space + 1));
    }
    MatroidDatabase db(std::move(h));
    int last_complete = -1;
    while (peek_directive("complete")) {
      const int r = parse_int(rest_of(next_line(), "#complete "));
      if (r <= last_complete) fail("complete ranks out of order");
      db.mark_complete(r);
      last_complete = r;
    }
    std::string last = "none";
    bool have_previous = false;
    StratumId previous;
    for (;;) {
      if (at_end() || unterminated()) {
        throw DatabaseError("truncated database: no #end marker; last complete stratum: " + last);
      }
      if (peek_directive("end")) {
        next_line();
        if (!at_end()) fail("content after #end");
        return db;
      }
      if (!peek_directive("stratum")) fail("expected #stratum or #end");
      std::istringstream ids(rest_of(next_line(), "#stratum "));
      StratumId id;
      std::string extra;
      if (!(ids >> id.rank >> id.size) || (ids >> extra)) fail("malformed #stratum line");
      if (have_previous && !(previous < id)) fail("strata out of order");
      std::vector<CanonicalKey> keys;
      for (;;) {
        if (at_end() || unterminated()) {
          throw DatabaseError("truncated database inside stratum " + id.to_string() +
                              "; last complete stratum: " + last);
        }
        if (peek_directive("count")) break;
        const std::string line = next_line();
        CanonicalKey key;
        try {
          key = CanonicalKey::parse(line);
        } catch (const CanonError& e) {
          fail(e.what());
        }
        if (key.width != id.rank || static_cast<int>(key.size()) != id.size) {
          fail("record does not belong to stratum " + id.to_string());
        }
        if (!keys.empty() && !(keys.back() < key)) fail("records not strictly increasing");
        keys.push_back(std::move(key));
      }
      const std::size_t count = static_cast<std::size_t>(parse_int(rest_of(next_line(), "#count ")));
      if (count != keys.size()) {
        fail("checksum failure in stratum " + id.to_string() + ": #count " + std::to_string(count) +
             " but " + std::to_string(keys.size()) + " records");
      }
      db.set_stratum(id, std::move(keys));
      last = id.to_string();
      previous = id;
      have_previous = true;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DatabaseError("line " + std::to_string(line_no_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool unterminated() const { return text_.find('\n', pos_) == std::string::npos; }

  std::string peek_line() const {
    const auto nl = text_.find('\n', pos_);
    return text_.substr(pos_, nl == std::string::npos ? std::string::npos : nl - pos_);
  }

  std::string next_line() {
    const auto nl = text_.find('\n', pos_);
    ++line_no_;
    if (nl == std::string::npos) {
      // Every line the writer emits ends in a newline.
      throw DatabaseError("line " + std::to_string(line_no_) + ": missing final newline (truncated?)");
    }
    std::string line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  bool peek_directive(const std::string& name) const {
    if (at_end()) return false;
    const std::string line = peek_line();
    const std::string tag = "#" + name;
    return line == tag || line.rfind(tag + " ", 0) == 0;
  }

  std::string rest_of(const std::string& line, const std::string& prefix) const {
    if (line.rfind(prefix, 0) != 0) fail("expected '" + prefix + "...'");
    return line.substr(prefix.size());
  }

  int parse_int(const std::string& s) const {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) fail("expected a number, got '" + s + "'");
    return v;
  }

  void expect_directive(const std::string& name, const std::string& value) {
    if (at_end()) fail("empty database");
    const std::string line = next_line();
    if (line != "#" + name + " " + value) fail("expected '#" + name + " " + value + "'");
  }

  int int_directive(const std::string& name) {
    if (at_end()) fail("truncated header");
    return parse_int(rest_of(next_line(), "#" + name + " "));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

}  // namespace

MatroidDatabase read_db(const std::string& text) { return Reader(text).run(); }

void save_db(const MatroidDatabase& db, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DatabaseIoError("cannot open " + tmp.string() + " for writing");
    const std::string text = write_db(db);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw DatabaseIoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw DatabaseIoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

MatroidDatabase load_db(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatabaseIoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DatabaseIoError("read from " + path.string() + " failed");
  try {
    return read_db(buf.str());
  } catch (const DatabaseIoError&) {
    throw;
  } catch (const DatabaseError& e) {
    throw DatabaseError(path.string() + ": " + e.what());
  }
}

MatroidDatabase merge(const MatroidDatabase& a, const MatroidDatabase& b) {
  const DatabaseHeader& ha = a.header();
  const DatabaseHeader& hb = b.header();
  if (ha.version != hb.version || ha.excluded != hb.excluded || ha.settings != hb.settings) {
    throw DatabaseError("cannot merge databases with different excluded minors or settings");
  }
  DatabaseHeader h = ha;
  h.max_rank = std::max(ha.max_rank, hb.max_rank);
  MatroidDatabase out(h);
  for (const MatroidDatabase* db : {&a, &b}) {
    for (int r : db->complete_ranks()) out.mark_complete(r);
  }
  std::set<StratumId> ids;
  for (const auto& [id, keys] : a.strata()) ids.insert(id);
  for (const auto& [id, keys] : b.strata()) ids.insert(id);
  for (const StratumId& id : ids) {
    std::vector<CanonicalKey> keys;
    const auto ia = a.strata().find(id);
    const auto ib = b.strata().find(id);
    const std::vector<CanonicalKey> none;
    const auto& ka = ia == a.strata().end() ? none : ia->second;
    const auto& kb = ib == b.strata().end() ? none : ib->second;
    std::set_union(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(keys));
    out.set_stratum(id, std::move(keys));
  }
  return out;
}

}  // namespace bm
