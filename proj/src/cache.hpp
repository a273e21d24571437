#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace buch {

inline constexpr const char* kCacheVersion = "buchstaber-1";

struct CacheRecord {
    int k = 0;
    int64_t b = 0;
    int64_t lo = 0;
    int64_t hi = 0;
    bool exact = false;
    std::vector<int64_t> cert;  // empty when no certificate
    std::string provenance;     // comma-joined tags, no spaces
    std::string version = kCacheVersion;
};

struct CacheLoadStats {
    int loaded = 0;
    int dropped = 0;
};

// One text line per record:
//   k b lo hi exact version provenance cert-counts...|-
// Loading re-validates every certificate (length, feasibility, sum == lo)
// and silently drops records that fail; storing writes a temp file and
// renames it into place.
class ResultCache {
  public:
    CacheLoadStats load(const std::string& path);
    void store(const std::string& path) const;

    const CacheRecord* find(int k, int64_t b) const;
    void put(CacheRecord rec);
    size_t size() const { return recs_.size(); }

  private:
    std::map<std::pair<int, int64_t>, CacheRecord> recs_;
};

}  // namespace buch
