#pragma once

#include <mutex>
#include <tuple>

#include "cache.hpp"
#include "solver.hpp"

namespace buch {

inline constexpr const char* kToolVersion = "1.0.0";

// Shared context: bounds memos, solved-value memo, result cache, options.
class Engine {
  public:
    SolveOptions options;

    BoundsEngine& bounds_engine() { return bounds_; }

    BoundInterval mk_bounds(int k, int64_t b);
    SolveResult mk_solve(int k, int64_t b);
    SrmResult srm_bounds(int64_t m, int64_t p) { return bounds_.srm_bounds(m, p); }
    SrmResult srm_solve(int64_t m, int64_t p);
    PeriodicityReport scan_periodicity(int k, int64_t b_max) {
        return periodicity_scan(k, b_max, options, bounds_);
    }

    CacheLoadStats cache_load(const std::string& path);
    void cache_store(const std::string& path);
    size_t cache_size();

  private:
    BoundsEngine bounds_;
    ResultCache cache_;
    std::map<std::tuple<int, int64_t, bool, bool, bool>, SolveResult> solved_;
    std::recursive_mutex mu_;
};

inline std::string join_tags(const std::vector<std::string>& tags) {
    std::string s;
    for (const auto& t : tags) {
        if (!s.empty()) s += ',';
        s += t;
    }
    return s;
}

}  // namespace buch
