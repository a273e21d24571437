#include "engine.hpp"

namespace buch {

BoundInterval Engine::mk_bounds(int k, int64_t b) {
    BoundInterval bi = bounds_.bounds(k, b);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    CacheRecord rec;
    rec.k = k;
    rec.b = b;
    rec.lo = bi.lo;
    rec.hi = bi.hi;
    rec.exact = bi.exact;
    if (bi.certificate && bi.certificate->sum() == bi.lo) rec.cert = bi.certificate->counts;
    if (rec.exact && rec.cert.empty()) rec.exact = false;  // store as plain bounds
    rec.provenance = join_tags(bi.lo_provenance) + ";" + join_tags(bi.hi_provenance);
    cache_.put(std::move(rec));
    return bi;
}

SolveResult Engine::mk_solve(int k, int64_t b) {
    SolveOptions opts = options.normalized();
    auto key = std::make_tuple(k, b, opts.oracle_mode, opts.use_parity_pruning,
                               opts.use_symmetry);
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = solved_.find(key);
        if (it != solved_.end()) return it->second;
        if (!opts.oracle_mode && k <= kMaxDim) {
            const CacheRecord* rec = cache_.find(k, b);
            if (rec && rec->exact && !rec->cert.empty()) {
                SolveResult out{rec->lo, true, 0, MultiplicityVector(k, rec->cert)};
                solved_[key] = out;
                return out;
            }
        }
    }
    SolveResult out = solve_mk(k, b, opts, bounds_);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (out.exact) {
        solved_[key] = out;
        if (!opts.oracle_mode) {
            CacheRecord rec;
            rec.k = k;
            rec.b = b;
            rec.lo = rec.hi = out.value;
            rec.exact = true;
            rec.cert = out.certificate.counts;
            rec.provenance = "solver";
            cache_.put(std::move(rec));
        }
    }
    return out;
}

SrmResult Engine::srm_solve(int64_t m, int64_t p) { return solve_srm(m, p, options, bounds_); }

CacheLoadStats Engine::cache_load(const std::string& path) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return cache_.load(path);
}

void Engine::cache_store(const std::string& path) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    cache_.store(path);
}

size_t Engine::cache_size() {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return cache_.size();
}

}  // namespace buch
