#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multiplicity.hpp"

namespace buch {

namespace {

bool record_valid(const CacheRecord& r) {
    if (r.version != kCacheVersion) return false;
    if (r.k < kMinDim || r.b < 0 || r.lo < 0 || r.lo > r.hi) return false;
    if (r.exact && r.lo != r.hi) return false;
    if (!r.cert.empty()) {
        if (r.k > kMaxDim) return false;
        if ((int64_t)r.cert.size() != full_count(r.k)) return false;
        for (int64_t c : r.cert)
            if (c < 0) return false;
        try {
            MultiplicityVector mv(r.k, r.cert);
            if (mv.sum() != r.lo) return false;
            if (!feasible(mv, r.b)) return false;
        } catch (const std::exception&) {
            return false;
        }
    } else if (r.exact) {
        // an exactness claim is only trusted with a verifiable witness
        return false;
    }
    return true;
}

}  // namespace

CacheLoadStats ResultCache::load(const std::string& path) {
    CacheLoadStats stats;
    std::ifstream in(path);
    if (!in) return stats;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        CacheRecord r;
        int exact_flag = 0;
        if (!(ls >> r.k >> r.b >> r.lo >> r.hi >> exact_flag >> r.version >> r.provenance)) {
            ++stats.dropped;
            continue;
        }
        r.exact = exact_flag != 0;
        std::string tok;
        bool bad = false;
        while (ls >> tok) {
            if (tok == "-") break;
            try {
                r.cert.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                bad = true;
                break;
            }
        }
        if (bad || !record_valid(r)) {
            ++stats.dropped;
            continue;
        }
        recs_[{r.k, r.b}] = std::move(r);
        ++stats.loaded;
    }
    return stats;
}

void ResultCache::store(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        for (const auto& [key, r] : recs_) {
            out << r.k << ' ' << r.b << ' ' << r.lo << ' ' << r.hi << ' ' << (r.exact ? 1 : 0)
                << ' ' << r.version << ' ' << (r.provenance.empty() ? "-" : r.provenance);
            if (r.cert.empty()) {
                out << " -";
            } else {
                for (int64_t c : r.cert) out << ' ' << c;
            }
            out << '\n';
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename cache file into place");
}

const CacheRecord* ResultCache::find(int k, int64_t b) const {
    auto it = recs_.find({k, b});
    return it == recs_.end() ? nullptr : &it->second;
}

void ResultCache::put(CacheRecord rec) {
    if (!record_valid(rec)) return;
    recs_[{rec.k, rec.b}] = std::move(rec);
}

}  // namespace buch
