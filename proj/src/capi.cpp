#include "../include/buchstaber.h"

#include <cstring>
#include <sstream>

#include "engine.hpp"
#include "tables.hpp"

using namespace buch;

struct bv_engine {
    Engine impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const MatrixParseError&) {
        return BV_EPARSE;
    } catch (const std::invalid_argument&) {
        return BV_EINVAL;
    } catch (const std::logic_error&) {
        return BV_EINTERNAL;
    } catch (const std::exception&) {
        return BV_EIO;
    }
}

void fill_interval(bv_interval* out, int64_t lo, int64_t hi, bool exact) {
    if (!out) return;
    out->lo = lo;
    out->hi = hi;
    out->exact = exact ? 1 : 0;
}

}  // namespace

extern "C" {

const char* bv_version(void) { return kToolVersion; }

bv_engine* bv_engine_new(void) {
    try {
        return new bv_engine();
    } catch (...) {
        return nullptr;
    }
}

void bv_engine_free(bv_engine* e) { delete e; }

int bv_set_node_budget(bv_engine* e, int64_t budget) {
    if (!e || budget <= 0) return BV_EINVAL;
    e->impl.options.node_budget = budget;
    return BV_OK;
}

int bv_set_flags(bv_engine* e, int oracle_mode, int use_parity, int use_symmetry) {
    if (!e) return BV_EINVAL;
    e->impl.options.oracle_mode = oracle_mode != 0;
    e->impl.options.use_parity_pruning = use_parity != 0;
    e->impl.options.use_symmetry = use_symmetry != 0;
    return BV_OK;
}

int bv_mk_bounds(bv_engine* e, int k, int64_t b, bv_interval* out, char** provenance,
                 int64_t** cert, int32_t* cert_len) {
    if (!e) return BV_EINVAL;
    if (k < kMinDim || k > kMaxDim) return BV_EINVAL;  // public surface cap
    return guarded([&] {
        BoundInterval bi = e->impl.mk_bounds(k, b);
        fill_interval(out, bi.lo, bi.hi, bi.exact);
        if (provenance)
            *provenance = dup_string(join_tags(bi.lo_provenance) + ";" +
                                     join_tags(bi.hi_provenance));
        if (cert && cert_len) {
            *cert = nullptr;
            *cert_len = 0;
            if (bi.certificate) {
                *cert_len = (int32_t)bi.certificate->counts.size();
                *cert = new int64_t[bi.certificate->counts.size()];
                std::memcpy(*cert, bi.certificate->counts.data(),
                            bi.certificate->counts.size() * sizeof(int64_t));
            }
        }
        return BV_OK;
    });
}

int bv_mk_solve(bv_engine* e, int k, int64_t b, int64_t* value, int* exact, int64_t* nodes,
                int64_t** cert, int32_t* cert_len) {
    if (!e) return BV_EINVAL;
    return guarded([&] {
        SolveResult sr = e->impl.mk_solve(k, b);
        if (value) *value = sr.value;
        if (exact) *exact = sr.exact ? 1 : 0;
        if (nodes) *nodes = sr.nodes;
        if (cert && cert_len) {
            *cert_len = (int32_t)sr.certificate.counts.size();
            *cert = new int64_t[sr.certificate.counts.size()];
            std::memcpy(*cert, sr.certificate.counts.data(),
                        sr.certificate.counts.size() * sizeof(int64_t));
        }
        return sr.exact ? BV_OK : BV_EBUDGET;
    });
}

int bv_srm_bounds(bv_engine* e, int64_t m, int64_t p, bv_interval* out, char** provenance) {
    if (!e) return BV_EINVAL;
    return guarded([&] {
        SrmResult r = e->impl.srm_bounds(m, p);
        fill_interval(out, r.lo, r.hi, r.exact);
        if (provenance) *provenance = dup_string(r.provenance);
        return BV_OK;
    });
}

int bv_srm_solve(bv_engine* e, int64_t m, int64_t p, bv_interval* out, char** provenance,
                 char** matrix_text) {
    if (!e) return BV_EINVAL;
    return guarded([&] {
        SrmResult r = e->impl.srm_solve(m, p);
        fill_interval(out, r.lo, r.hi, r.exact);
        if (provenance) *provenance = dup_string(r.provenance);
        if (matrix_text) {
            *matrix_text = r.certificate
                               ? dup_string(format_matrix_text(*r.certificate, (int)p))
                               : dup_string("");
        }
        return BV_OK;
    });
}

int bv_verify_matrix_text(const char* text, int* realized, uint32_t* witness_u,
                          int64_t* witness_count, int* k, int* m, int* p) {
    if (!text) return BV_EINVAL;
    return guarded([&] {
        MatrixFile mf = parse_matrix_text(std::string(text));
        if (k) *k = mf.mat.dim;
        if (m) *m = mf.mat.m();
        if (p) *p = mf.p;
        auto witness = realizes_witness(mf.mat, mf.p);
        if (mf.mat.m() <= 20) {
            // cross-check the hyperplane criterion against direct enumeration
            if (realizes_naive(mf.mat, mf.p) != !witness.has_value())
                throw std::logic_error("hyperplane criterion disagrees with enumeration");
        }
        if (realized) *realized = witness ? 0 : 1;
        if (witness) {
            if (witness_u) *witness_u = witness->u;
            if (witness_count) *witness_count = witness->count;
        }
        return BV_OK;
    });
}

int bv_check_tables(bv_engine* e, int bounds_only, int qmax, int64_t mmax, int64_t pmax,
                    int include_mk, int include_srm, char** report, int* matches,
                    int* refines, int* mismatches) {
    if (!e) return BV_EINVAL;
    return guarded([&] {
        CheckOptions opts;
        opts.bounds_only = bounds_only != 0;
        opts.qmax = qmax;
        opts.mmax = mmax;
        opts.pmax = pmax;
        opts.include_mk = include_mk != 0;
        opts.include_srm = include_srm != 0;
        CheckReport rep = check_reference_tables(e->impl, opts);
        if (matches) *matches = rep.matches;
        if (refines) *refines = rep.refines;
        if (mismatches) *mismatches = rep.mismatches;
        if (report) {
            std::ostringstream os;
            for (const CheckLine& line : rep.lines)
                os << outcome_name(line.outcome) << ' ' << line.label << ": " << line.detail
                   << '\n';
            *report = dup_string(os.str());
        }
        return BV_OK;
    });
}

int bv_scan_periodicity(bv_engine* e, int k, int64_t b_max, char** report, int* violations,
                        int* skipped) {
    if (!e) return BV_EINVAL;
    return guarded([&] {
        PeriodicityReport rep = e->impl.scan_periodicity(k, b_max);
        if (violations) *violations = rep.violations;
        if (skipped) *skipped = rep.skipped;
        if (report) {
            std::ostringstream os;
            for (const PeriodicityEntry& en : rep.entries) {
                os << "b=" << en.b << " m_k(b)=" << en.value
                   << " m_k(b+period)=" << en.value_shift << ' ';
                if (!en.both_exact)
                    os << "SKIPPED";
                else
                    os << (en.holds ? "HOLDS" : "VIOLATION");
                if (en.covered) os << " [guaranteed]";
                os << '\n';
            }
            *report = dup_string(os.str());
        }
        return BV_OK;
    });
}

int bv_cache_load(bv_engine* e, const char* path, int* loaded, int* dropped) {
    if (!e || !path) return BV_EINVAL;
    return guarded([&] {
        CacheLoadStats st = e->impl.cache_load(path);
        if (loaded) *loaded = st.loaded;
        if (dropped) *dropped = st.dropped;
        return BV_OK;
    });
}

int bv_cache_store(bv_engine* e, const char* path) {
    if (!e || !path) return BV_EINVAL;
    return guarded([&] {
        e->impl.cache_store(path);
        return BV_OK;
    });
}

void bv_string_free(char* s) { delete[] s; }
void bv_buffer_free(int64_t* buf) { delete[] buf; }

}  // extern "C"
