#include "solver.hpp"

#include <algorithm>

namespace buch {

namespace {

struct Search {
    int k;
    int64_t b;
    uint32_t n;
    int64_t per;
    bool parity, symmetry;
    int64_t budget;

    std::vector<std::vector<uint32_t>> orth;  // orth[v-1]: u with (u,v)=0
    std::vector<uint64_t> orth_mask;          // bit u-1 set iff (u,v)=0 (n <= 64 only)
    std::vector<int64_t> slack;               // slack[u-1]
    std::vector<int64_t> a;                   // a[v-1]
    int64_t sum = 0;
    int64_t total_slack = 0;
    uint64_t tight = 0;  // constraints with zero slack (n <= 64 only)
    bool use_masks;

    int64_t incumbent = 0;
    std::vector<int64_t> best;
    int64_t nodes = 0;
    bool exhausted = false;

    Search(int kk, int64_t bb, bool par, bool sym, int64_t bud)
        : k(kk), b(bb), n((uint32_t)full_count(kk)), per(period(kk)), parity(par),
          symmetry(sym), budget(bud) {
        orth.resize(n);
        use_masks = n <= 64;
        if (use_masks) orth_mask.assign(n, 0);
        for (uint32_t v = 1; v <= n; ++v) {
            orth[v - 1].reserve((size_t)per);
            for (uint32_t u = 1; u <= n; ++u)
                if (dot_bits(u, v) == 0) {
                    orth[v - 1].push_back(u);
                    if (use_masks) orth_mask[v - 1] |= uint64_t(1) << (u - 1);
                }
        }
        slack.assign(n, b);
        a.assign(n, 0);
        best.assign(n, 0);
        total_slack = (int64_t)n * b;
        if (use_masks && b == 0) tight = ~uint64_t(0);
    }

    void apply(uint32_t v, int64_t c) {
        a[v - 1] = c;
        for (uint32_t u : orth[v - 1]) {
            if ((slack[u - 1] -= c) == 0 && use_masks) tight |= uint64_t(1) << (u - 1);
        }
        sum += c;
        total_slack -= c * per;
    }

    void undo(uint32_t v, int64_t c) {
        a[v - 1] = 0;
        for (uint32_t u : orth[v - 1]) {
            if (slack[u - 1] == 0 && use_masks) tight &= ~(uint64_t(1) << (u - 1));
            slack[u - 1] += c;
        }
        sum -= c;
        total_slack += c * per;
    }

    void dfs(uint32_t v) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        int64_t headroom = total_slack / per;
        int64_t bound = sum + headroom;
        if (parity && (((bound - b) & 1) != 0)) --bound;
        if (bound <= incumbent) return;
        if (headroom == 0 || v > n) {
            // no further unit is placeable (or all variables assigned)
            if (sum > incumbent) {
                incumbent = sum;
                best = a;
            }
            return;
        }
        if (bound - incumbent <= 8 && use_masks) {
            // near-optimal shell: the per-variable caps of the unassigned
            // suffix bound the future more sharply than the slack aggregate
            int64_t tail = 0;
            bool prunable = true;
            int64_t sym_cap = (symmetry && v > 1) ? a[0] : b;
            for (uint32_t w = v; w <= n; ++w) {
                if (use_masks && (orth_mask[w - 1] & tight)) continue;  // cap 0
                int64_t cw = std::min(headroom, sym_cap);
                for (uint32_t u : orth[w - 1]) {
                    if (slack[u - 1] < cw) cw = slack[u - 1];
                    if (cw == 0) break;
                }
                tail += cw;
                if (sum + tail > incumbent) {
                    prunable = false;
                    break;
                }
            }
            if (prunable) {
                if (sum > incumbent) {
                    incumbent = sum;
                    best = a;
                }
                return;
            }
        }
        int64_t cap = headroom;
        if (use_masks && (orth_mask[v - 1] & tight)) {
            cap = 0;
        } else {
            for (uint32_t u : orth[v - 1]) {
                if (slack[u - 1] < cap) cap = slack[u - 1];
                if (cap == 0) break;
            }
        }
        if (symmetry && v > 1 && a[0] < cap) cap = a[0];
        for (int64_t c = cap; c >= 0; --c) {
            if (c > 0) apply(v, c);
            dfs(v + 1);
            if (c > 0) undo(v, c);
            if (exhausted) return;
        }
    }
};

}  // namespace

SolveResult solve_mk(int k, int64_t b, const SolveOptions& opts_in, BoundsEngine& eng) {
    check_dim(k);
    if (b < 0) throw std::invalid_argument("b must be non-negative");
    SolveOptions opts = opts_in.normalized();

    if (!opts.oracle_mode && b <= k - 2)
        return SolveResult{b, true, 0, excess_point(k, b)};

    Search s(k, b, opts.use_parity_pruning, opts.use_symmetry, opts.node_budget);
    if (!opts.oracle_mode) {
        LowerBound warm = eng.lower(k, b);
        s.incumbent = warm.value;
        if (warm.certificate) s.best = warm.certificate->counts;
    }
    s.dfs(1);
    SolveResult out;
    out.value = s.incumbent;
    out.exact = !s.exhausted;
    out.nodes = s.nodes;
    out.certificate = MultiplicityVector(k, s.best);
    if (!feasible(out.certificate, b) || out.certificate.sum() != out.value)
        throw std::logic_error("solver certificate failed verification");
    return out;
}

Rational lp_optimum(int k, int64_t b) {
    if (k < kMinDim || k > kMaxValueDim) throw std::invalid_argument("k out of range");
    if (b < 0) throw std::invalid_argument("b must be non-negative");
    return Rational(full_count(k) * b, period(k));
}

std::vector<Rational> vertex_point(int k, int64_t b, int64_t m, const Gf2Vec& u) {
    check_dim(k);
    if (u.dim != k || u.is_zero()) throw std::invalid_argument("u must be nonzero of dim k");
    if (b < 0) throw std::invalid_argument("b must be non-negative");
    if (Rational(m) > lp_optimum(k, b)) throw std::invalid_argument("m exceeds the LP optimum");
    uint32_t n = (uint32_t)full_count(k);
    Rational inner = Rational(2 * b - m) + Rational(m - b, int64_t(1) << (k - 2));
    std::vector<Rational> coords(n);
    for (uint32_t v = 1; v <= n; ++v)
        coords[v - 1] = dot_bits(u.bits, v) ? inner : Rational(m - 2 * b);
    // contract: coordinates sum to m and every other hyperplane sum equals b
    Rational total(0);
    for (const Rational& c : coords) total = total + c;
    if (!(total == Rational(m))) throw std::logic_error("vertex coordinate sum mismatch");
    if (k <= 8) {
        for (uint32_t up = 1; up <= n; ++up) {
            if (up == u.bits) continue;
            Rational h(0);
            for (uint32_t v = 1; v <= n; ++v)
                if (dot_bits(up, v) == 0) h = h + coords[v - 1];
            if (!(h == Rational(b))) throw std::logic_error("vertex hyperplane sum mismatch");
        }
    }
    return coords;
}

SrmResult solve_srm(int64_t m, int64_t p, const SolveOptions& opts, BoundsEngine& eng) {
    if (m < 1 || p < 1 || p > m) throw std::invalid_argument("require 1 <= p <= m");
    std::string why;
    if (srm_special(m, p, &why)) return eng.srm_bounds(m, p);

    int64_t b = p - 1;
    SrmResult out;
    out.m = m;
    out.p = p;
    int klo = 1, khi = -1;
    std::optional<MultiplicityVector> witness;
    for (int k = 2; k <= (int)p + 1 && k <= kMaxValueDim; ++k) {
        BoundInterval bi = eng.bounds(k, b);
        if (m > bi.hi) {
            khi = k - 1;
            break;
        }
        if (m <= bi.lo) {
            klo = k;
            witness = bi.certificate;
            continue;
        }
        if (k > kMaxDim) continue;
        SolveResult sr = solve_mk(k, b, opts, eng);
        if (sr.value >= m) {
            klo = k;
            witness = sr.certificate;
            continue;
        }
        if (sr.exact) {
            khi = k - 1;
            break;
        }
        // budget exhausted, neither side settled at this k; keep scanning for
        // an upper cutoff from the bounds engine alone
    }
    if (khi < 0) khi = (int)p;
    khi = std::min<int>(khi, (int)p);
    out.lo = std::max(klo, 1);
    out.hi = khi;
    out.exact = (out.lo == out.hi);
    out.provenance = "solver-scan";
    if (out.exact && witness && out.lo >= kMinDim && out.lo <= kMaxDim &&
        witness->dim == out.lo && witness->sum() >= m) {
        MultiplicityVector mv = *witness;
        int64_t excess = mv.sum() - m;
        while (excess > 0) {
            size_t arg = 0;
            for (size_t i = 1; i < mv.counts.size(); ++i)
                if (mv.counts[i] > mv.counts[arg]) arg = i;
            --mv.counts[arg];
            --excess;
        }
        Gf2Mat cert = multiplicities_to_matrix(mv);
        if (!realizes_fast(cert, (int)p))
            throw std::logic_error("realizing certificate failed verification");
        out.certificate = std::move(cert);
    }
    return out;
}

PeriodicityReport periodicity_scan(int k, int64_t b_max, const SolveOptions& opts,
                                 BoundsEngine& eng) {
    check_dim(k);
    if (b_max < 0) throw std::invalid_argument("b_max must be non-negative");
    PeriodicityReport rep;
    rep.k = k;
    for (int64_t b = 0; b <= b_max; ++b) {
        PeriodicityEntry e;
        e.b = b;
        auto [Q, R] = split_b(k, b);
        e.covered = period_shift_applies(k, Q, R);
        SolveResult lo = solve_mk(k, b, opts, eng);
        SolveResult hi = solve_mk(k, b + period(k), opts, eng);
        e.value = lo.value;
        e.value_shift = hi.value;
        e.both_exact = lo.exact && hi.exact;
        if (!e.both_exact) {
            ++rep.skipped;
        } else {
            e.holds = (hi.value == lo.value + full_count(k));
            if (!e.holds) ++rep.violations;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace buch
