#include "bounds.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace buch {

namespace {

constexpr int64_t kCombineCap = 512;   // superadditive closure range
constexpr int64_t kArrayCap = 4096;    // per-k memo array range

void check_kb(int k, int64_t b) {
    if (k < kMinDim) throw std::invalid_argument("k must be at least 2");
    if (k > kMaxValueDim) throw std::invalid_argument("k exceeds supported range");
    if (b < 0) throw std::invalid_argument("b must be non-negative");
}

int64_t pow2(int e) { return int64_t(1) << e; }

}  // namespace

int window_of(int k, int64_t R) {
    for (int l = 0; l <= k - 2; ++l) {
        int64_t base = pow2(k - 1) - pow2(k - 1 - l);
        int64_t next = (l == k - 2) ? period(k) : pow2(k - 1) - pow2(k - 1 - (l + 1));
        if (R >= base && R < next) return l;
    }
    throw std::invalid_argument("R outside 0..2^{k-1}-2");
}

int64_t lp_upper_floor(int k, int64_t b) {
    check_kb(k, b);
    return 2 * b + b / period(k);
}

int codim2_value(int64_t m) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
    return (int)(m - std::bit_width((uint64_t)m));
}

bool period_shift_applies(int k, int64_t Q, int64_t R) {
    if (Q < 0) return false;
    if (R <= pow2(k - 2) - 1) return Q >= R;
    return Q >= R - pow2(k - 2);
}

std::optional<int64_t> mk_closed_form(int k, int64_t b, std::string* clause) {
    check_kb(k, b);
    if (k == 2) {
        if (clause) *clause = "linear-k2";
        return 3 * b;
    }
    auto [Q, R] = split_b(k, b);
    std::vector<std::pair<std::string, int64_t>> hits;
    if (R == 0) hits.emplace_back("divisible", full_count(k) * Q);
    for (int l = 0; l <= k - 2; ++l) {
        int64_t base = pow2(k - 1) - pow2(k - 1 - l);
        if (R < base) continue;
        int64_t r = R - base;
        int kk = k - l;
        if (r > kk - 1) continue;
        int64_t tail = (r <= kk - 2) ? r : r + 2;
        hits.emplace_back("window-family", full_count(k) * Q + pow2(k) - pow2(kk) + tail);
    }
    for (int l = 0; l <= k - 2; ++l) {
        int kk = k - l;
        if (kk < 4 || kk > 11) continue;
        if (R == pow2(k - 1) - pow2(kk - 1) + kk + 1)
            hits.emplace_back("near-window-family",
                              full_count(k) * Q + pow2(k) - pow2(kk) + kk + 5);
    }
    if (b == k) hits.emplace_back("b-eq-k", k + (k <= 4 ? 4 : 2));
    if (b == k + 1) hits.emplace_back("b-eq-k+1", k + (k <= 11 ? 5 : 3));
    if (hits.empty()) return std::nullopt;
    for (const auto& h : hits)
        if (h.second != hits[0].second)
            throw std::logic_error("closed-form clauses disagree at k=" + std::to_string(k) +
                                   " b=" + std::to_string(b));
    if (clause) *clause = hits[0].first;
    return hits[0].second;
}

std::optional<int64_t> srm_special(int64_t m, int64_t p, std::string* why) {
    if (m < 1 || p < 0 || p > m) throw std::invalid_argument("require 0 <= p <= m");
    auto ret = [&](int64_t v, const char* w) {
        if (why) *why = w;
        return std::optional<int64_t>(v);
    };
    if (p == 0) return ret(0, "p=0");
    if (p == m) return ret(m, "p=m");
    if (p == 1) return ret(1, "p=1");
    if (p == m - 1) return ret(m - 1, "p=m-1");
    if (p == m - 2 && m >= 3) return ret(codim2_value(m), "log-two-drop");
    if (p == m - 3 && m >= 4) return ret(codim2_value(m - 1), "log-three-drop");
    if (m >= 3 * p - 2) return ret(1, "rank1-range");
    return std::nullopt;
}

BoundsEngine::LowEntry BoundsEngine::lower_entry(int k, int64_t b) {
    if (b <= kArrayCap) {
        ensure_lower(k, b);
        return low_[k][(size_t)b];
    }
    auto key = std::make_pair(k, b);
    auto it = low_large_.find(key);
    if (it != low_large_.end()) return it->second;
    auto [Q, R] = split_b(k, b);
    LowEntry e{full_count(k) * Q + R, Src::trivial, 0};
    // shift the best small-b entry by whole periods
    int64_t shifted = full_count(k) * Q + lower_entry(k, R).value;
    if (shifted > e.value) e = LowEntry{shifted, Src::uniform_shift, Q};
    int l = window_of(k, R);
    int64_t sp = full_count(k) * Q + R + pow2(k - 1) - pow2(k - 1 - l);
    if (sp > e.value) e = LowEntry{sp, Src::subspace_pair, 0};
    low_large_[key] = e;
    return e;
}

void BoundsEngine::ensure_lower(int k, int64_t bmax) {
    auto& arr = low_[k];
    if ((int64_t)arr.size() > bmax) return;
    int64_t from = (int64_t)arr.size();
    arr.resize((size_t)bmax + 1);
    for (int64_t b = from; b <= bmax; ++b) {
        auto [Q, R] = split_b(k, b);
        LowEntry e{full_count(k) * Q + R, Src::trivial, 0};
        auto consider = [&](int64_t v, Src s, int64_t aux) {
            if (v > e.value) e = LowEntry{v, s, aux};
        };
        if (b >= k - 1) consider(k + 1, Src::basis_sum, 0);
        {
            int l = window_of(k, R);
            consider(full_count(k) * Q + R + pow2(k - 1) - pow2(k - 1 - l),
                     Src::subspace_pair, 0);
        }
        if (k >= 3) {
            for (int q : {1, 2, 4}) {
                if (q == 4 && (k % 2)) continue;
                if (R == pow2(k - 2) - q) {
                    int64_t s = deleted_halfspace_sum(k, q);
                    if (s >= 0) consider(full_count(k) * Q + s, Src::deleted_halfspace, q);
                }
            }
        }
        if (k >= 3 && k <= kMaxDim) {
            int64_t j = b + 3 - k;
            if (j >= 3 && j <= k && k <= pow2((int)j) - 1 - j) {
                if (auto mv = skeleton_point(k, b)) consider(b + 4, Src::skeleton, 0);
            }
        }
        if (k >= 3 && R >= pow2(k - 2)) {
            int64_t r_src = R - pow2(k - 2);
            consider(full_count(k) * Q + pow2(k - 1) + lower_entry(k - 1, r_src).value,
                     Src::lift, r_src);
        }
        if (b <= kCombineCap) {
            for (int64_t j = 1; j <= b / 2; ++j)
                consider(arr[(size_t)j].value + arr[(size_t)(b - j)].value, Src::combine, j);
        }
        arr[(size_t)b] = e;
    }
}

MultiplicityVector BoundsEngine::materialize(int k, int64_t b) {
    if (k > kMaxDim) throw std::logic_error("certificate requested above dimension cap");
    LowEntry e = lower_entry(k, b);
    auto [Q, R] = split_b(k, b);
    switch (e.src) {
        case Src::trivial:
            return excess_point(k, b);
        case Src::basis_sum:
            return matrix_to_multiplicities(basis_plus_sum_matrix(k + 1)).first;
        case Src::subspace_pair:
            return subspace_pair_point(k, Q, R, window_of(k, R));
        case Src::deleted_halfspace:
            return combine(uniform_point(k, Q), deleted_halfspace_point(k, (int)e.aux));
        case Src::skeleton: {
            auto mv = skeleton_point(k, b);
            if (!mv) throw std::logic_error("skeleton certificate vanished");
            return *mv;
        }
        case Src::lift:
            return lift_dimension(materialize(k - 1, e.aux), Q, e.aux);
        case Src::combine:
            return combine(materialize(k, e.aux), materialize(k, b - e.aux));
        case Src::uniform_shift:
            return combine(uniform_point(k, e.aux), materialize(k, b % period(k)));
    }
    throw std::logic_error("unreachable");
}

LowerBound BoundsEngine::lower(int k, int64_t b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    check_kb(k, b);
    LowEntry e = lower_entry(k, b);
    LowerBound out;
    out.value = e.value;
    auto [Q, R] = split_b(k, b);
    switch (e.src) {
        case Src::trivial: out.source = (R == 0) ? "uniform" : "single-excess"; break;
        case Src::basis_sum: out.source = "basis-sum"; break;
        case Src::subspace_pair: out.source = "subspace-pair"; break;
        case Src::deleted_halfspace: out.source = "deleted-halfspace"; break;
        case Src::skeleton: out.source = "skeleton-point"; break;
        case Src::lift: out.source = "dimension-lift"; break;
        case Src::combine: out.source = "superadditive-sum"; break;
        case Src::uniform_shift: out.source = "superadditive-sum"; break;
    }
    if (k <= kMaxDim) {
        MultiplicityVector mv = materialize(k, b);
        if (!feasible(mv, b) || mv.sum() != e.value)
            throw std::logic_error("lower-bound certificate failed verification");
        out.certificate = std::move(mv);
    }
    return out;
}

int64_t BoundsEngine::upper_value(int k, int64_t b, std::vector<std::string>* tags) {
    auto key = std::make_pair(k, b);
    auto it = up_.find(key);
    if (it == up_.end()) {
        UpperBound ub;
        std::string clause;
        if (auto cf = mk_closed_form(k, b, &clause)) {
            ub.value = *cf;
            ub.provenance = {"closed:" + clause};
        } else {
            auto [Q, R] = split_b(k, b);
            int64_t best = lp_upper_floor(k, b);
            std::string why = "lp-floor";
            auto consider = [&](int64_t v, const std::string& w) {
                if (v < best) {
                    best = v;
                    why = w;
                }
            };
            if (k >= 3) {
                if (R != 0)
                    consider(upper_value(k - 1, b - Q - 1, nullptr) + Q + 1, "rank-recursion");
                consider(upper_value(k - 1, b, nullptr), "rank-monotone");
            }
            {
                int l = window_of(k, R);
                if (R != pow2(k - 1) - pow2(k - 1 - l))
                    consider(full_count(k) * Q + 2 * R - (R % 2 == 0 ? 2 : 1),
                             "double-excess-cap");
            }
            if (codim2_value(b + 3) < k) consider(b + 2, "skeleton-cap");
            ub.value = best;
            ub.provenance = {why};
            if (((ub.value - b) & 1) != 0) {
                --ub.value;
                ub.provenance.push_back("parity");
            }
        }
        it = up_.emplace(key, std::move(ub)).first;
    }
    if (tags) *tags = it->second.provenance;
    return it->second.value;
}

UpperBound BoundsEngine::upper(int k, int64_t b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    check_kb(k, b);
    UpperBound out;
    out.value = upper_value(k, b, &out.provenance);
    return out;
}

BoundInterval BoundsEngine::bounds(int k, int64_t b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    check_kb(k, b);
    int64_t shift_steps = 0;
    int64_t breduced = b;
    while (true) {
        auto [Q, R] = split_b(k, breduced);
        if (Q >= 1 && period_shift_applies(k, Q - 1, R)) {
            breduced -= period(k);
            ++shift_steps;
        } else {
            break;
        }
    }
    BoundInterval out;
    out.k = k;
    out.b = b;
    std::string clause;
    auto cf = mk_closed_form(k, breduced, &clause);
    LowerBound low = lower(k, breduced);
    if (cf) {
        if (low.value > *cf) throw std::logic_error("witness exceeds closed form");
        out.lo = out.hi = *cf;
        out.lo_provenance = {"closed:" + clause};
        out.hi_provenance = {"closed:" + clause};
        if (low.value == *cf && low.certificate) {
            out.lo_provenance.push_back(low.source);
            out.certificate = low.certificate;
        } else {
            out.lo_provenance.push_back("uncertified");
        }
    } else {
        UpperBound up = upper(k, breduced);
        out.lo = low.value;
        out.hi = up.value;
        out.lo_provenance = {low.source};
        out.hi_provenance = up.provenance;
        out.certificate = low.certificate;
        if (out.lo > out.hi) throw std::logic_error("lower bound exceeds upper bound");
    }
    if (shift_steps > 0) {
        int64_t shift = shift_steps * full_count(k);
        out.lo += shift;
        out.hi += shift;
        out.lo_provenance.push_back("period-shift");
        out.hi_provenance.push_back("period-shift");
        if (out.certificate && k <= kMaxDim)
            out.certificate = combine(uniform_point(k, shift_steps), *out.certificate);
    }
    out.exact = (out.lo == out.hi);
    return out;
}

namespace {

// Remove sum - m units, largest counts first, then build the matrix.
Gf2Mat trim_to_columns(MultiplicityVector mv, int64_t m) {
    int64_t excess = mv.sum() - m;
    while (excess > 0) {
        size_t arg = 0;
        for (size_t i = 1; i < mv.counts.size(); ++i)
            if (mv.counts[i] > mv.counts[arg]) arg = i;
        if (mv.counts[arg] == 0) throw std::logic_error("certificate too small to trim");
        --mv.counts[arg];
        --excess;
    }
    return multiplicities_to_matrix(mv);
}

}  // namespace

SrmResult BoundsEngine::srm_bounds(int64_t m, int64_t p) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    SrmResult out;
    out.m = m;
    out.p = p;
    std::string why;
    if (auto sp = srm_special(m, p, &why)) {
        out.lo = out.hi = (int)*sp;
        out.exact = true;
        out.provenance = why;
        if (*sp >= kMinDim) {
            std::optional<Gf2Mat> cert;
            if (p == m && m <= kMaxDim) {
                std::vector<Gf2Vec> cols;
                for (int i = 1; i <= m; ++i) cols.push_back(basis_vector((int)m, i));
                cert = Gf2Mat((int)m, std::move(cols));
            } else if (p == m - 1 && m - 1 <= kMaxDim && m >= 3) {
                cert = basis_plus_sum_matrix((int)m);
            } else if (p == m - 2 && *sp <= kMaxDim) {
                cert = all_but_two_matrix((int)m);
            } else if (p == m - 3 && *sp <= kMaxDim) {
                cert = append_column_sum(all_but_two_matrix((int)(m - 1)));
            }
            if (cert) {
                if (!realizes_fast(*cert, (int)p))
                    throw std::logic_error("special-case certificate failed verification");
                out.certificate = std::move(cert);
            }
        }
        return out;
    }
    int64_t b = p - 1;
    int klo = 1, khi = -1, kwitness = 0;
    for (int k = 2; k <= (int)p + 1 && k <= kMaxValueDim; ++k) {
        BoundInterval bi = bounds(k, b);
        if (m <= bi.lo) {
            klo = k;
            kwitness = k;
        }
        if (m > bi.hi) {
            khi = k - 1;
            break;
        }
    }
    if (khi < 0) khi = (int)p;
    khi = std::min<int>(khi, (int)p);
    out.lo = std::max(klo, 1);
    out.hi = khi;
    out.exact = (out.lo == out.hi);
    out.provenance = "bracket-scan";
    if (out.exact && kwitness == out.lo && kwitness <= kMaxDim) {
        BoundInterval bi = bounds(kwitness, b);
        if (bi.certificate && bi.certificate->sum() >= m) {
            Gf2Mat cert = trim_to_columns(*bi.certificate, m);
            if (!realizes_fast(cert, (int)p))
                throw std::logic_error("trimmed certificate failed verification");
            out.certificate = std::move(cert);
        }
    }
    return out;
}

}  // namespace buch
