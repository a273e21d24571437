// Acceptance suite: recomputes the headline results at their stated
// tolerances and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "constructions.hpp"
#include "engine.hpp"
#include "tables.hpp"

using namespace buch;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail, double seconds) {
    if (!pass) ++failures;
    std::printf("%-4s %-14s %s (%.1fs)\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
}

template <typename F>
void criterion(const std::string& name, F&& body) {
    auto t0 = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(name, pass, detail, std::chrono::duration<double>(Clock::now() - t0).count());
}

Engine eng;  // shared so exact values memoize across criteria

std::map<std::pair<int, int64_t>, int64_t> solved;  // exact values seen so far

bool solve_is(int k, int64_t b, int64_t expect, std::string& detail) {
    SolveResult r = eng.mk_solve(k, b);
    if (!r.exact) {
        detail += " m_" + std::to_string(k) + "(" + std::to_string(b) + ") budget exhausted;";
        return false;
    }
    solved[{k, b}] = r.value;
    if (r.value != expect) {
        detail += " m_" + std::to_string(k) + "(" + std::to_string(b) + ")=" +
                  std::to_string(r.value) + " expected " + std::to_string(expect) + ";";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    eng.options.node_budget = 100000000;  // default budget

    criterion("criterion-1", [](std::string& detail) {
        bool ok = true;
        for (int64_t b = 0; b <= 30; ++b) ok &= solve_is(2, b, 3 * b, detail);
        if (ok) detail = "m_2(b) = 3b for b <= 30";
        return ok;
    });

    criterion("criterion-2", [](std::string& detail) {
        bool ok = true;
        const int64_t residue[3] = {0, 1, 4};
        for (int64_t b = 0; b <= 20; ++b)
            ok &= solve_is(3, b, 7 * (b / 3) + residue[b % 3], detail);
        if (ok) detail = "m_3(b) = 7Q + (0,1,4) for b <= 20";
        return ok;
    });

    criterion("criterion-3", [](std::string& detail) {
        bool ok = true;
        const int64_t residue[7] = {0, 1, 2, 5, 8, 9, 12};
        for (int64_t q = 0; q <= 1; ++q)
            for (int64_t r = 0; r <= 6; ++r)
                ok &= solve_is(4, 7 * q + r, 15 * q + residue[r], detail);
        if (ok) detail = "m_4(b) matches the k=4 reference column for b <= 13";
        return ok;
    });

    criterion("criterion-4", [](std::string& detail) {
        Engine oracle_eng;
        oracle_eng.options.oracle_mode = true;
        std::string good, bad;
        for (int k = 2; k <= 9; ++k) {
            oracle_eng.options.node_budget = (k <= 6) ? 4000000000LL : 200000000LL;
            SolveResult r = solve_mk(k, k - 1, oracle_eng.options, oracle_eng.bounds_engine());
            if (r.exact && r.value == k + 1) {
                good += " k=" + std::to_string(k);
            } else if (!r.exact) {
                bad += " k=" + std::to_string(k) + " (budget " +
                       std::to_string(r.nodes) + " nodes exhausted, incumbent " +
                       std::to_string(r.value) + ")";
            } else {
                bad += " k=" + std::to_string(k) + " (value " + std::to_string(r.value) + ")";
            }
        }
        if (bad.empty()) {
            detail = "m_k(k-1) = k+1 in oracle mode for k = 2..9";
            return true;
        }
        detail = "oracle-mode exact:" + good + "; unattained:" + bad +
                 " -- unpruned search exceeds any feasible node budget for k >= 7";
        return false;
    });

    criterion("criterion-5", [](std::string& detail) {
        bool ok = true;
        const int64_t expect[8] = {0, 1, 2, 3, 6, 7, 10, -1};  // b = 0..6, b=7 in {11,13}
        for (int64_t b = 0; b <= 6; ++b) ok &= solve_is(5, b, expect[b], detail);
        SolveResult r7 = eng.mk_solve(5, 7);
        if (!r7.exact || (r7.value != 11 && r7.value != 13)) {
            detail += " m_5(7) failed;";
            ok = false;
        } else {
            solved[{5, 7}] = r7.value;
            detail += " m_5(7) refined to " + std::to_string(r7.value) + ";";
        }
        ok &= solve_is(5, 8, 16, detail);
        if (ok) detail = "m_5(b) exact for b <= 8:" + detail;
        return ok;
    });

    criterion("criterion-5-stretch", [](std::string& detail) {
        bool ok = true;
        const int64_t expect[8] = {0, 1, 2, 3, 4, 7, 8, 11};
        Engine big;
        big.options.node_budget = 2000000000LL;
        for (int64_t b = 0; b <= 6; ++b) {
            SolveResult r = big.mk_solve(6, b);
            if (!r.exact || r.value != expect[b]) {
                detail += " m_6(" + std::to_string(b) + ") not confirmed;";
                ok = false;
            } else {
                solved[{6, b}] = r.value;
            }
        }
        // b = 7: certified exact by bounds; the solver confirms the witness
        BoundInterval bi = eng.mk_bounds(6, 7);
        big.options.node_budget = 300000000LL;
        SolveResult r7 = big.mk_solve(6, 7);
        if (!(bi.exact && bi.lo == 11 && r7.value == 11)) {
            detail += " m_6(7) != 11;";
            ok = false;
        } else if (r7.exact) {
            solved[{6, 7}] = 11;
            detail += " m_6(7)=11 search-closed;";
        } else {
            detail += " m_6(7)=11 (witness found; closed by certified bounds);";
        }
        if (ok) detail = "m_6(b) matches for b <= 7:" + detail;
        return ok;
    });

    criterion("criterion-6", [](std::string& detail) {
        CheckOptions restricted;
        restricted.bounds_only = false;
        restricted.include_mk = false;
        restricted.pmax = 8;
        restricted.mmax = 24;
        CheckReport rep = check_reference_tables(eng, restricted);
        CheckOptions full;
        full.bounds_only = true;
        CheckReport rep_full = check_reference_tables(eng, full);
        std::ostringstream os;
        os << "restricted window: " << rep.matches << " matches, " << rep.refines
           << " refines, " << rep.mismatches << " mismatches; full table (bounds only): "
           << rep_full.matches << " matches, " << rep_full.refines << " refines, "
           << rep_full.mismatches << " mismatches";
        detail = os.str();
        return rep.mismatches == 0 && rep_full.mismatches == 0;
    });

    criterion("criterion-7", [](std::string& detail) {
        bool ok = true;
        Engine big;
        big.options.node_budget = 2000000000LL;
        for (int64_t m = 3; m <= 9; ++m) {
            int64_t p = m - 2;
            int64_t b = p - 1;
            // solver-backed bracket scan, no closed-form shortcut
            int s = 1;
            for (int k = 2; k <= (int)p + 1 && k <= kMaxDim; ++k) {
                SolveResult r = big.mk_solve(k, b);
                if (!r.exact) {
                    detail += " m_" + std::to_string(k) + "(" + std::to_string(b) +
                              ") budget exhausted;";
                    ok = false;
                    break;
                }
                if (m <= r.value)
                    s = k;
                else
                    break;
            }
            int64_t expect = *srm_special(m, p);
            if (s != expect) {
                detail += " s_R(" + std::to_string(m) + "," + std::to_string(p) + ")=" +
                          std::to_string(s) + " formula says " + std::to_string(expect) + ";";
                ok = false;
            }
        }
        if (ok) detail = "solver scan reproduces [m - log2(m+1)] for m = 3..9";
        return ok;
    });

    criterion("criterion-8", [](std::string& detail) {
        bool ok = true;
        std::ostringstream os;
        {  // parity with parity pruning disabled
            Engine noparity;
            noparity.options.use_parity_pruning = false;
            noparity.options.node_budget = 1000000000LL;
            int cases = 0;
            for (int k = 2; k <= 4; ++k)
                for (int64_t b = 0; b <= 12; ++b) {
                    SolveResult r = noparity.mk_solve(k, b);
                    if (!r.exact || ((r.value - b) & 1) != 0) ok = false;
                    ++cases;
                }
            for (int64_t b = 0; b <= 6; ++b) {
                SolveResult r = noparity.mk_solve(5, b);
                if (!r.exact || ((r.value - b) & 1) != 0) ok = false;
                ++cases;
            }
            os << "parity(" << cases << ") ";
        }
        {  // monotonicity of exact s_R values across the reference window
            int cases = 0;
            std::map<std::pair<int64_t, int64_t>, int> exact;
            for (int64_t m = 2; m <= 40; ++m)
                for (int64_t p = 1; p <= std::min<int64_t>(m, 18); ++p) {
                    SrmResult r = eng.srm_bounds(m, p);
                    if (r.exact) exact[{m, p}] = r.lo;
                }
            for (auto& [mp, s] : exact) {
                auto [m, p] = mp;
                if (exact.count({m, p + 1}) && !(s <= exact[{m, p + 1}])) ok = false;
                if (exact.count({m + 1, p}) && !(s >= exact[{m + 1, p}])) ok = false;
                ++cases;
            }
            os << "monotone(" << cases << ") ";
        }
        {  // superadditivity and dimension monotonicity over solved values
            int cases = 0;
            for (auto& [kb, v] : solved) {
                auto [k, b] = kb;
                for (auto& [kb2, w] : solved) {
                    auto [k2, b2] = kb2;
                    if (k2 != k || !solved.count({k, b + b2})) continue;
                    if (v + w > solved[{k, b + b2}]) ok = false;
                    ++cases;
                }
                if (solved.count({k + 1, b})) {
                    if (solved[{k + 1, b}] > v) ok = false;
                    ++cases;
                }
            }
            os << "superadditive+rank(" << cases << ") ";
        }
        {  // hyperplane criterion == subset enumeration, exhaustively
            int cases = 0;
            for (int k = 2; k <= 3; ++k) {
                int mmax = k == 2 ? 6 : 5;
                for (int m = 1; m <= mmax; ++m) {
                    std::vector<uint32_t> cols(m, 0);
                    uint32_t top = (1u << k) - 1;
                    while (true) {
                        std::vector<Gf2Vec> v;
                        for (uint32_t c : cols) v.push_back(Gf2Vec(k, c));
                        Gf2Mat a(k, std::move(v));
                        for (int p = 1; p <= m; ++p) {
                            if (realizes_fast(a, p) != realizes_naive(a, p)) ok = false;
                            ++cases;
                        }
                        int i = m - 1;
                        while (i >= 0 && cols[i] == top) cols[i--] = 0;
                        if (i < 0) break;
                        ++cols[i];
                    }
                }
            }
            os << "criterion-equivalence(" << cases << ") ";
        }
        {  // feasibility bridge, exhaustive k <= 3, b <= 3 (matrix view needs k <= b+1)
            int cases = 0;
            for (int k = 2; k <= 3; ++k) {
                int64_t n = full_count(k);
                std::vector<int64_t> counts(n, 0);
                while (true) {
                    MultiplicityVector mv(k, counts);
                    Gf2Mat a = multiplicities_to_matrix(mv);
                    for (int64_t b = k - 1; b <= 3; ++b) {
                        if (mv.sum() < b + 1) continue;
                        if (feasible(mv, b) != realizes_fast(a, (int)b + 1)) ok = false;
                        ++cases;
                    }
                    int i = (int)n - 1;
                    while (i >= 0 && counts[i] == 2) counts[i--] = 0;
                    if (i < 0) break;
                    ++counts[i];
                }
            }
            os << "bridge(" << cases << ") ";
        }
        {  // even-gap stability on exact pairs
            int cases = 0;
            for (int64_t p = 2; p <= 18; ++p)
                for (int64_t m = p; m <= 39; ++m) {
                    if (((m - p) & 1) != 0) continue;
                    SrmResult a = eng.srm_bounds(m, p);
                    SrmResult b = eng.srm_bounds(m + 1, p);
                    if (a.exact && b.exact) {
                        if (a.lo != b.lo) ok = false;
                        ++cases;
                    }
                }
            os << "even-gap(" << cases << ")";
        }
        detail = os.str();
        return ok;
    });

    criterion("criterion-9", [](std::string& detail) {
        bool ok = true;
        int built = 0;
        for (int k = 3; k <= 6; ++k) {
            for (int l = 0; l <= k - 2; ++l) {
                int64_t base = (int64_t(1) << (k - 1)) - (int64_t(1) << (k - 1 - l));
                int64_t next = (int64_t(1) << (k - 1)) - (int64_t(1) << (k - 1 - (l + 1)));
                for (int64_t R = base; R < next && R <= period(k) - 1; ++R) {
                    for (int64_t Q = 0; Q <= 2; ++Q) {
                        // the constructor self-verifies feasibility and the sum
                        MultiplicityVector mv = subspace_pair_point(k, Q, R, l);
                        if (mv.sum() != full_count(k) * Q + R + base) ok = false;
                        ++built;
                    }
                }
            }
        }
        for (int k = 3; k <= 8; ++k) {
            for (int q : {1, 2, 4}) {
                if (q == 4 && (k % 2)) continue;
                MultiplicityVector mv = deleted_halfspace_point(k, q);
                if (mv.sum() != deleted_halfspace_sum(k, q)) ok = false;
                ++built;
            }
        }
        MultiplicityVector l58 = lift_dimension(zero_multiplicities(4), 0, 0);
        if (l58.sum() != 16 || !feasible(l58, 8)) ok = false;
        std::vector<int64_t> c3(full_count(3), 0);
        c3[0] = 1;
        MultiplicityVector l45 = lift_dimension(MultiplicityVector(3, c3), 0, 1);
        if (l45.sum() != 9 || !feasible(l45, 5)) ok = false;
        built += 2;
        detail = std::to_string(built) + " constructions self-verified";
        return ok;
    });

    criterion("criterion-10", [](std::string& detail) {
        PeriodicityReport r3 = eng.scan_periodicity(3, 12);
        PeriodicityReport r4 = eng.scan_periodicity(4, 10);
        PeriodicityReport r4far = eng.scan_periodicity(4, 24);
        bool ok = r3.violations == 0 && r3.skipped == 0 && r4.violations == 0 &&
                  r4.skipped == 0 && r4far.violations == 0;
        int covered = 0;
        for (const auto& e : r4far.entries) {
            if (e.b >= 21 && !e.covered) ok = false;  // guaranteed range must be flagged
            if (e.covered) ++covered;
        }
        detail = "k=3: 13 checks, k=4: 11 checks, zero violations; " +
                 std::to_string(covered) + " entries flagged as guaranteed";
        return ok;
    });

    criterion("criterion-11", [](std::string& detail) {
        int cases = 0;
        for (int k = 2; k <= 5; ++k)
            for (int64_t b = 0; b <= 8; ++b)
                for (int64_t m = 0; Rational(m) <= lp_optimum(k, b); ++m)
                    for (uint32_t u = 1; u <= (uint32_t)full_count(k); ++u) {
                        // identities are asserted inside vertex_point
                        vertex_point(k, b, m, Gf2Vec(k, u));
                        ++cases;
                    }
        detail = std::to_string(cases) + " vertices checked (sum and hyperplane identities)";
        return cases > 1000;
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
