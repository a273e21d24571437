#include "tables.hpp"

#include <sstream>

namespace buch {

namespace {

std::vector<MkTableCell> build_mk_cells() {
    // residue sets per (k, R); "a|b" marks alternatives left open
    auto row = [](int k, std::initializer_list<const char*> cells) {
        std::vector<MkTableCell> out;
        int R = 0;
        for (const char* c : cells) {
            MkTableCell cell{k, R, {}};
            std::string s(c);
            size_t pos = 0;
            while (pos != std::string::npos) {
                size_t bar = s.find('|', pos);
                cell.values.push_back(std::stoll(s.substr(pos, bar - pos)));
                pos = bar == std::string::npos ? bar : bar + 1;
            }
            out.push_back(std::move(cell));
            ++R;
        }
        return out;
    };
    std::vector<MkTableCell> cells = row(2, {"0"});
    for (auto r : {
             row(3, {"0", "1", "4"}),
             row(4, {"0", "1", "2", "5", "8", "9", "12"}),
             row(5, {"0", "1", "2", "3", "6", "7|9", "10", "11|13", "16", "17", "18", "21",
                     "24", "25", "28"}),
             row(6, {"0",      "1",        "2",        "3",        "4",     "7",
                     "8|10",   "11",       "12|14",    "13|15|17", "14|16|18", "15|17|19",
                     "20|22",  "21|23|25", "24|26",    "27|29",    "32",    "33",
                     "34",     "35",       "38",       "39|41",    "42",    "43|45",
                     "48",     "49",       "50",       "53",       "56",    "57",
                     "60"}),
         })
        cells.insert(cells.end(), r.begin(), r.end());
    return cells;
}

std::vector<SrmTableCell> build_srm_cells() {
    // rows m = 2..40, entries for p = 2..min(m,18)
    static const char* rows[] = {
        /* m=2  */ "2",
        /* m=3  */ "2 3",
        /* m=4  */ "1 3 4",
        /* m=5  */ "1 2 4 5",
        /* m=6  */ "1 2 3 5 6",
        /* m=7  */ "1 1 3 4 6 7",
        /* m=8  */ "1 1 2 4 4 7 8",
        /* m=9  */ "1 1 2 2 4 5 8 9",
        /* m=10 */ "1 1 1 2 3 5 6 9 10",
        /* m=11 */ "1 1 1 2 3 4 6 7 10 11",
        /* m=12 */ "1 1 1 2 2 4 *<=5 7 8 11 12",
        /* m=13 */ "1 1 1 1 2 3 * *<=6 8 9 12 13",
        /* m=14 */ "1 1 1 1 2 3 4 * *<=7 9 10 13 14",
        /* m=15 */ "1 1 1 1 2 2 4 5 * *<=8 10 11 14 15",
        /* m=16 */ "1 1 1 1 1 2 2 5 * * *<=9 11 11 15 16",
        /* m=17 */ "1 1 1 1 1 2 2 3 *>=5 * * *<=10 11 12 16 17",
        /* m=18 */ "1 1 1 1 1 2 2 3 3 *>=5 * * * 12 13 17 18",
        /* m=19 */ "1 1 1 1 1 1 2 2 3 4 * * * * 13 14 18",
        /* m=20 */ "1 1 1 1 1 1 2 2 3 4 5 * * * * 14 15",
        /* m=21 */ "1 1 1 1 1 1 2 2 3 3 5 * * * * * 15",
        /* m=22 */ "1 1 1 1 1 1 1 2 2 3 4 * * * * * *",
        /* m=23 */ "1 1 1 1 1 1 1 2 2 2 4 5 * * * * *",
        /* m=24 */ "1 1 1 1 1 1 1 2 2 2 3 5 * * * * *",
        /* m=25 */ "1 1 1 1 1 1 1 1 2 2 3 3 *>=5 * * * *",
        /* m=26 */ "1 1 1 1 1 1 1 1 2 2 2 3 4 * * * *",
        /* m=27 */ "1 1 1 1 1 1 1 1 2 2 2 3 4 * * * *",
        /* m=28 */ "1 1 1 1 1 1 1 1 1 2 2 3 3 *>=5 * * *",
        /* m=29 */ "1 1 1 1 1 1 1 1 1 2 2 2 3 4 * * *",
        /* m=30 */ "1 1 1 1 1 1 1 1 1 2 2 2 2 4 5 * *",
        /* m=31 */ "1 1 1 1 1 1 1 1 1 1 2 2 2 3 5 6 *",
        /* m=32 */ "1 1 1 1 1 1 1 1 1 1 2 2 2 3 3 6 *",
        /* m=33 */ "1 1 1 1 1 1 1 1 1 1 2 2 2 2 3 3 *>=6",
        /* m=34 */ "1 1 1 1 1 1 1 1 1 1 1 2 2 2 3 3 4",
        /* m=35 */ "1 1 1 1 1 1 1 1 1 1 1 2 2 2 3 3 4",
        /* m=36 */ "1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 3 3",
        /* m=37 */ "1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 3",
        /* m=38 */ "1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 3",
        /* m=39 */ "1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 3",
        /* m=40 */ "1 1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2",
    };
    std::vector<SrmTableCell> cells;
    for (int64_t m = 2; m <= 40; ++m) {
        std::istringstream ls(rows[m - 2]);
        std::string tok;
        int64_t p = 2;
        while (ls >> tok) {
            SrmTableCell cell{m, p, CellKind::exact, 0};
            if (tok == "*") {
                cell.kind = CellKind::unknown;
            } else if (tok.rfind("*<=", 0) == 0) {
                cell.kind = CellKind::at_most;
                cell.value = std::stoi(tok.substr(3));
            } else if (tok.rfind("*>=", 0) == 0) {
                cell.kind = CellKind::at_least;
                cell.value = std::stoi(tok.substr(3));
            } else {
                cell.value = std::stoi(tok);
            }
            cells.push_back(cell);
            ++p;
        }
        if (p != std::min<int64_t>(m, 18) + 1)
            throw std::logic_error("reference row length mismatch at m=" + std::to_string(m));
    }
    return cells;
}

}  // namespace

const std::vector<MkTableCell>& mk_reference_cells() {
    static const std::vector<MkTableCell> cells = build_mk_cells();
    return cells;
}

const std::vector<SrmTableCell>& srm_reference_cells() {
    static const std::vector<SrmTableCell> cells = build_srm_cells();
    return cells;
}

bool solver_tractable(int k, int64_t b) {
    if (k <= 4) return b <= 24;
    if (k == 5) return b <= 9;
    if (k == 6) return b <= 6;
    return false;
}

std::string outcome_name(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::match: return "MATCH";
        case CheckOutcome::refine: return "REFINE";
        case CheckOutcome::mismatch: return "MISMATCH";
    }
    return "?";
}

namespace {

void push(CheckReport& rep, std::string label, CheckOutcome out, std::string detail) {
    switch (out) {
        case CheckOutcome::match: ++rep.matches; break;
        case CheckOutcome::refine: ++rep.refines; break;
        case CheckOutcome::mismatch: ++rep.mismatches; break;
    }
    rep.lines.push_back(CheckLine{std::move(label), out, std::move(detail)});
}

// outcome of an exact value v against a reference set S
CheckOutcome classify_exact(int64_t v, const std::vector<int64_t>& set) {
    for (int64_t s : set)
        if (s == v) return set.size() == 1 ? CheckOutcome::match : CheckOutcome::refine;
    return CheckOutcome::mismatch;
}

}  // namespace

CheckReport check_reference_tables(Engine& eng, const CheckOptions& opts) {
    CheckReport rep;
    if (opts.include_mk) {
        for (const MkTableCell& cell : mk_reference_cells()) {
            for (int64_t Q = 0; Q <= opts.qmax; ++Q) {
                int64_t b = period(cell.k) * Q + cell.R;
                int64_t shift = full_count(cell.k) * Q;
                std::vector<int64_t> expect;
                for (int64_t s : cell.values) expect.push_back(s + shift);
                std::ostringstream label;
                label << "mkb k=" << cell.k << " R=" << cell.R << " Q=" << Q;

                BoundInterval bi = eng.mk_bounds(cell.k, b);
                std::optional<int64_t> exact;
                if (bi.exact) exact = bi.lo;
                if (!exact && !opts.bounds_only && solver_tractable(cell.k, b)) {
                    SolveResult sr = eng.mk_solve(cell.k, b);
                    if (sr.exact) exact = sr.value;
                }
                std::ostringstream detail;
                if (exact) {
                    detail << "value " << *exact;
                    push(rep, label.str(), classify_exact(*exact, expect), detail.str());
                } else {
                    bool ok = false;
                    for (int64_t s : expect) ok = ok || (bi.lo <= s && s <= bi.hi);
                    detail << "interval [" << bi.lo << "," << bi.hi << "]";
                    push(rep, label.str(), ok ? CheckOutcome::match : CheckOutcome::mismatch,
                         detail.str());
                }
            }
        }
    }
    if (opts.include_srm) {
        for (const SrmTableCell& cell : srm_reference_cells()) {
            if (cell.p > opts.pmax || cell.m > opts.mmax) continue;
            std::ostringstream label;
            label << "srm m=" << cell.m << " p=" << cell.p;

            SrmResult r = eng.srm_bounds(cell.m, cell.p);
            if (!r.exact && !opts.bounds_only) {
                // gated exact refinement of the undecided levels
                int64_t b = cell.p - 1;
                int klo = r.lo, khi = r.hi;
                for (int k = std::max(2, r.lo); k <= r.hi && k <= kMaxDim; ++k) {
                    if (!solver_tractable(k, b)) continue;
                    BoundInterval bi = eng.mk_bounds(k, b);
                    if (cell.m <= bi.lo || cell.m > bi.hi) continue;
                    SolveResult sr = eng.mk_solve(k, b);
                    if (!sr.exact) continue;
                    if (cell.m <= sr.value)
                        klo = std::max(klo, k);
                    else
                        khi = std::min(khi, k - 1);
                }
                r.lo = klo;
                r.hi = khi;
                r.exact = (klo == khi);
            }
            std::ostringstream detail;
            if (r.exact)
                detail << "value " << r.lo;
            else
                detail << "interval [" << r.lo << "," << r.hi << "]";
            CheckOutcome out;
            switch (cell.kind) {
                case CellKind::exact:
                case CellKind::value_set:
                    out = r.exact ? (r.lo == cell.value ? CheckOutcome::match
                                                        : CheckOutcome::mismatch)
                                  : (r.lo <= cell.value && cell.value <= r.hi
                                         ? CheckOutcome::match
                                         : CheckOutcome::mismatch);
                    break;
                case CellKind::at_most:
                    out = r.exact ? (r.lo <= cell.value ? CheckOutcome::refine
                                                        : CheckOutcome::mismatch)
                                  : (r.lo <= cell.value ? CheckOutcome::match
                                                        : CheckOutcome::mismatch);
                    break;
                case CellKind::at_least:
                    out = r.exact ? (r.lo >= cell.value ? CheckOutcome::refine
                                                        : CheckOutcome::mismatch)
                                  : (r.hi >= cell.value ? CheckOutcome::match
                                                        : CheckOutcome::mismatch);
                    break;
                case CellKind::unknown:
                    out = r.exact ? CheckOutcome::refine : CheckOutcome::match;
                    break;
                default:
                    out = CheckOutcome::mismatch;
            }
            push(rep, label.str(), out, detail.str());
        }
    }
    return rep;
}

}  // namespace buch
