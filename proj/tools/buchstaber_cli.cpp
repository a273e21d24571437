// Command-line frontend for the real Buchstaber invariant library. Links the
// C API only.
//
// Exit codes: 0 success/exact, 1 usage or parse error, 2 interval result (srm,
// mkb) or reference-table mismatch (check-tables), 3 matrix fails to realize
// its declared p (verify).

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "buchstaber.h"

namespace {

struct CommonFlags {
    int64_t budget = 100000000;
    bool oracle = false;
    bool no_parity = false;
    bool no_symmetry = false;
    bool certificate = false;
    std::string format = "text";
    std::string cache_path;
    bool cache_requested = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--budget", f.budget, "solver node budget");
    cmd->add_flag("--oracle", f.oracle, "oracle mode: no warm start, no parity/symmetry pruning");
    cmd->add_flag("--no-parity", f.no_parity, "disable parity pruning");
    cmd->add_flag("--no-symmetry", f.no_symmetry, "disable symmetry breaking");
    cmd->add_flag("--certificate", f.certificate, "print the certificate");
    cmd->add_option("--format", f.format, "output format: text, csv or markdown");
    auto* copt = cmd->add_option("--cache", f.cache_path,
                                 "result cache file (default mkb-cache.json)");
    copt->expected(0, 1);
    cmd->callback([copt, &f] {
        if (copt->count() > 0) {
            f.cache_requested = true;
            if (f.cache_path.empty()) f.cache_path = "mkb-cache.json";
        }
    });
}

struct EngineGuard {
    bv_engine* e = nullptr;
    const CommonFlags* flags = nullptr;

    explicit EngineGuard(const CommonFlags& f) : flags(&f) {
        e = bv_engine_new();
        bv_set_node_budget(e, f.budget);
        bv_set_flags(e, f.oracle ? 1 : 0, f.no_parity ? 0 : 1, f.no_symmetry ? 0 : 1);
        if (f.cache_requested) bv_cache_load(e, f.cache_path.c_str(), nullptr, nullptr);
    }
    ~EngineGuard() {
        if (flags->cache_requested) bv_cache_store(e, flags->cache_path.c_str());
        bv_engine_free(e);
    }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    bv_string_free(s);
    return out;
}

std::string interval_str(const bv_interval& iv) {
    if (iv.exact) return std::to_string(iv.lo);
    return "[" + std::to_string(iv.lo) + ".." + std::to_string(iv.hi) + "]";
}

bool parse_range(const std::string& text, int64_t& lo, int64_t& hi) {
    size_t pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, pos));
            hi = std::stoll(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

int run_srm(const CommonFlags& f, int64_t m, int64_t p, bool bounds_only) {
    EngineGuard eng(f);
    bv_interval iv{};
    char* prov = nullptr;
    char* cert = nullptr;
    int rc = bounds_only ? bv_srm_bounds(eng.e, m, p, &iv, &prov)
                         : bv_srm_solve(eng.e, m, p, &iv, &prov, &cert);
    if (rc != BV_OK) {
        std::cerr << "error: invalid arguments (need 1 <= p <= m)\n";
        return 1;
    }
    std::cout << interval_str(iv) << "\n";
    std::cout << "provenance: " << take_string(prov) << "\n";
    if (f.certificate) {
        std::string mat = take_string(cert);
        if (mat.empty())
            std::cout << "certificate: none available\n";
        else
            std::cout << "certificate:\n" << mat;
    } else if (cert) {
        bv_string_free(cert);
    }
    return iv.exact ? 0 : 2;
}

int run_mkb(const CommonFlags& f, int k, int64_t b, bool exact) {
    EngineGuard eng(f);
    bv_interval iv{};
    char* prov = nullptr;
    int64_t* cert = nullptr;
    int32_t cert_len = 0;
    int rc = bv_mk_bounds(eng.e, k, b, &iv, &prov, f.certificate ? &cert : nullptr,
                          f.certificate ? &cert_len : nullptr);
    if (rc != BV_OK) {
        std::cerr << "error: invalid arguments (need 2 <= k <= 16, b >= 0)\n";
        return 1;
    }
    std::string provenance = take_string(prov);
    if (exact && !iv.exact) {
        int64_t value = 0;
        int is_exact = 0;
        int64_t nodes = 0;
        int64_t* scert = nullptr;
        int32_t scert_len = 0;
        rc = bv_mk_solve(eng.e, k, b, &value, &is_exact, &nodes,
                         f.certificate ? &scert : nullptr,
                         f.certificate ? &scert_len : nullptr);
        if (rc == BV_OK || rc == BV_EBUDGET) {
            if (scert) {
                bv_buffer_free(cert);
                cert = scert;
                cert_len = scert_len;
            }
            if (rc == BV_OK) {
                iv.lo = iv.hi = value;
                iv.exact = 1;
                provenance = "solver";
            } else {
                if (value > iv.lo) iv.lo = value;
                provenance += ",budget-exhausted";
            }
        } else {
            bv_buffer_free(cert);
            std::cerr << "error: invalid arguments\n";
            return 1;
        }
    }
    std::cout << interval_str(iv) << "\n";
    std::cout << "provenance: " << provenance << "\n";
    if (f.certificate) {
        if (cert) {
            std::cout << "certificate:";
            for (int32_t i = 0; i < cert_len; ++i) std::cout << ' ' << cert[i];
            std::cout << "\n";
            bv_buffer_free(cert);
        } else {
            std::cout << "certificate: none available\n";
        }
    }
    return iv.exact ? 0 : 2;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    int realized = 0, k = 0, m = 0, p = 0;
    uint32_t wu = 0;
    int64_t wc = 0;
    int rc = bv_verify_matrix_text(buf.str().c_str(), &realized, &wu, &wc, &k, &m, &p);
    if (rc != BV_OK) {
        std::cerr << "error: malformed matrix file\n";
        return 1;
    }
    if (realized) {
        std::cout << "ok: every " << p << " columns of the " << k << "x" << m
                  << " matrix span\n";
        return 0;
    }
    std::cout << "violation: hyperplane u=" << wu << " holds " << wc << " columns (max allowed "
              << p - 1 << ")\n";
    return 3;
}

struct TableCell {
    int64_t a, b;
    std::string value;
    int64_t lo, hi;
    std::string prov;
};

void emit_table(const std::string& format, const char* h1, const char* h2,
                const std::vector<TableCell>& cells) {
    if (format == "csv") {
        std::cout << h1 << ',' << h2 << ",value,lo,hi,provenance\n";
        for (const TableCell& c : cells)
            std::cout << c.a << ',' << c.b << ',' << c.value << ',' << c.lo << ',' << c.hi
                      << ',' << c.prov << "\n";
    } else {  // markdown
        std::cout << "| " << h1 << " | " << h2 << " | value |\n|---|---|---|\n";
        for (const TableCell& c : cells)
            std::cout << "| " << c.a << " | " << c.b << " | " << c.value << " |\n";
    }
}

int run_table(const CommonFlags& f, const std::string& kind, const std::string& range1,
              const std::string& range2, bool exact) {
    int64_t lo1, hi1, lo2, hi2;
    if (!parse_range(range1, lo1, hi1) || !parse_range(range2, lo2, hi2)) {
        std::cerr << "error: ranges must be N or N..M\n";
        return 1;
    }
    EngineGuard eng(f);
    std::vector<TableCell> cells;
    for (int64_t a = lo1; a <= hi1; ++a) {
        for (int64_t b = lo2; b <= hi2; ++b) {
            TableCell cell{a, b, "?", 0, 0, ""};
            if (kind == "srm") {
                if (b > a) continue;  // p <= m
                bv_interval iv{};
                char* prov = nullptr;
                int rc = exact ? bv_srm_solve(eng.e, a, b, &iv, &prov, nullptr)
                               : bv_srm_bounds(eng.e, a, b, &iv, &prov);
                if (rc != BV_OK) continue;
                cell.lo = iv.lo;
                cell.hi = iv.hi;
                cell.value = interval_str(iv);
                cell.prov = take_string(prov);
            } else {
                bv_interval iv{};
                char* prov = nullptr;
                if (bv_mk_bounds(eng.e, (int)a, b, &iv, &prov, nullptr, nullptr) != BV_OK) continue;
                cell.prov = take_string(prov);
                if (exact && !iv.exact) {
                    int64_t value = 0;
                    int is_exact = 0;
                    int rc = bv_mk_solve(eng.e, (int)a, b, &value, &is_exact, nullptr, nullptr,
                                         nullptr);
                    if (rc == BV_OK) {
                        iv.lo = iv.hi = value;
                        iv.exact = 1;
                        cell.prov = "solver";
                    } else if (rc == BV_EBUDGET) {
                        cell.lo = value > iv.lo ? value : iv.lo;
                        cell.hi = iv.hi;
                        cell.value = "?";
                        cells.push_back(cell);
                        continue;
                    }
                }
                cell.lo = iv.lo;
                cell.hi = iv.hi;
                cell.value = interval_str(iv);
            }
            cells.push_back(cell);
        }
    }
    std::string format = f.format == "text" ? "csv" : f.format;
    if (kind == "srm")
        emit_table(format, "m", "p", cells);
    else
        emit_table(format, "k", "b", cells);
    return 0;
}

int run_check(const CommonFlags& f, bool bounds_only, int qmax, int64_t mmax, int64_t pmax,
              bool mk_only, bool srm_only, bool quiet) {
    EngineGuard eng(f);
    char* report = nullptr;
    int matches = 0, refines = 0, mismatches = 0;
    int rc = bv_check_tables(eng.e, bounds_only ? 1 : 0, qmax, mmax, pmax, srm_only ? 0 : 1,
                             mk_only ? 0 : 1, &report, &matches, &refines, &mismatches);
    if (rc != BV_OK) {
        std::cerr << "error: reference check failed to run\n";
        return 1;
    }
    std::string lines = take_string(report);
    if (!quiet) std::cout << lines;
    std::cout << "summary: matches=" << matches << " refines=" << refines
              << " mismatches=" << mismatches << "\n";
    return mismatches == 0 ? 0 : 2;
}

int run_periodicity(const CommonFlags& f, int k, int64_t bmax) {
    EngineGuard eng(f);
    char* report = nullptr;
    int violations = 0, skipped = 0;
    int rc = bv_scan_periodicity(eng.e, k, bmax, &report, &violations, &skipped);
    if (rc != BV_OK) {
        std::cerr << "error: invalid arguments\n";
        return 1;
    }
    std::cout << take_string(report);
    std::cout << "violations=" << violations << " skipped=" << skipped << "\n";
    return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations of the real Buchstaber invariant s_R(m,p) and the "
                 "hyperplane-programme optimum m_k(b)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bv_version()));

    CommonFlags f;

    auto* srm = app.add_subcommand("srm", "compute s_R(m,p)");
    int64_t m = 0, p = 0;
    srm->add_option("m", m, "number of columns")->required();
    srm->add_option("p", p, "span parameter")->required();
    bool srm_bounds_only = false;
    srm->add_flag("--bounds-only", srm_bounds_only, "skip the exact solver");
    add_common(srm, f);

    auto* mkb = app.add_subcommand("mkb", "bounds or exact value of m_k(b)");
    int k = 0;
    int64_t b = 0;
    mkb->add_option("k", k, "dimension")->required();
    mkb->add_option("b", b, "right-hand side")->required();
    bool mkb_exact = false;
    mkb->add_flag("--exact", mkb_exact, "run the exact solver if bounds do not settle it");
    add_common(mkb, f);

    auto* verify = app.add_subcommand("verify", "check a matrix file against its declared p");
    std::string path;
    verify->add_option("file", path, "matrix file (k m p header)")->required();
    add_common(verify, f);

    auto* table = app.add_subcommand("table", "emit a table of values");
    std::string kind, r1, r2;
    table->add_option("kind", kind, "srm or mkb")->required()->check(CLI::IsMember({"srm", "mkb"}));
    bool table_exact = false;
    table->add_option("--m,--k", r1, "row range N..M")->required();
    table->add_option("--p,--b", r2, "column range N..M")->required();
    table->add_flag("--exact", table_exact, "force exact solves");
    add_common(table, f);

    auto* check = app.add_subcommand("check-tables",
                                     "recompute the bundled reference tables and diff");
    bool bounds_only = false, mk_only = false, srm_only = false, quiet = false;
    int qmax = 1;
    int64_t mmax = 40, pmax = 18;
    check->add_flag("--bounds-only", bounds_only, "never run the exact solver");
    check->add_flag("--mk-only", mk_only, "only the m_k(b) table");
    check->add_flag("--srm-only", srm_only, "only the s_R(m,p) table");
    check->add_flag("--quiet", quiet, "summary only");
    check->add_option("--qmax", qmax, "evaluate m_k cells at Q = 0..qmax");
    check->add_option("--mmax", mmax, "restrict the s_R window");
    check->add_option("--pmax", pmax, "restrict the s_R window");
    add_common(check, f);

    auto* peri = app.add_subcommand("periodicity", "scan the period-shift identity");
    int pk = 0;
    int64_t pbmax = 0;
    peri->add_option("k", pk, "dimension")->required();
    peri->add_option("bmax", pbmax, "largest b to test")->required();
    add_common(peri, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (srm->parsed()) return run_srm(f, m, p, srm_bounds_only);
    if (mkb->parsed()) return run_mkb(f, k, b, mkb_exact);
    if (verify->parsed()) return run_verify(path);
    if (table->parsed()) return run_table(f, kind, r1, r2, table_exact);
    if (check->parsed()) return run_check(f, bounds_only, qmax, mmax, pmax, mk_only, srm_only, quiet);
    if (peri->parsed()) return run_periodicity(f, pk, pbmax);
    return 1;
}
