#pragma once

#include <cstdint>

#include "bounds.hpp"
#include "rational.hpp"

namespace buch {

struct SolveOptions {
    int64_t node_budget = 100'000'000;
    bool use_parity_pruning = true;
    bool use_symmetry = true;
    bool oracle_mode = false;  // forces parity/symmetry off and no warm start
    bool deterministic = true;

    SolveOptions normalized() const {
        SolveOptions o = *this;
        if (o.oracle_mode) {
            o.use_parity_pruning = false;
            o.use_symmetry = false;
        }
        return o;
    }
};

struct SolveResult {
    int64_t value = 0;
    bool exact = false;  // false: node budget exhausted, value is a lower bound
    int64_t nodes = 0;
    MultiplicityVector certificate;
};

// Exact maximum of sum(a_v) over lattice points of the hyperplane system,
// by depth-first branch and bound in canonical variable order.
SolveResult solve_mk(int k, int64_t b, const SolveOptions& opts, BoundsEngine& eng);

// s_R(m,p) through the m_k bracket, solving each m_k(p-1) exactly.
SrmResult solve_srm(int64_t m, int64_t p, const SolveOptions& opts, BoundsEngine& eng);

// Exact LP optimum (2^k-1) b / (2^{k-1}-1).
Rational lp_optimum(int k, int64_t b);

// Coordinates of the vertex H(m) cap (all H^{u'}, u' != u) of the polytope
// section; contract identities (coordinate sum m, hyperplane sums b) are
// verified before returning.
std::vector<Rational> vertex_point(int k, int64_t b, int64_t m, const Gf2Vec& u);

struct PeriodicityEntry {
    int64_t b = 0;
    int64_t value = 0;        // m_k(b)
    int64_t value_shift = 0;  // m_k(b + 2^{k-1}-1)
    bool both_exact = false;
    bool holds = false;    // value_shift == value + 2^k-1
    bool covered = false;  // periodicity hypothesis applies at b
};
struct PeriodicityReport {
    int k = 0;
    std::vector<PeriodicityEntry> entries;
    int violations = 0;
    int skipped = 0;
};
PeriodicityReport periodicity_scan(int k, int64_t b_max, const SolveOptions& opts,
                                 BoundsEngine& eng);

}  // namespace buch
