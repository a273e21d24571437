#pragma once

#include "engine.hpp"

namespace buch {

enum class CellKind { exact, value_set, at_most, at_least, unknown };

// Reference cell for m_k((2^{k-1}-1)Q + R): the admissible residues S so that
// the value is (2^k-1)Q + s for some s in S (|S| > 1 where the literature
// leaves alternatives open).
struct MkTableCell {
    int k = 0;
    int R = 0;
    std::vector<int64_t> values;
};

// Reference cell for s_R(m,p); kind encodes fully known values, one-sided
// bounds ("*<=n", "*>=n") and pure unknowns ("*").
struct SrmTableCell {
    int64_t m = 0;
    int64_t p = 0;
    CellKind kind = CellKind::exact;
    int value = 0;
};

const std::vector<MkTableCell>& mk_reference_cells();
const std::vector<SrmTableCell>& srm_reference_cells();

enum class CheckOutcome { match, refine, mismatch };

struct CheckLine {
    std::string label;
    CheckOutcome outcome = CheckOutcome::match;
    std::string detail;
};

struct CheckOptions {
    bool bounds_only = false;
    int qmax = 1;        // evaluate each mk cell at Q = 0..qmax
    int64_t pmax = 18;   // srm window
    int64_t mmax = 40;
    bool include_mk = true;
    bool include_srm = true;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    int matches = 0;
    int refines = 0;
    int mismatches = 0;
};

// Recompute every reference cell and classify the comparison. Exact solver
// runs are attempted only inside solver_tractable(); everything else is
// judged from certified bounds, so budget pressure can never flip a MATCH
// into a wrong answer.
CheckReport check_reference_tables(Engine& eng, const CheckOptions& opts);

// Instances small enough for the branch-and-bound to close at desk scale.
bool solver_tractable(int k, int64_t b);

std::string outcome_name(CheckOutcome o);

}  // namespace buch
