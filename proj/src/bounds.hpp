#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "multiplicity.hpp"

namespace buch {

// Certified bracket for m_k(b). lo is witnessed by the certificate (when one
// is materialized); hi carries the provenance of the binding upper argument.
struct BoundInterval {
    int k = 0;
    int64_t b = 0;
    int64_t lo = 0;
    int64_t hi = 0;
    bool exact = false;
    std::vector<std::string> lo_provenance;
    std::vector<std::string> hi_provenance;
    std::optional<MultiplicityVector> certificate;
};

// Result for s_R(m,p): a k-interval, exact when lo == hi, with a realizing
// matrix certificate when one is available.
struct SrmResult {
    int64_t m = 0;
    int64_t p = 0;
    int lo = 0;
    int hi = 0;
    bool exact = false;
    std::string provenance;
    std::optional<Gf2Mat> certificate;
};

// Exact closed-form value of m_k(b) when a proven formula applies. All
// applicable clauses are evaluated and asserted equal.
std::optional<int64_t> mk_closed_form(int k, int64_t b, std::string* clause = nullptr);

// Exact s_R(m,p) for the special parameter families (p in {0,1,m,m-1,m-2,m-3}
// and the rank-1 range m >= 3p-2).
std::optional<int64_t> srm_special(int64_t m, int64_t p, std::string* why = nullptr);

// floor((2^k-1) b / (2^{k-1}-1)) = 2b + floor(b / (2^{k-1}-1)).
int64_t lp_upper_floor(int k, int64_t b);

// Largest s with m+1 <= 2^{m-s}, i.e. s_R(m, m-2); defined for m >= 3.
int codim2_value(int64_t m);

// Periodicity hypothesis: m_k(b + 2^{k-1}-1) = m_k(b) + 2^k - 1 holds when
// b = (2^{k-1}-1)Q + R with Q >= R (R < 2^{k-2}) or Q >= R - 2^{k-2} (else).
bool period_shift_applies(int k, int64_t Q, int64_t R);

struct LowerBound {
    int64_t value = 0;
    std::string source;
    std::optional<MultiplicityVector> certificate;
};
struct UpperBound {
    int64_t value = 0;
    std::vector<std::string> provenance;
};

// Memoized engine combining closed forms, constructive lower bounds and the
// upper-bound recursions. Values are supported for any k >= 2 (capped at 30);
// certificates are materialized for k <= 16.
class BoundsEngine {
  public:
    BoundInterval bounds(int k, int64_t b);
    SrmResult srm_bounds(int64_t m, int64_t p);

    LowerBound lower(int k, int64_t b);
    UpperBound upper(int k, int64_t b);

  private:
    enum class Src : uint8_t {
        trivial,
        basis_sum,
        subspace_pair,
        deleted_halfspace,
        skeleton,
        lift,
        combine,
        uniform_shift,
    };
    struct LowEntry {
        int64_t value = 0;
        Src src = Src::trivial;
        int64_t aux = 0;
    };

    LowEntry lower_entry(int k, int64_t b);
    void ensure_lower(int k, int64_t bmax);
    MultiplicityVector materialize(int k, int64_t b);
    int64_t upper_value(int k, int64_t b, std::vector<std::string>* tags);

    std::map<int, std::vector<LowEntry>> low_;
    std::map<std::pair<int, int64_t>, LowEntry> low_large_;
    std::map<std::pair<int, int64_t>, UpperBound> up_;
    std::recursive_mutex mu_;
};

// Maximum k accepted by the value-level engine (solver and certificates stop
// at kMaxDim = 16; the s_R scan needs values slightly beyond).
inline constexpr int kMaxValueDim = 30;

// Window index l with 2^{k-1}-2^{k-1-l} <= R < 2^{k-1}-2^{k-1-(l+1)}.
int window_of(int k, int64_t R);

}  // namespace buch
