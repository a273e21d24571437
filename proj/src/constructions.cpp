#include "constructions.hpp"

#include <algorithm>
#include <bit>

namespace buch {

namespace {

int64_t pow2(int e) { return int64_t(1) << e; }

void self_check(const MultiplicityVector& mv, int64_t b, int64_t claimed_sum,
                const char* who) {
    if (mv.sum() != claimed_sum || !feasible(mv, b))
        throw std::logic_error(std::string(who) + ": self-verification failed");
}

}  // namespace

MultiplicityVector uniform_point(int k, int64_t q) {
    check_dim(k);
    if (q < 0) throw std::invalid_argument("Q must be non-negative");
    MultiplicityVector mv(k, std::vector<int64_t>(full_count(k), q));
    self_check(mv, period(k) * q, full_count(k) * q, "uniform_point");
    return mv;
}

MultiplicityVector excess_point(int k, int64_t b) {
    auto [Q, R] = split_b(k, b);
    std::vector<int64_t> counts(full_count(k), Q);
    counts[0] += R;  // v = e_1
    MultiplicityVector mv(k, std::move(counts));
    self_check(mv, b, full_count(k) * Q + R, "excess_point");
    return mv;
}

MultiplicityVector subspace_pair_point(int k, int64_t Q, int64_t R, const Gf2Vec& v_dual,
                                       const std::vector<Gf2Vec>& u_basis) {
    check_dim(k);
    if (Q < 0 || R < 0 || R > period(k) - 1)
        throw std::invalid_argument("require Q >= 0 and 0 <= R <= 2^{k-1}-2");
    int l = (int)u_basis.size();
    if (l > k - 2) throw std::invalid_argument("subspace dimension must be at most k-2");
    int64_t base = pow2(k - 1) - pow2(k - 1 - l);
    int64_t next = pow2(k - 1) - pow2(k - 1 - (l + 1));
    if (R < base || R >= next)
        throw std::invalid_argument("R outside the window for this subspace dimension");
    if (v_dual.dim != k || v_dual.is_zero())
        throw std::invalid_argument("hyperplane dual vector must be nonzero of dim k");
    if (l > 0 && rank(u_basis) != l) throw std::invalid_argument("U basis is dependent");
    for (const Gf2Vec& u : u_basis)
        if (u.dim != k || dot(v_dual, u) != 0)
            throw std::invalid_argument("U must be contained in the hyperplane V");
    int64_t r = R - base;

    std::vector<int64_t> counts(full_count(k), 0);
    for (uint32_t v = 1; v <= (uint32_t)full_count(k); ++v) {
        if (v == v_dual.bits) {
            counts[v - 1] = Q + r;
            continue;
        }
        bool u_inside = true;  // U <= v^perp
        for (const Gf2Vec& u : u_basis)
            if (dot_bits(v, u.bits) != 0) {
                u_inside = false;
                break;
            }
        counts[v - 1] = u_inside ? Q : Q + 1;
    }
    MultiplicityVector mv(k, std::move(counts));
    self_check(mv, period(k) * Q + R, full_count(k) * Q + R + base, "subspace_pair_point");
    return mv;
}

MultiplicityVector subspace_pair_point(int k, int64_t Q, int64_t R, int l) {
    std::vector<Gf2Vec> u_basis;
    for (int i = 1; i <= l; ++i) u_basis.push_back(basis_vector(k, i));
    return subspace_pair_point(k, Q, R, basis_vector(k, k), u_basis);
}

int64_t deleted_halfspace_sum(int k, int q) {
    if (k < 3) throw std::invalid_argument("require k >= 3");
    switch (q) {
        case 1: return pow2(k - 1) - k;
        case 2: return pow2(k - 1) - k - 1 - (k % 2 == 0 ? 1 : 0);
        case 4:
            if (k % 2) throw std::invalid_argument("q=4 requires even k");
            return pow2(k - 1) - 2 * k;
    }
    throw std::invalid_argument("q must be 1, 2 or 4");
}

MultiplicityVector deleted_halfspace_point(int k, int q) {
    check_dim(k);
    int64_t expect = deleted_halfspace_sum(k, q);  // validates (k, q)
    uint32_t u0 = (uint32_t)full_count(k);         // the all-ones vector
    std::vector<uint32_t> deleted;
    for (int i = 1; i <= k; ++i) deleted.push_back(1u << (i - 1));
    if (q >= 2) {
        if (k % 2) {
            deleted.push_back(u0);
        } else {
            deleted.push_back(u0 ^ 1u);
            deleted.push_back(u0 ^ 2u);
        }
    }
    if (q == 4)
        for (int i = 3; i <= k; ++i) deleted.push_back(u0 ^ (1u << (i - 1)));
    std::vector<int64_t> counts(full_count(k), 0);
    for (uint32_t v = 1; v <= u0; ++v) {
        if (dot_bits(u0, v) == 0) continue;
        if (std::find(deleted.begin(), deleted.end(), v) != deleted.end()) continue;
        counts[v - 1] = 1;
    }
    MultiplicityVector mv(k, std::move(counts));
    self_check(mv, deleted_halfspace_b(k, q), expect, "deleted_halfspace_point");
    return mv;
}

MultiplicityVector lift_dimension(const MultiplicityVector& mv, int64_t Q, int64_t r_src) {
    int k = mv.dim;
    if (k + 1 > kMaxDim) throw std::invalid_argument("lift exceeds the dimension cap");
    if (Q < 0) throw std::invalid_argument("Q must be non-negative");
    if (r_src < 0 || r_src > period(k))
        throw std::invalid_argument("source remainder outside 0..2^{k-1}-1");
    if (!feasible(mv, r_src))
        throw std::invalid_argument("lift input is not feasible for the supplied remainder");
    std::vector<int64_t> counts(full_count(k + 1), Q + 1);
    for (int64_t v = 1; v <= full_count(k); ++v) counts[v - 1] = Q + mv.counts[v - 1];
    MultiplicityVector out(k + 1, std::move(counts));
    int64_t b_out = full_count(k) * Q + pow2(k - 1) + r_src;
    self_check(out, b_out, full_count(k + 1) * Q + pow2(k) + mv.sum(), "lift_dimension");
    return out;
}

MultiplicityVector combine(const MultiplicityVector& a, const MultiplicityVector& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
    std::vector<int64_t> counts(a.counts);
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += b.counts[i];
    return MultiplicityVector(a.dim, std::move(counts));
}

Gf2Mat basis_plus_sum_matrix(int m) {
    if (m < 3) throw std::invalid_argument("require m >= 3 (dimension m-1 >= 2)");
    int k = m - 1;
    check_dim(k);
    std::vector<Gf2Vec> cols;
    for (int i = 1; i <= k; ++i) cols.push_back(basis_vector(k, i));
    cols.push_back(Gf2Vec(k, (uint32_t)full_count(k)));
    Gf2Mat a(k, std::move(cols));
    if (!realizes_fast(a, m - 1))
        throw std::logic_error("basis_plus_sum_matrix: self-verification failed");
    return a;
}

Gf2Mat rank2_block_matrix(int p) {
    if (p < 1) throw std::invalid_argument("require p >= 1");
    std::vector<Gf2Vec> cols;
    for (int i = 1; i < p; ++i) {
        cols.push_back(Gf2Vec(2, 1));
        cols.push_back(Gf2Vec(2, 2));
        cols.push_back(Gf2Vec(2, 3));
    }
    Gf2Mat a(2, std::move(cols));
    if (p >= 2 && !realizes_fast(a, p))
        throw std::logic_error("rank2_block_matrix: self-verification failed");
    return a;
}

Gf2Mat rank4_extremal_matrix() {
    std::vector<Gf2Vec> cols;
    for (int i = 1; i <= 4; ++i) cols.push_back(basis_vector(4, i));
    for (uint32_t bits : {14u, 13u, 11u, 7u}) cols.push_back(Gf2Vec(4, bits));
    Gf2Mat a(4, std::move(cols));
    if (!realizes_fast(a, 5))
        throw std::logic_error("rank4_extremal_matrix: self-verification failed");
    return a;
}

int codim2_rank(int m) {
    if (m < 3) throw std::invalid_argument("require m >= 3");
    return m - (int)std::bit_width((uint64_t)m);
}

namespace {

// Distinct subsets of {1..n} of size >= 2: the n cyclic neighbour pairs
// first, then the rest ordered by (size, value). The pair prefix keeps every
// element covered twice among the first n subsets.
std::vector<uint32_t> tail_subsets(int n, int want) {
    std::vector<uint32_t> subs;
    if (n >= 3) {
        for (int t = 1; t <= n; ++t) {
            int t2 = (t % n) + 1;
            subs.push_back((1u << (t - 1)) | (1u << (t2 - 1)));
        }
    }
    std::vector<uint32_t> rest;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) < 2) continue;
        if (std::find(subs.begin(), subs.end(), s) != subs.end()) continue;
        rest.push_back(s);
    }
    std::stable_sort(rest.begin(), rest.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (uint32_t s : rest) subs.push_back(s);
    if ((int)subs.size() < want) throw std::invalid_argument("not enough tail subsets");
    subs.resize(want);
    return subs;
}

}  // namespace

Gf2Mat all_but_two_matrix(int m) {
    int k = codim2_rank(m);
    check_dim(k);
    int n = m - k;
    std::vector<uint32_t> subs = tail_subsets(n, k);
    std::vector<Gf2Vec> cols;
    for (int i = 1; i <= k; ++i) cols.push_back(basis_vector(k, i));
    for (int t = 1; t <= n; ++t) {
        uint32_t bits = 0;
        for (int i = 1; i <= k; ++i)
            if (subs[i - 1] & (1u << (t - 1))) bits |= 1u << (i - 1);
        cols.push_back(Gf2Vec(k, bits));
    }
    Gf2Mat a(k, std::move(cols));
    if (!realizes_fast(a, m - 2))
        throw std::logic_error("all_but_two_matrix: self-verification failed");
    return a;
}

Gf2Mat append_column_sum(const Gf2Mat& a) {
    uint32_t s = 0;
    for (const Gf2Vec& c : a.columns) s ^= c.bits;
    Gf2Mat out = a;
    out.columns.push_back(Gf2Vec(a.dim, s));
    return out;
}

std::optional<MultiplicityVector> skeleton_point(int k, int64_t b) {
    if (k < 3 || k > kMaxDim) return std::nullopt;
    int64_t j = b + 3 - k;
    if (j < 3 || j > k) return std::nullopt;
    if (k > pow2((int)j) - 1 - j) return std::nullopt;
    std::vector<uint32_t> subs = tail_subsets((int)j, k);
    std::vector<Gf2Vec> cols;
    for (int i = 1; i <= k; ++i) cols.push_back(basis_vector(k, i));
    uint32_t ext = (uint32_t)full_count(k);  // running sum of all columns
    for (int t = 1; t <= (int)j; ++t) {
        uint32_t bits = 0;
        for (int i = 1; i <= k; ++i)
            if (subs[i - 1] & (1u << (t - 1))) bits |= 1u << (i - 1);
        if (bits == 0) return std::nullopt;
        cols.push_back(Gf2Vec(k, bits));
        ext ^= bits;
    }
    if (ext == 0) return std::nullopt;
    cols.push_back(Gf2Vec(k, ext));
    Gf2Mat mat(k, std::move(cols));
    auto [mv, zeros] = matrix_to_multiplicities(mat);
    if (zeros != 0) return std::nullopt;
    if (mv.sum() != b + 4) return std::nullopt;
    if (!feasible(mv, b)) return std::nullopt;
    return mv;
}

MultiplicityVector project_drop_top(const MultiplicityVector& mv) {
    int k = mv.dim;
    if (k - 1 < kMinDim) throw std::invalid_argument("cannot project below dimension 2");
    uint32_t top = 1u << (k - 1);
    if (mv.at(top) < 1) throw std::invalid_argument("top coordinate vector has count 0");
    std::vector<int64_t> counts(full_count(k - 1), 0);
    for (uint32_t w = 1; w < top; ++w) counts[w - 1] = mv.at(w) + mv.at(w | top);
    return MultiplicityVector(k - 1, std::move(counts));
}

}  // namespace buch
