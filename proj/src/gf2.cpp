#include "gf2.hpp"

namespace buch {

Gf2Vec::Gf2Vec(int k, uint32_t b) : dim(k), bits(b) {
    check_dim(k);
    if (b >= (1u << k)) throw std::invalid_argument("vector bits exceed 2^k");
}

Gf2Vec basis_vector(int k, int i) {
    if (i < 1 || i > k) throw std::invalid_argument("basis index out of range");
    return Gf2Vec(k, 1u << (i - 1));
}

Gf2Vec zero_vector(int k) { return Gf2Vec(k, 0); }

static void check_same_dim(const Gf2Vec& u, const Gf2Vec& v) {
    if (u.dim != v.dim) throw std::invalid_argument("dimension mismatch");
}

int dot(const Gf2Vec& u, const Gf2Vec& v) {
    check_same_dim(u, v);
    return dot_bits(u.bits, v.bits);
}

Gf2Vec add(const Gf2Vec& u, const Gf2Vec& v) {
    check_same_dim(u, v);
    return Gf2Vec(u.dim, u.bits ^ v.bits);
}

int rank(const std::vector<Gf2Vec>& vectors) {
    if (vectors.empty()) return 0;
    int k = vectors[0].dim;
    uint32_t pivots[kMaxDim] = {0};  // pivots[i] has leading bit i
    int r = 0;
    for (const Gf2Vec& v : vectors) {
        if (v.dim != k) throw std::invalid_argument("dimension mismatch");
        uint32_t x = v.bits;
        while (x) {
            int lead = 31 - __builtin_clz(x);
            if (pivots[lead]) {
                x ^= pivots[lead];
            } else {
                pivots[lead] = x;
                ++r;
                break;
            }
        }
    }
    return r;
}

bool spans_full(const std::vector<Gf2Vec>& vectors, int k) {
    check_dim(k);
    for (const Gf2Vec& v : vectors)
        if (v.dim != k) throw std::invalid_argument("dimension mismatch");
    return rank(vectors) == k;
}

std::vector<Gf2Vec> nonzero_vectors(int k) {
    check_dim(k);
    std::vector<Gf2Vec> out;
    out.reserve((1u << k) - 1);
    for (uint32_t v = 1; v < (1u << k); ++v) out.push_back(Gf2Vec(k, v));
    return out;
}

std::vector<Gf2Vec> subspace_members(const std::vector<Gf2Vec>& basis) {
    if (!basis.empty()) {
        if ((int)basis.size() > basis[0].dim || rank(basis) != (int)basis.size())
            throw std::invalid_argument("basis is linearly dependent");
    }
    int k = basis.empty() ? 0 : basis[0].dim;
    size_t d = basis.size();
    std::vector<Gf2Vec> out;
    out.reserve(size_t(1) << d);
    for (uint32_t coeff = 0; coeff < (1u << d); ++coeff) {
        uint32_t x = 0;
        for (size_t i = 0; i < d; ++i)
            if (coeff & (1u << i)) x ^= basis[i].bits;
        out.push_back(k ? Gf2Vec(k, x) : Gf2Vec());
    }
    return out;
}

}  // namespace buch
