#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace buch {

// Vectors of (Z/2)^k packed into an unsigned word, coordinate i <-> bit i-1.
// Supported dimensions: 2 <= k <= 16, so every index set fits in 16 bits.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 16;

struct Gf2Vec {
    int dim = 0;
    uint32_t bits = 0;

    Gf2Vec() = default;
    Gf2Vec(int k, uint32_t b);

    bool is_zero() const { return bits == 0; }
    friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;
};

Gf2Vec basis_vector(int k, int i);  // e_i, 1-based
Gf2Vec zero_vector(int k);

inline void check_dim(int k) {
    if (k < kMinDim || k > kMaxDim)
        throw std::invalid_argument("dimension out of supported range 2..16");
}

// Parity of the coordinatewise AND: the standard bilinear form.
int dot(const Gf2Vec& u, const Gf2Vec& v);

inline int dot_bits(uint32_t u, uint32_t v) {
    return __builtin_parity(u & v);
}

Gf2Vec add(const Gf2Vec& u, const Gf2Vec& v);

// Dimension of the span, by Gaussian elimination over Z/2.
int rank(const std::vector<Gf2Vec>& vectors);

bool spans_full(const std::vector<Gf2Vec>& vectors, int k);

// The 2^k-1 nonzero vectors in increasing order of their encoding. This is
// the canonical index order used for multiplicity vectors and constraints.
std::vector<Gf2Vec> nonzero_vectors(int k);

// All 2^d members of the span of an independent set (zero included).
std::vector<Gf2Vec> subspace_members(const std::vector<Gf2Vec>& basis);

}  // namespace buch
