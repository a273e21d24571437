#include <random>

#include "doctest.h"
#include "gf2.hpp"

using namespace buch;

namespace {

// independent rank oracle: dense row reduction on a bool matrix
int rank_row_reduce(std::vector<std::vector<int>> rows, int k) {
    int r = 0;
    for (int col = 0; col < k && r < (int)rows.size(); ++col) {
        int piv = -1;
        for (int i = r; i < (int)rows.size(); ++i)
            if (rows[i][col]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < (int)rows.size(); ++i)
            if (i != r && rows[i][col])
                for (int c = 0; c < k; ++c) rows[i][c] ^= rows[r][c];
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("dot on basis and sums") {
    Gf2Vec e1 = basis_vector(3, 1), e2 = basis_vector(3, 2), e3 = basis_vector(3, 3);
    CHECK(dot(e1, e1) == 1);
    CHECK(dot(e1, e2) == 0);
    CHECK(dot(add(e1, e3), add(add(e1, e2), e3)) == 0);
    CHECK_THROWS_AS(dot(e1, basis_vector(4, 1)), std::invalid_argument);
}

TEST_CASE("dot is symmetric and bilinear (exhaustive k <= 4)") {
    for (int k = 2; k <= 4; ++k) {
        uint32_t n = (1u << k) - 1;
        for (uint32_t u = 0; u <= n; ++u)
            for (uint32_t v = 0; v <= n; ++v) {
                CHECK(dot_bits(u, v) == dot_bits(v, u));
                for (uint32_t w = 0; w <= n; ++w)
                    CHECK(dot_bits(u ^ w, v) == (dot_bits(u, v) ^ dot_bits(w, v)));
            }
    }
}

TEST_CASE("hyperplane counting facts (exhaustive k <= 6)") {
    for (int k = 2; k <= 6; ++k) {
        uint32_t n = (1u << k) - 1;
        for (uint32_t v = 1; v <= n; ++v) {
            int cnt = 0;
            for (uint32_t u = 1; u <= n; ++u)
                if (dot_bits(u, v) == 0) ++cnt;
            CHECK(cnt == (1 << (k - 1)) - 1);
        }
        for (uint32_t v = 1; v <= n; ++v)
            for (uint32_t w = v + 1; w <= n; ++w) {
                int cnt = 0;
                for (uint32_t u = 1; u <= n; ++u)
                    if (dot_bits(u, v) == 0 && dot_bits(u, w) == 0) ++cnt;
                CHECK(cnt == (1 << (k - 2)) - 1);
            }
    }
}

TEST_CASE("rank basics") {
    std::vector<Gf2Vec> basis;
    for (int i = 1; i <= 3; ++i) basis.push_back(basis_vector(3, i));
    CHECK(rank(basis) == 3);
    CHECK(rank({basis_vector(3, 1), basis_vector(3, 2), Gf2Vec(3, 3)}) == 2);
    CHECK(rank({}) == 0);
    CHECK(rank({zero_vector(4)}) == 0);
}

TEST_CASE("rank agrees with row-reduction oracle on random input") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        int k = 2 + (int)(rng() % 5);  // 2..6
        int m = (int)(rng() % 13);     // 0..12
        std::vector<Gf2Vec> vecs;
        std::vector<std::vector<int>> rows;
        for (int j = 0; j < m; ++j) {
            uint32_t bits = rng() & ((1u << k) - 1);
            vecs.push_back(Gf2Vec(k, bits));
            std::vector<int> row(k);
            for (int c = 0; c < k; ++c) row[c] = (bits >> c) & 1;
            rows.push_back(std::move(row));
        }
        CHECK(rank(vecs) == rank_row_reduce(rows, k));
    }
}

TEST_CASE("spans_full") {
    std::vector<Gf2Vec> basis;
    for (int i = 1; i <= 5; ++i) basis.push_back(basis_vector(5, i));
    CHECK(spans_full(basis, 5));
    CHECK_FALSE(spans_full({basis_vector(3, 1), basis_vector(3, 2)}, 3));
    // any 3 of the 4 columns of (e1,e2,e3,e1+e2+e3) span
    std::vector<Gf2Vec> cols = {basis_vector(3, 1), basis_vector(3, 2), basis_vector(3, 3),
                                Gf2Vec(3, 7)};
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<Gf2Vec> three;
        for (int i = 0; i < 4; ++i)
            if (i != skip) three.push_back(cols[i]);
        CHECK(spans_full(three, 3));
    }
}

TEST_CASE("nonzero_vectors ordering") {
    auto v2 = nonzero_vectors(2);
    REQUIRE(v2.size() == 3);
    CHECK(v2[0].bits == 1);
    CHECK(v2[1].bits == 2);
    CHECK(v2[2].bits == 3);
    auto v3 = nonzero_vectors(3);
    CHECK(v3.size() == 7);
    CHECK(v3.front() == basis_vector(3, 1));
    CHECK(v3.back().bits == 7);
    CHECK(nonzero_vectors(5).size() == 31);
    CHECK_THROWS_AS(nonzero_vectors(1), std::invalid_argument);
    CHECK_THROWS_AS(nonzero_vectors(17), std::invalid_argument);
}

TEST_CASE("subspace_members") {
    auto one = subspace_members({basis_vector(4, 1)});
    REQUIRE(one.size() == 2);
    CHECK(one[0].bits == 0);
    CHECK(one[1].bits == 1);
    CHECK(subspace_members({basis_vector(4, 1), basis_vector(4, 2)}).size() == 4);
    CHECK(subspace_members({}).size() == 1);
    CHECK_THROWS_AS(subspace_members({basis_vector(3, 1), basis_vector(3, 1)}),
                    std::invalid_argument);
}
