#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace buch {

// Column multiplicities {a_v : v nonzero}, indexed in canonical order
// (counts[v-1] is the multiplicity of the vector encoded as v).
struct MultiplicityVector {
    int dim = 0;
    std::vector<int64_t> counts;

    MultiplicityVector() = default;
    MultiplicityVector(int k, std::vector<int64_t> c);

    int64_t sum() const;
    int64_t at(uint32_t v) const { return counts[v - 1]; }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

MultiplicityVector zero_multiplicities(int k);

// b = (2^{k-1}-1) Q + R with 0 <= R <= 2^{k-1}-2.
struct QuotRem {
    int64_t Q = 0;
    int64_t R = 0;
};
QuotRem split_b(int k, int64_t b);
inline int64_t period(int k) { return (int64_t(1) << (k - 1)) - 1; }
inline int64_t full_count(int k) { return (int64_t(1) << k) - 1; }

// All 2^k-1 hyperplane sums are <= b.
bool feasible(const MultiplicityVector& mv, int64_t b);

// b minus each hyperplane sum, in canonical u order (negative if violated).
std::vector<int64_t> slack_profile(const MultiplicityVector& mv, int64_t b);

struct Gf2Mat {
    int dim = 0;
    std::vector<Gf2Vec> columns;

    Gf2Mat() = default;
    Gf2Mat(int k, std::vector<Gf2Vec> cols);

    int m() const { return (int)columns.size(); }
};

// Every p-element column subset has rank k; direct enumeration (oracle).
bool realizes_naive(const Gf2Mat& a, int p);

// Every hyperplane holds at most p-1 columns (zero columns included).
bool realizes_fast(const Gf2Mat& a, int p);

// Nonzero u whose hyperplane holds >= p columns, with the count; nullopt if
// the matrix realizes p.
struct HyperplaneWitness {
    uint32_t u = 0;
    int64_t count = 0;
};
std::optional<HyperplaneWitness> realizes_witness(const Gf2Mat& a, int p);

std::pair<MultiplicityVector, int64_t> matrix_to_multiplicities(const Gf2Mat& a);
Gf2Mat multiplicities_to_matrix(const MultiplicityVector& mv);

// Text format: first line "k m p", then k rows of m space-separated 0/1
// digits, row i giving coordinate i of each column.
struct MatrixFile {
    Gf2Mat mat;
    int p = 0;
};
struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
MatrixFile parse_matrix_text(std::istream& in);
MatrixFile parse_matrix_text(const std::string& text);
std::string format_matrix_text(const Gf2Mat& a, int p);

}  // namespace buch
