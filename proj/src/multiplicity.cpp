#include "multiplicity.hpp"

#include <limits>
#include <sstream>

namespace buch {

MultiplicityVector::MultiplicityVector(int k, std::vector<int64_t> c)
    : dim(k), counts(std::move(c)) {
    check_dim(k);
    if ((int64_t)counts.size() != full_count(k))
        throw std::invalid_argument("multiplicity vector has wrong length");
    int64_t s = 0;
    for (int64_t x : counts) {
        if (x < 0) throw std::invalid_argument("negative multiplicity");
        s += x;
        if (s > std::numeric_limits<int32_t>::max())
            throw std::invalid_argument("multiplicity sum exceeds 2^31-1");
    }
}

int64_t MultiplicityVector::sum() const {
    int64_t s = 0;
    for (int64_t x : counts) s += x;
    return s;
}

MultiplicityVector zero_multiplicities(int k) {
    check_dim(k);
    return MultiplicityVector(k, std::vector<int64_t>(full_count(k), 0));
}

QuotRem split_b(int k, int64_t b) {
    if (k < kMinDim) throw std::invalid_argument("k must be at least 2");
    if (b < 0) throw std::invalid_argument("b must be non-negative");
    int64_t per = period(k);
    return QuotRem{b / per, b % per};
}

std::vector<int64_t> slack_profile(const MultiplicityVector& mv, int64_t b) {
    // hyperplane sums via the Walsh-Hadamard transform:
    // sum_{(u,v)=0} a_v = (total + sum_v a_v (-1)^{(u,v)}) / 2
    int k = mv.dim;
    size_t n = size_t(1) << k;
    std::vector<int64_t> w(n, 0);
    for (size_t v = 1; v < n; ++v) w[v] = mv.counts[v - 1];
    for (size_t len = 1; len < n; len <<= 1) {
        for (size_t i = 0; i < n; i += len << 1) {
            for (size_t j = i; j < i + len; ++j) {
                int64_t x = w[j], y = w[j + len];
                w[j] = x + y;
                w[j + len] = x - y;
            }
        }
    }
    int64_t total = w[0];
    std::vector<int64_t> slacks(n - 1);
    for (size_t u = 1; u < n; ++u) slacks[u - 1] = b - (total + w[u]) / 2;
    return slacks;
}

bool feasible(const MultiplicityVector& mv, int64_t b) {
    if (b < 0) throw std::invalid_argument("b must be non-negative");
    for (int64_t s : slack_profile(mv, b))
        if (s < 0) return false;
    return true;
}

Gf2Mat::Gf2Mat(int k, std::vector<Gf2Vec> cols) : dim(k), columns(std::move(cols)) {
    check_dim(k);
    for (const Gf2Vec& c : columns)
        if (c.dim != k) throw std::invalid_argument("column dimension mismatch");
}

static void check_p(const Gf2Mat& a, int p) {
    if (p < 1 || p > a.m()) throw std::invalid_argument("p out of range 1..m");
}

bool realizes_naive(const Gf2Mat& a, int p) {
    check_p(a, p);
    int m = a.m();
    // iterate p-subsets as sorted index vectors
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    std::vector<Gf2Vec> sub(p, Gf2Vec(a.dim, 0));
    while (true) {
        for (int i = 0; i < p; ++i) sub[i] = a.columns[idx[i]];
        if (rank(sub) != a.dim) return false;
        int i = p - 1;
        while (i >= 0 && idx[i] == m - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

std::optional<HyperplaneWitness> realizes_witness(const Gf2Mat& a, int p) {
    check_p(a, p);
    uint32_t n = (uint32_t)full_count(a.dim);
    for (uint32_t u = 1; u <= n; ++u) {
        int64_t cnt = 0;
        for (const Gf2Vec& c : a.columns)
            if (dot_bits(u, c.bits) == 0) ++cnt;
        if (cnt > p - 1) return HyperplaneWitness{u, cnt};
    }
    return std::nullopt;
}

bool realizes_fast(const Gf2Mat& a, int p) { return !realizes_witness(a, p).has_value(); }

std::pair<MultiplicityVector, int64_t> matrix_to_multiplicities(const Gf2Mat& a) {
    std::vector<int64_t> counts(full_count(a.dim), 0);
    int64_t zero_count = 0;
    for (const Gf2Vec& c : a.columns) {
        if (c.bits == 0)
            ++zero_count;
        else
            ++counts[c.bits - 1];
    }
    return {MultiplicityVector(a.dim, std::move(counts)), zero_count};
}

Gf2Mat multiplicities_to_matrix(const MultiplicityVector& mv) {
    std::vector<Gf2Vec> cols;
    cols.reserve((size_t)mv.sum());
    uint32_t n = (uint32_t)full_count(mv.dim);
    for (uint32_t v = 1; v <= n; ++v)
        for (int64_t c = 0; c < mv.counts[v - 1]; ++c) cols.push_back(Gf2Vec(mv.dim, v));
    return Gf2Mat(mv.dim, std::move(cols));
}

MatrixFile parse_matrix_text(std::istream& in) {
    int k, m, p;
    if (!(in >> k >> m >> p)) throw MatrixParseError("missing or malformed header 'k m p'");
    if (k < kMinDim || k > kMaxDim) throw MatrixParseError("k out of supported range 2..16");
    if (m < 0) throw MatrixParseError("negative column count");
    std::vector<uint32_t> colbits(m, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) {
            std::string tok;
            if (!(in >> tok)) throw MatrixParseError("matrix row is shorter than m entries");
            if (tok == "1")
                colbits[j] |= 1u << i;
            else if (tok != "0")
                throw MatrixParseError("matrix entries must be 0 or 1, got '" + tok + "'");
        }
    }
    std::string extra;
    if (in >> extra) throw MatrixParseError("trailing content after k rows");
    std::vector<Gf2Vec> cols;
    cols.reserve(m);
    for (int j = 0; j < m; ++j) cols.push_back(Gf2Vec(k, colbits[j]));
    if (p < 1 || p > m) throw MatrixParseError("p out of range 1..m");
    return MatrixFile{Gf2Mat(k, std::move(cols)), p};
}

MatrixFile parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_text(in);
}

std::string format_matrix_text(const Gf2Mat& a, int p) {
    std::ostringstream out;
    out << a.dim << ' ' << a.m() << ' ' << p << '\n';
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.m(); ++j) {
            if (j) out << ' ';
            out << ((a.columns[j].bits >> i) & 1);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace buch
