#pragma once

// Vectors and square matrices over the prime field F_p.

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace syl {

using Vec = std::vector<uint32_t>;

// Row-major d x d matrix over F_p.
struct FpMat {
    int d = 0;
    std::vector<uint32_t> a;
    FpMat() = default;
    explicit FpMat(int dim) : d(dim), a(size_t(dim) * dim, 0) {}
    uint32_t& operator()(int i, int j) { return a[size_t(i) * d + j]; }
    uint32_t operator()(int i, int j) const { return a[size_t(i) * d + j]; }
};

inline Vec fp_apply(const FpMat& m, const Vec& v, uint32_t p) {
    Vec out(m.d, 0);
    for (int i = 0; i < m.d; ++i) {
        uint64_t s = 0;
        for (int j = 0; j < m.d; ++j) s += uint64_t(m(i, j)) * v[j];
        out[i] = uint32_t(s % p);
    }
    return out;
}

// m^T v
inline Vec fp_apply_transpose(const FpMat& m, const Vec& v, uint32_t p) {
    Vec out(m.d, 0);
    std::vector<uint64_t> acc(m.d, 0);
    for (int i = 0; i < m.d; ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < m.d; ++j) acc[j] += uint64_t(m(i, j)) * v[i];
    }
    for (int j = 0; j < m.d; ++j) out[j] = uint32_t(acc[j] % p);
    return out;
}

inline uint32_t fp_dot(const Vec& a, const Vec& b, uint32_t p) {
    require(a.size() == b.size(), Errc::dimension_mismatch, "pairing of vectors of different length");
    uint64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += uint64_t(a[i]) * b[i];
    return uint32_t(s % p);
}

inline Vec fp_add(const Vec& a, const Vec& b, uint32_t p) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
    return c;
}

inline Vec fp_neg(const Vec& a, uint32_t p) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] ? p - a[i] : 0;
    return c;
}

inline bool fp_is_zero(const Vec& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

// First coordinate most significant, so index order is lexicographic order.
inline Vec fp_decode(uint64_t idx, int d, uint32_t p) {
    Vec v(d, 0);
    for (int i = d - 1; i >= 0; --i) {
        v[i] = uint32_t(idx % p);
        idx /= p;
    }
    return v;
}

inline uint64_t fp_encode(const Vec& v, uint32_t p) {
    uint64_t idx = 0;
    for (auto x : v) idx = idx * p + x;
    return idx;
}

// Rank of a list of vectors over F_p.
int fp_rank(std::vector<Vec> rows, uint32_t p);

// Coefficients c with sum_i c_i basis[i] = v, or empty if v is outside the span.
// basis must be linearly independent.
std::vector<uint32_t> fp_solve_in_span(const std::vector<Vec>& basis, const Vec& v, uint32_t p);

uint32_t fp_inv(uint32_t a, uint32_t p);

}  // namespace syl
