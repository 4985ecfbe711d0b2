#pragma once

// Dense matrices over Field or QuadExt, classical forms and membership tests.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ff.hpp"

namespace syl {

struct Mat {
    int rows = 0, cols = 0;
    std::vector<elem> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(size_t(r) * c, 0) {}
    elem& operator()(int i, int j) { return e[size_t(i) * cols + j]; }
    elem operator()(int i, int j) const { return e[size_t(i) * cols + j]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool square() const { return rows == cols; }
};

inline Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

inline Mat transpose(const Mat& a) {
    Mat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

template <class K>
Mat mul(const K& k, const Mat& a, const Mat& b) {
    require(a.cols == b.rows, Errc::dimension_mismatch, "matrix product shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            elem x = a(i, l);
            if (!x) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b(l, j)) c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
        }
    return c;
}

template <class K>
Mat add(const K& k, const Mat& a, const Mat& b) {
    require(a.rows == b.rows && a.cols == b.cols, Errc::dimension_mismatch, "matrix sum shape mismatch");
    Mat c(a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = k.add(a.e[i], b.e[i]);
    return c;
}

template <class K>
Mat sub(const K& k, const Mat& a, const Mat& b) {
    require(a.rows == b.rows && a.cols == b.cols, Errc::dimension_mismatch, "matrix difference shape mismatch");
    Mat c(a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = k.sub(a.e[i], b.e[i]);
    return c;
}

template <class K>
Mat entrywise_conj(const K& k, const Mat& a) {
    Mat c = a;
    for (auto& x : c.e) x = k.conj(x);
    return c;
}

bool is_unitriangular(const Mat& a);

// Back substitution; a must be unitriangular.
template <class K>
Mat unitriangular_inverse(const K& k, const Mat& a) {
    require(a.square(), Errc::dimension_mismatch, "inverse of non-square matrix");
    require(is_unitriangular(a), Errc::invalid_params, "matrix is not unitriangular");
    int n = a.rows;
    Mat x = identity(n);
    // Solve a * x = I column by column, bottom-up.
    for (int c = 0; c < n; ++c)
        for (int i = c - 1; i >= 0; --i) {
            elem s = 0;
            for (int l = i + 1; l <= c; ++l) s = k.add(s, k.mul(a(i, l), x(l, c)));
            x(i, c) = k.neg(s);
        }
    return x;
}

// Gauss-Jordan elimination; throws singular.
template <class K>
Mat inverse(const K& k, const Mat& a) {
    require(a.square(), Errc::dimension_mismatch, "inverse of non-square matrix");
    if (is_unitriangular(a)) return unitriangular_inverse(k, a);
    int n = a.rows;
    Mat m = a, x = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        require(piv >= 0, Errc::singular, "matrix is singular");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(x(piv, j), x(c, j));
            }
        elem s = k.inv(m(c, c));
        for (int j = 0; j < n; ++j) {
            m(c, j) = k.mul(m(c, j), s);
            x(c, j) = k.mul(x(c, j), s);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || !m(i, c)) continue;
            elem f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) = k.sub(m(i, j), k.mul(f, m(c, j)));
                x(i, j) = k.sub(x(i, j), k.mul(f, x(c, j)));
            }
        }
    }
    return x;
}

template <class K>
int rank(const K& k, Mat m) {
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
        int piv = -1;
        for (int i = rk; i < m.rows; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rk, j));
        elem s = k.inv(m(rk, c));
        for (int i = rk + 1; i < m.rows; ++i) {
            if (!m(i, c)) continue;
            elem f = k.mul(m(i, c), s);
            for (int j = c; j < m.cols; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(rk, j)));
        }
        ++rk;
    }
    return rk;
}

// ------------------------------------------------------------------ forms

enum class FormKind {
    symplectic_S,        // [[0, I], [-I, 0]]
    orth_plus_Aplus,     // [[0, I], [I, 0]], p odd
    orth_minus_Aminus,   // [[0, I], [I^eta, 0]], p odd
    orth_odd_L,          // [-1] + [[0, I], [I, 0]], p odd
    orth_char2_Qplus,    // Q(y,z) = y.z, p = 2
    orth_char2_Qminus,   // Q(y,z) = y.z + y_m^2 + eta z_m^2, p = 2
    hermitian_beta_even, // [[0, I], [I, 0]] over F_{p^{2r}}
    hermitian_beta_odd,  // [-1] + [[0, I], [I, 0]] over F_{p^{2r}}
};

const char* form_kind_name(FormKind k);

struct FormSpec {
    FormKind kind;
    int dim;  // ambient matrix size
};

FormSpec make_form(FormKind kind, int dim);
bool form_is_hermitian(FormKind k);
bool form_is_quadratic(FormKind k);

// Gram matrix of a bilinear or hermitian form (quadratic kinds return the upper-triangular A_m).
Mat form_matrix(const Field& f, FormSpec form);

// Value of a char-2 quadratic form on a column vector.
elem quadratic_form_value(const Field& f, FormSpec form, const std::vector<elem>& x);

// M^T F M = F for bilinear kinds; for quadratic kinds Q(Mx) = Q(x) on basis vectors and
// pairwise sums, which fixes Q and its polarization.
bool is_form_member(const Field& f, const Mat& m, FormSpec form);
// M^T beta conj(M) = beta.
bool is_form_member(const QuadExt& k, const Mat& m, FormSpec form);
// Same predicate by enumerating every vector; only for tiny sizes.
bool is_form_member_exhaustive(const Field& f, const Mat& m, FormSpec form);

// rank(I - M) mod 2 for M in O^eps(2m, 2^r).
int dickson_invariant(const Field& f, const Mat& m, FormSpec form);

// ---------------------------------------------------------- unitriangular

uint64_t unitriangular_order(int n, uint64_t field_size);

// Visits every n x n unitriangular matrix over k in lexicographic order of the
// strictly-upper entries (row-major, first entry most significant).
template <class K>
void for_each_unitriangular(const K& k, int n, uint64_t cap, const std::function<void(const Mat&)>& fn) {
    uint64_t total = unitriangular_order(n, k.size());
    require(total <= cap, Errc::cap_exceeded,
            "unitriangular group of order " + std::to_string(total) + " exceeds the enumeration cap");
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
    Mat m = identity(n);
    std::vector<elem> v(pos.size(), 0);
    for (uint64_t t = 0; t < total; ++t) {
        for (size_t i = 0; i < pos.size(); ++i) m(pos[i].first, pos[i].second) = v[i];
        fn(m);
        for (int i = int(pos.size()) - 1; i >= 0; --i) {
            if (++v[i] < k.size()) break;
            v[i] = 0;
        }
    }
}

}  // namespace syl
