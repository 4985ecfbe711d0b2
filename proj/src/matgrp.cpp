#include "matgrp.hpp"

namespace syl {

bool is_unitriangular(const Mat& a) {
    if (!a.square()) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j <= i; ++j)
            if (a(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

const char* form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::symplectic_S: return "symplectic_S";
        case FormKind::orth_plus_Aplus: return "orth_plus_Aplus";
        case FormKind::orth_minus_Aminus: return "orth_minus_Aminus";
        case FormKind::orth_odd_L: return "orth_odd_L";
        case FormKind::orth_char2_Qplus: return "orth_char2_Qplus";
        case FormKind::orth_char2_Qminus: return "orth_char2_Qminus";
        case FormKind::hermitian_beta_even: return "hermitian_beta_even";
        case FormKind::hermitian_beta_odd: return "hermitian_beta_odd";
    }
    return "?";
}

bool form_is_hermitian(FormKind k) {
    return k == FormKind::hermitian_beta_even || k == FormKind::hermitian_beta_odd;
}

bool form_is_quadratic(FormKind k) {
    return k == FormKind::orth_char2_Qplus || k == FormKind::orth_char2_Qminus;
}

static bool odd_dim_kind(FormKind k) { return k == FormKind::orth_odd_L || k == FormKind::hermitian_beta_odd; }

FormSpec make_form(FormKind kind, int dim) {
    require(dim >= 1, Errc::invalid_params, "form dimension must be positive");
    if (odd_dim_kind(kind))
        require(dim % 2 == 1 && dim >= 3, Errc::invalid_params, "odd form needs dimension 2m+1 with m >= 1");
    else
        require(dim % 2 == 0, Errc::invalid_params, "even form needs dimension 2m");
    return {kind, dim};
}

Mat form_matrix(const Field& f, FormSpec form) {
    int d = form.dim;
    Mat g(d, d);
    int off = odd_dim_kind(form.kind) ? 1 : 0;
    int m = (d - off) / 2;
    if (off) g(0, 0) = f.neg(1);
    switch (form.kind) {
        case FormKind::symplectic_S:
            for (int i = 0; i < m; ++i) {
                g(i, m + i) = 1;
                g(m + i, i) = f.neg(1);
            }
            break;
        case FormKind::orth_minus_Aminus: {
            elem eta = find_quadext_eta(f).eta;
            for (int i = 0; i < m; ++i) {
                g(i, m + i) = 1;
                g(m + i, i) = i == 0 ? eta : 1;
            }
            break;
        }
        case FormKind::orth_char2_Qplus:
        case FormKind::orth_char2_Qminus:
            // Upper-triangular representative: Q(x) = x G x^T.
            for (int i = 0; i < m; ++i) g(i, m + i) = 1;
            if (form.kind == FormKind::orth_char2_Qminus) {
                g(m - 1, m - 1) = 1;
                g(2 * m - 1, 2 * m - 1) = find_quadext_eta(f).eta;
            }
            break;
        default:
            for (int i = 0; i < m; ++i) {
                g(off + i, off + m + i) = 1;
                g(off + m + i, off + i) = 1;
            }
    }
    return g;
}

elem quadratic_form_value(const Field& f, FormSpec form, const std::vector<elem>& x) {
    require(form_is_quadratic(form.kind), Errc::invalid_params, "not a quadratic form kind");
    require(int(x.size()) == form.dim, Errc::dimension_mismatch, "vector length differs from form dimension");
    int m = form.dim / 2;
    elem q = 0;
    for (int i = 0; i < m; ++i) q = f.add(q, f.mul(x[i], x[m + i]));
    if (form.kind == FormKind::orth_char2_Qminus) {
        elem eta = find_quadext_eta(f).eta;
        q = f.add(q, f.mul(x[m - 1], x[m - 1]));
        q = f.add(q, f.mul(eta, f.mul(x[2 * m - 1], x[2 * m - 1])));
    }
    return q;
}

static std::vector<elem> apply(const Field& f, const Mat& m, const std::vector<elem>& x) {
    std::vector<elem> y(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) y[i] = f.add(y[i], f.mul(m(i, j), x[j]));
    return y;
}

bool is_form_member(const Field& f, const Mat& m, FormSpec form) {
    require(m.square() && m.rows == form.dim, Errc::dimension_mismatch, "matrix size differs from form dimension");
    require(!form_is_hermitian(form.kind), Errc::invalid_params, "hermitian form needs the quadratic extension");
    if (form_is_quadratic(form.kind)) {
        require(f.p() == 2, Errc::invalid_params, "quadratic forms are used only in characteristic 2");
        int d = form.dim;
        auto preserved = [&](const std::vector<elem>& x) {
            return quadratic_form_value(f, form, apply(f, m, x)) == quadratic_form_value(f, form, x);
        };
        std::vector<elem> x(d, 0);
        for (int i = 0; i < d; ++i) {
            x[i] = 1;
            if (!preserved(x)) return false;
            for (int j = i + 1; j < d; ++j) {
                x[j] = 1;
                bool ok = preserved(x);
                x[j] = 0;
                if (!ok) return false;
            }
            x[i] = 0;
        }
        return true;
    }
    Mat g = form_matrix(f, form);
    return mul(f, mul(f, transpose(m), g), m) == g;
}

bool is_form_member(const QuadExt& k, const Mat& m, FormSpec form) {
    require(m.square() && m.rows == form.dim, Errc::dimension_mismatch, "matrix size differs from form dimension");
    require(form_is_hermitian(form.kind), Errc::invalid_params, "bilinear forms live over the base field");
    // beta has entries in the prime field, so the base-field Gram matrix is valid over the extension.
    Mat g = form_matrix(k.base(), form);
    return mul(k, mul(k, transpose(m), g), entrywise_conj(k, m)) == g;
}

bool is_form_member_exhaustive(const Field& f, const Mat& m, FormSpec form) {
    require(m.square() && m.rows == form.dim, Errc::dimension_mismatch, "matrix size differs from form dimension");
    uint64_t total = ipow(f.size(), uint64_t(form.dim));
    require(total <= (uint64_t(1) << 20), Errc::cap_exceeded, "exhaustive membership check too large");
    if (!form_is_quadratic(form.kind)) {
        // Bilinear identity is equivalent to B(Mx, My) = B(x, y) on basis pairs.
        return is_form_member(f, m, form);
    }
    std::vector<elem> x(form.dim, 0);
    for (uint64_t t = 0; t < total; ++t) {
        if (quadratic_form_value(f, form, apply(f, m, x)) != quadratic_form_value(f, form, x)) return false;
        for (int i = form.dim - 1; i >= 0; --i) {
            if (++x[i] < f.size()) break;
            x[i] = 0;
        }
    }
    return true;
}

int dickson_invariant(const Field& f, const Mat& m, FormSpec form) {
    require(f.p() == 2, Errc::invalid_params, "dickson invariant is defined in characteristic 2");
    require(form_is_quadratic(form.kind), Errc::invalid_params, "dickson invariant needs a quadratic form");
    require(is_form_member(f, m, form), Errc::not_in_group, "matrix does not preserve the quadratic form");
    return rank(f, sub(f, identity(m.rows), m)) % 2;
}

uint64_t unitriangular_order(int n, uint64_t field_size) {
    require(n >= 0, Errc::invalid_params, "negative matrix size");
    return ipow(field_size, uint64_t(n) * uint64_t(n > 0 ? n - 1 : 0) / 2);
}

}  // namespace syl
