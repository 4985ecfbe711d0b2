#pragma once

// Finite fields F_{p^r} and the quadratic extension F_{p^{2r}} = F_{p^r}[alpha].
//
// Elements are dense indices: a = sum_i c_i x^i in the power basis is stored as
// sum_i c_i p^i, so index order is the enumeration order of coefficient vectors.
// Extension elements a = dot + ddot*alpha are stored as dot + q*ddot.

#include <cstdint>
#include <memory>
#include <vector>

#include "error.hpp"

namespace syl {

using elem = uint32_t;

bool is_prime(uint64_t n);

class Field {
public:
    // Smallest monic irreducible of degree r, lexicographic on (c_{r-1}, ..., c_0).
    static Field make(int p, int r, int max_r = 8, uint64_t max_order = uint64_t(1) << 20);

    int p() const { return p_; }
    int r() const { return r_; }
    elem size() const { return q_; }
    // modulus()[i] is the coefficient of x^i; modulus()[r] == 1.
    const std::vector<int>& modulus() const { return mod_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long v) const;  // image of Z in the prime subfield
    std::vector<int> coeffs(elem a) const;
    elem from_coeffs(const std::vector<int>& c) const;
    int digit(elem a, int i) const { return int((a / pw_[i]) % elem(p_)); }

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;  // throws singular on 0
    elem pow(elem a, uint64_t e) const;
    elem frob(elem a) const { return pow(a, uint64_t(p_)); }
    elem conj(elem a) const { return a; }  // trivial involution, for code shared with QuadExt
    // sum_{i<r} a^{p^i}, returned as a residue in [0,p).
    int trace(elem a) const;
    bool is_square(elem a) const;
    elem primitive() const { return gen_; }

    Field() = default;  // empty; only make() yields a usable field

private:
    elem poly_mul(elem a, elem b) const;  // schoolbook, reduced mod modulus
    int p_ = 0, r_ = 0;
    elem q_ = 0;
    std::vector<int> mod_;
    std::vector<elem> pw_;  // p^i
    elem gen_ = 0;
    std::shared_ptr<const std::vector<elem>> exp_, log_;
};

// Monic polynomial test over F_p by trial division with all monic polys of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<int>& monic, int p);

enum class AlphaKind { odd_sqrt, char2_artin_schreier };

// F_{p^{2r}} as F_{p^r}^2 in basis {1, alpha}.
//   odd_sqrt:             alpha^2 + eta' = 0 with eta' = -eta, eta the first nonsquare.
//   char2_artin_schreier: alpha^2 + alpha + eta = 0 with Tr(eta) = 1.
class QuadExt {
public:
    static QuadExt make(const Field& base);

    const Field& base() const { return base_; }
    AlphaKind kind() const { return kind_; }
    elem eta() const { return eta_; }
    // The constant eta' in alpha^2 + eta' (odd p), or eta (p = 2).
    elem eta_prime() const;
    int p() const { return base_.p(); }
    elem size() const { return q_ * q_; }

    elem make_elem(elem dot, elem ddot) const { return dot + q_ * ddot; }
    elem dot(elem a) const { return a % q_; }
    elem ddot(elem a) const { return a / q_; }
    elem alpha() const { return make_elem(0, 1); }
    elem embed(elem base_elem) const { return base_elem; }
    bool in_base(elem a) const { return ddot(a) == 0; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long v) const { return base_.from_int(v); }
    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;
    elem pow(elem a, uint64_t e) const;
    elem conj(elem a) const;
    // a * conj(a), lies in the base field.
    elem norm(elem a) const;

private:
    QuadExt(const Field& b) : base_(b) {}
    elem mul_slow(elem a, elem b) const;
    Field base_;
    AlphaKind kind_ = AlphaKind::odd_sqrt;
    elem eta_ = 0;
    elem q_ = 0;
    std::shared_ptr<const std::vector<elem>> exp_, log_;
    elem order_ = 0;
};

struct QuadExtParams {
    AlphaKind kind;
    elem eta;
};

// First nonsquare (odd p) or first trace-one element (p = 2) in enumeration order.
QuadExtParams find_quadext_eta(const Field& f);

struct Char2Roots {
    std::vector<elem> roots;  // sorted
    int predicted;            // root count from the trace criterion
};

// Roots of a x^2 + b x + c over F_{2^r}; the count is checked against the trace trichotomy.
Char2Roots solve_quadratic_char2(const Field& f, elem a, elem b, elem c);

}  // namespace syl
