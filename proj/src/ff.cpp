#include "ff.hpp"

#include <algorithm>
#include <string>

namespace syl {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_params: return "InvalidParams";
        case Errc::not_prime: return "NotPrime";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::excluded_case: return "ExcludedCase";
        case Errc::cap_exceeded: return "EnumerationCapExceeded";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::singular: return "Singular";
        case Errc::not_in_group: return "NotInGroup";
        case Errc::leading_coeff_zero: return "LeadingCoeffZero";
        case Errc::mismatch: return "Mismatch";
        case Errc::overflow: return "Overflow";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    unsigned __int128 v = (unsigned __int128)a * b;
    if (v > (unsigned __int128)(uint64_t(1) << 63)) fail(Errc::overflow, "integer result exceeds 2^63");
    return uint64_t(v);
}

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t v = a + b;
    if (v < a || v > (uint64_t(1) << 63)) fail(Errc::overflow, "integer result exceeds 2^63");
    return v;
}

uint64_t ipow(uint64_t base, uint64_t exp) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < exp; ++i) v = checked_mul(v, base);
    return v;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a by monic b over F_p; vectors are low-to-high coefficients.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = int(b.size()) - 1;
    for (int i = int(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 0));
    return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> f;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        f.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& monic, int p) {
    int deg = int(monic.size()) - 1;
    if (deg < 1 || monic.back() != 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        uint64_t count = ipow(p, d);
        for (uint64_t t = 0; t < count; ++t) {
            std::vector<int> g(d + 1);
            uint64_t v = t;
            for (int i = 0; i < d; ++i) {
                g[i] = int(v % p);
                v /= p;
            }
            g[d] = 1;
            auto rem = poly_rem(monic, g, p);
            if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

Field Field::make(int p, int r, int max_r, uint64_t max_order) {
    require(p >= 2 && is_prime(uint64_t(p)), Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(r >= 1, Errc::invalid_params, "extension degree r must be >= 1");
    require(r <= max_r, Errc::degree_too_large,
            "r = " + std::to_string(r) + " exceeds the configured maximum " + std::to_string(max_r));
    uint64_t q = ipow(p, r);
    require(q <= max_order, Errc::degree_too_large,
            "field order " + std::to_string(q) + " exceeds the configured maximum " + std::to_string(max_order));

    Field f;
    f.p_ = p;
    f.r_ = r;
    f.q_ = elem(q);
    f.pw_.resize(r + 1);
    f.pw_[0] = 1;
    for (int i = 1; i <= r; ++i) f.pw_[i] = f.pw_[i - 1] * elem(p);

    for (uint64_t t = 0; t < q; ++t) {
        std::vector<int> m(r + 1);
        uint64_t v = t;
        for (int i = 0; i < r; ++i) {
            m[i] = int(v % p);
            v /= p;
        }
        m[r] = 1;
        if (is_irreducible_mod_p(m, p)) {
            f.mod_ = m;
            break;
        }
    }
    require(!f.mod_.empty(), Errc::internal, "no irreducible polynomial found");

    // Multiplicative group is cyclic of order q-1; pick the first generator.
    uint64_t order = q - 1;
    auto factors = prime_factors(order);
    auto slow_pow = [&](elem a, uint64_t e) {
        elem acc = 1;
        while (e) {
            if (e & 1) acc = f.poly_mul(acc, a);
            a = f.poly_mul(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (elem g = 1; g < f.q_; ++g) {
        bool ok = true;
        for (auto l : factors)
            if (slow_pow(g, order / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            f.gen_ = g;
            break;
        }
    }
    auto ex = std::make_shared<std::vector<elem>>(order);
    auto lg = std::make_shared<std::vector<elem>>(q, 0);
    elem cur = 1;
    for (uint64_t i = 0; i < order; ++i) {
        (*ex)[i] = cur;
        (*lg)[cur] = elem(i);
        cur = f.poly_mul(cur, f.gen_);
    }
    require(cur == 1, Errc::internal, "generator order mismatch");
    f.exp_ = ex;
    f.log_ = lg;
    return f;
}

elem Field::poly_mul(elem a, elem b) const {
    std::vector<int> prod(2 * r_, 0);
    auto ca = coeffs(a), cb = coeffs(b);
    for (int i = 0; i < r_; ++i) {
        if (!ca[i]) continue;
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    return from_coeffs(poly_rem(prod, mod_, p_));
}

elem Field::from_int(long v) const {
    long m = v % p_;
    if (m < 0) m += p_;
    return elem(m);
}

std::vector<int> Field::coeffs(elem a) const {
    std::vector<int> c(r_);
    for (int i = 0; i < r_; ++i) {
        c[i] = int(a % elem(p_));
        a /= elem(p_);
    }
    return c;
}

elem Field::from_coeffs(const std::vector<int>& c) const {
    elem v = 0;
    for (int i = std::min<int>(r_, int(c.size())) - 1; i >= 0; --i) v = v * elem(p_) + elem(((c[i] % p_) + p_) % p_);
    return v;
}

elem Field::add(elem a, elem b) const {
    if (p_ == 2) return a ^ b;
    elem v = 0;
    for (int i = 0; i < r_; ++i) {
        elem s = (a % p_ + b % p_) % p_;
        v += s * pw_[i];
        a /= p_;
        b /= p_;
    }
    return v;
}

elem Field::neg(elem a) const {
    if (p_ == 2) return a;
    elem v = 0;
    for (int i = 0; i < r_; ++i) {
        elem d = a % p_;
        v += ((p_ - d) % p_) * pw_[i];
        a /= p_;
    }
    return v;
}

elem Field::sub(elem a, elem b) const { return add(a, neg(b)); }

elem Field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto& lg = *log_;
    uint64_t s = uint64_t(lg[a]) + lg[b];
    uint64_t n = q_ - 1;
    return (*exp_)[s >= n ? s - n : s];
}

elem Field::inv(elem a) const {
    require(a != 0, Errc::singular, "inverse of zero");
    uint64_t n = q_ - 1;
    uint64_t l = (*log_)[a];
    return (*exp_)[(n - l) % n];
}

elem Field::pow(elem a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    uint64_t n = q_ - 1;
    return (*exp_)[(uint64_t((*log_)[a]) * (e % n)) % n];
}

int Field::trace(elem a) const {
    elem s = 0, cur = a;
    for (int i = 0; i < r_; ++i) {
        s = add(s, cur);
        cur = frob(cur);
    }
    require(s < elem(p_), Errc::internal, "trace left the prime field");
    return int(s);
}

bool Field::is_square(elem a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

// ---------------------------------------------------------------- QuadExt

QuadExtParams find_quadext_eta(const Field& f) {
    for (elem a = 0; a < f.size(); ++a) {
        if (f.p() == 2) {
            if (f.trace(a) == 1) return {AlphaKind::char2_artin_schreier, a};
        } else if (!f.is_square(a)) {
            return {AlphaKind::odd_sqrt, a};
        }
    }
    fail(Errc::internal, "no quadratic-extension parameter exists");
}

QuadExt QuadExt::make(const Field& base) {
    QuadExt k(base);
    auto prm = find_quadext_eta(base);
    k.kind_ = prm.kind;
    k.eta_ = prm.eta;
    k.q_ = base.size();
    uint64_t Q = uint64_t(k.q_) * k.q_;
    require(Q <= (uint64_t(1) << 20), Errc::degree_too_large,
            "quadratic extension order " + std::to_string(Q) + " exceeds 2^20");
    uint64_t order = Q - 1;
    auto factors = prime_factors(order);
    auto slow_pow = [&](elem a, uint64_t e) {
        elem acc = 1;
        while (e) {
            if (e & 1) acc = k.mul_slow(acc, a);
            a = k.mul_slow(a, a);
            e >>= 1;
        }
        return acc;
    };
    elem gen = 0;
    for (elem g = 1; g < Q; ++g) {
        bool ok = true;
        for (auto l : factors)
            if (slow_pow(g, order / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = g;
            break;
        }
    }
    auto ex = std::make_shared<std::vector<elem>>(order);
    auto lg = std::make_shared<std::vector<elem>>(Q, 0);
    elem cur = 1;
    for (uint64_t i = 0; i < order; ++i) {
        (*ex)[i] = cur;
        (*lg)[cur] = elem(i);
        cur = k.mul_slow(cur, gen);
    }
    require(cur == 1, Errc::internal, "x^2 + eta' is not irreducible");
    k.exp_ = ex;
    k.log_ = lg;
    k.order_ = elem(order);
    return k;
}

elem QuadExt::eta_prime() const { return kind_ == AlphaKind::odd_sqrt ? base_.neg(eta_) : eta_; }

elem QuadExt::add(elem a, elem b) const {
    return make_elem(base_.add(dot(a), dot(b)), base_.add(ddot(a), ddot(b)));
}

elem QuadExt::neg(elem a) const { return make_elem(base_.neg(dot(a)), base_.neg(ddot(a))); }

elem QuadExt::sub(elem a, elem b) const { return add(a, neg(b)); }

elem QuadExt::mul_slow(elem a, elem b) const {
    const Field& f = base_;
    elem a0 = dot(a), a1 = ddot(a), b0 = dot(b), b1 = ddot(b);
    elem hh = f.mul(a1, b1);
    elem c0 = f.add(f.mul(a0, b0), f.mul(eta_, hh));  // alpha^2 = eta in both cases
    elem c1 = f.add(f.mul(a0, b1), f.mul(a1, b0));
    if (kind_ == AlphaKind::char2_artin_schreier) c1 = f.add(c1, hh);  // alpha^2 = alpha + eta
    return make_elem(c0, c1);
}

elem QuadExt::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto& lg = *log_;
    uint64_t s = uint64_t(lg[a]) + lg[b];
    return (*exp_)[s >= order_ ? s - order_ : s];
}

elem QuadExt::inv(elem a) const {
    require(a != 0, Errc::singular, "inverse of zero");
    uint64_t l = (*log_)[a];
    return (*exp_)[(order_ - l) % order_];
}

elem QuadExt::pow(elem a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return (*exp_)[(uint64_t((*log_)[a]) * (e % order_)) % order_];
}

elem QuadExt::conj(elem a) const {
    if (kind_ == AlphaKind::odd_sqrt) return make_elem(dot(a), base_.neg(ddot(a)));
    return make_elem(base_.add(dot(a), ddot(a)), ddot(a));
}

elem QuadExt::norm(elem a) const { return mul(a, conj(a)); }

// ---------------------------------------------------------------- char 2

Char2Roots solve_quadratic_char2(const Field& f, elem a, elem b, elem c) {
    require(f.p() == 2, Errc::invalid_params, "solve_quadratic_char2 needs characteristic 2");
    require(a != 0, Errc::leading_coeff_zero, "leading coefficient is zero");
    Char2Roots out;
    for (elem x = 0; x < f.size(); ++x) {
        elem v = f.add(f.add(f.mul(a, f.mul(x, x)), f.mul(b, x)), c);
        if (v == 0) out.roots.push_back(x);
    }
    if (b == 0) {
        out.predicted = 1;
    } else {
        elem t = f.mul(f.mul(a, c), f.inv(f.mul(b, b)));
        out.predicted = f.trace(t) == 0 ? 2 : 0;
    }
    require(int(out.roots.size()) == out.predicted, Errc::internal, "trace criterion disagrees with root search");
    return out;
}

}  // namespace syl
