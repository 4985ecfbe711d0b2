#include <doctest.h>

#include <set>

#include "ff.hpp"

using namespace syl;

namespace {

// Naive reference: polynomials over F_p as coefficient vectors, product reduced by the modulus.
elem ref_mul(const Field& f, elem a, elem b) {
    int p = f.p(), r = f.r();
    auto ca = f.coeffs(a), cb = f.coeffs(b);
    std::vector<int> prod(2 * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    const auto& m = f.modulus();
    for (int d = 2 * r - 1; d >= r; --d) {
        int c = prod[d];
        if (!c) continue;
        for (int i = 0; i <= r; ++i) prod[d - r + i] = ((prod[d - r + i] - c * m[i]) % p + p) % p;
    }
    prod.resize(r);
    return f.from_coeffs(prod);
}

const std::vector<std::pair<int, int>> kFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}};

}  // namespace

TEST_CASE("primality") {
    std::set<uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (uint64_t n = 0; n < 32; ++n) CHECK(is_prime(n) == (primes.count(n) == 1));
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), Error);
    try {
        Field::make(6, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_prime);
    }
    try {
        Field::make(2, 9);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degree_too_large);
    }
}

TEST_CASE("modulus is the smallest monic irreducible") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        CHECK(is_irreducible_mod_p(f.modulus(), p));
        // every smaller monic polynomial of degree r is reducible
        uint64_t target = 0;
        for (int i = r - 1; i >= 0; --i) target = target * p + f.modulus()[i];
        for (uint64_t t = 0; t < target; ++t) {
            std::vector<int> poly(r + 1, 0);
            poly[r] = 1;
            uint64_t x = t;
            for (int i = 0; i < r; ++i) {
                poly[i] = int(x % p);
                x /= p;
            }
            CHECK_FALSE(is_irreducible_mod_p(poly, p));
        }
    }
    CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("field axioms and reference multiplication") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        elem q = f.size();
        for (elem a = 0; a < q; ++a) {
            CHECK(f.from_coeffs(f.coeffs(a)) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, q) == a);
            for (elem b = 0; b < q; b += (q > 32 ? 7 : 1)) {
                CHECK(f.mul(a, b) == ref_mul(f, a, b));
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
                for (elem c = 0; c < q; c += (q > 8 ? 5 : 1))
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
        CHECK_THROWS_AS(f.inv(0), Error);
    }
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        std::set<elem> seen;
        elem x = 1;
        for (elem i = 0; i + 1 < f.size(); ++i) {
            seen.insert(x);
            x = f.mul(x, f.primitive());
        }
        CHECK(seen.size() == f.size() - 1);
    }
}

TEST_CASE("trace is F_p-linear, surjective, kernel of size p^(r-1)") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        uint64_t kernel = 0;
        for (elem a = 0; a < f.size(); ++a) {
            if (f.trace(a) == 0) ++kernel;
            CHECK(f.trace(f.frob(a)) == f.trace(a));
            CHECK(f.trace(f.add(a, 1)) == (f.trace(a) + r) % p);
        }
        CHECK(kernel == ipow(p, r - 1));
    }
}

TEST_CASE("squares") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        std::set<elem> sq;
        for (elem a = 0; a < f.size(); ++a) sq.insert(f.mul(a, a));
        for (elem a = 0; a < f.size(); ++a) CHECK(f.is_square(a) == (sq.count(a) == 1));
    }
}

TEST_CASE("quadratic extension") {
    for (auto [p, r] : kFields) {
        Field f = Field::make(p, r);
        if (f.size() > 256) continue;
        QuadExt k = QuadExt::make(f);
        auto qe = find_quadext_eta(f);
        CHECK(k.eta() == qe.eta);
        elem a = k.alpha();
        if (p == 2) {
            CHECK(k.kind() == AlphaKind::char2_artin_schreier);
            CHECK(f.trace(k.eta()) == 1);
            for (elem e = 0; e < k.eta(); ++e) CHECK(f.trace(e) == 0);
            // alpha^2 + alpha + eta = 0
            CHECK(k.add(k.add(k.mul(a, a), a), k.embed(k.eta())) == 0);
        } else {
            CHECK(k.kind() == AlphaKind::odd_sqrt);
            CHECK_FALSE(f.is_square(k.eta()));
            for (elem e = 1; e < k.eta(); ++e) CHECK(f.is_square(e));
            CHECK(k.eta_prime() == f.neg(k.eta()));
            CHECK(k.add(k.mul(a, a), k.embed(k.eta_prime())) == 0);
        }
        elem Q = k.size();
        for (elem x = 0; x < Q; ++x) {
            CHECK(k.conj(k.conj(x)) == x);
            CHECK(k.conj(x) == k.pow(x, f.size()));  // conjugation is the q-Frobenius
            CHECK(k.in_base(k.norm(x)));
            if (x) CHECK(k.mul(x, k.inv(x)) == 1);
            for (elem y = 0; y < Q; y += (Q > 64 ? 13 : 1)) {
                CHECK(k.conj(k.mul(x, y)) == k.mul(k.conj(x), k.conj(y)));
                CHECK(k.conj(k.add(x, y)) == k.add(k.conj(x), k.conj(y)));
                CHECK(k.mul(x, y) == k.mul(y, x));
            }
        }
        for (elem x = 0; x < f.size(); ++x) CHECK(k.conj(k.embed(x)) == k.embed(x));
    }
}

TEST_CASE("quadratic roots in characteristic 2 match enumeration") {
    for (int r = 1; r <= 3; ++r) {
        Field f = Field::make(2, r);
        elem q = f.size();
        for (elem a = 1; a < q; ++a)
            for (elem b = 0; b < q; ++b)
                for (elem c = 0; c < q; ++c) {
                    std::vector<elem> roots;
                    for (elem x = 0; x < q; ++x)
                        if (f.add(f.add(f.mul(a, f.mul(x, x)), f.mul(b, x)), c) == 0) roots.push_back(x);
                    auto got = solve_quadratic_char2(f, a, b, c);
                    CHECK(got.roots == roots);
                    CHECK(got.predicted == int(roots.size()));
                }
    }
    Field f = Field::make(2, 2);
    try {
        solve_quadratic_char2(f, 0, 1, 1);
        FAIL("expected LeadingCoeffZero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::leading_coeff_zero);
    }
}

TEST_CASE("checked integer arithmetic") {
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(2, 62) == uint64_t(1) << 62);
    CHECK_THROWS_AS(ipow(2, 70), Error);
    CHECK_THROWS_AS(checked_mul(uint64_t(1) << 40, uint64_t(1) << 40), Error);
}
