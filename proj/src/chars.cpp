#include "chars.hpp"

#include <algorithm>

namespace syl {

uint32_t char_eval(const Presentation& pres, const Vec& b, const Vec& d) {
    require(int(b.size()) == pres.delta_dim() && int(d.size()) == pres.delta_dim(), Errc::dimension_mismatch,
            "character and Delta vector lengths differ from delta_dim");
    return fp_dot(b, d, pres.p());
}

Vec restrict_to_center(const Presentation& pres, const Vec& b) {
    require(int(b.size()) == pres.delta_dim(), Errc::dimension_mismatch, "character has the wrong length");
    Vec t;
    for (int c : pres.center_coords()) t.push_back(b[c]);
    return t;
}

Vec l_act_on_char(const Presentation& pres, uint64_t l, const Vec& b) {
    return fp_apply_transpose(pres.action_matrix(pres.l_inv(l)), b, pres.p());
}

bool fixes_char(const Presentation& pres, uint64_t l, const Vec& b) {
    if (l == 0) return true;
    return fp_apply_transpose(pres.action_matrix(l), b, pres.p()) == b;
}

Stabilizer stabilizer_bruteforce(const Presentation& pres, const Vec& b) {
    require(int(b.size()) == pres.delta_dim(), Errc::dimension_mismatch, "character has the wrong length");
    require(pres.l_order() <= pres.caps().group, Errc::cap_exceeded, "|L| exceeds the enumeration cap");
    Stabilizer s;
    for (uint64_t l = 0; l < pres.l_order(); ++l)
        if (fixes_char(pres, l, b)) s.members.push_back(l);
    s.size = s.members.size();
    return s;
}

namespace {

// Zero pattern of a character over half-open coordinate ranges.
struct Shape {
    const Vec& b;
    bool zero(int lo, int hi) const {
        for (int i = lo; i < hi; ++i)
            if (b[i]) return false;
        return true;
    }
    // Nonzero exactly inside the listed ranges, each of which is nonzero.
    bool support_is(std::initializer_list<std::pair<int, int>> rs) const {
        std::vector<char> in(b.size(), 0);
        for (auto [lo, hi] : rs) {
            if (zero(lo, hi)) return false;
            for (int i = lo; i < hi; ++i) in[i] = 1;
        }
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i] && !in[i]) return false;
        return true;
    }
};

uint64_t pw(uint64_t p, int64_t e) { return ipow(p, uint64_t(e)); }

}  // namespace

std::optional<uint64_t> stabilizer_closed_form(const Presentation& pres, const Vec& b) {
    require(int(b.size()) == pres.delta_dim(), Errc::dimension_mismatch, "character has the wrong length");
    if (pres.l_order() == 1) return 1;
    if (fp_is_zero(b)) return pres.l_order();
    const auto& F = pres.family();
    int64_t r = F.r, n = F.size, m = F.size;
    uint64_t p = F.p;
    Shape s{b};
    switch (F.tag) {
        case FamilyTag::heisenberg:
            if (!s.zero(int(r * (n - 2)), int(r * (n - 1)))) return 1;
            return std::nullopt;
        case FamilyTag::up_full:
            // c_1 is the central coordinate; fixing a functional of c_1 kills the first row of A.
            if (s.support_is({{0, int(r)}})) return pw(p, r * (n - 2) * (n - 3) / 2);
            return std::nullopt;
        case FamilyTag::sp: {
            // Slots in row-major upper-triangle order; slot k < n is B_{1,k+1}.
            auto slot = [&](int k) { return std::pair<int, int>(int(k * r), int((k + 1) * r)); };
            if (p != 2) {
                if (s.support_is({slot(0)})) return pw(p, r * (n - 1) * (n - 2) / 2);
                return std::nullopt;
            }
            if (n == 2) {
                if (s.support_is({slot(0), slot(1)})) return 2;
                if (s.support_is({slot(0)}) || s.support_is({slot(1)})) return 1;
                return std::nullopt;
            }
            if (s.support_is({slot(0)})) return pw(2, r * (n - 1) * (n - 2) / 2);
            if (s.support_is({slot(0), slot(1)})) return pw(2, r * (n - 2) * (n - 3) / 2 + 1);
            if (s.support_is({slot(0), slot(int(n - 1))})) return pw(2, r * (n - 1) * (n - 2) / 2 + 1);
            return std::nullopt;
        }
        case FamilyTag::orth_even:
            if (m == 2) return pres.l_order();
            if (s.support_is({{0, int(r)}})) return pw(p, r * ((m - 2) * (m - 3) / 2 + 1));
            return std::nullopt;
        case FamilyTag::orth_odd: {
            std::pair<int, int> a1{0, int(r)}, b1{int(r * m), int(r * m + r)};
            if (m == 2) return s.zero(a1.first, a1.second) ? pres.l_order() : 1;
            if (s.support_is({b1})) return pw(p, r * ((m - 2) * (m - 3) / 2 + 1));
            if (s.support_is({a1})) return pw(p, r * (m - 1) * (m - 2) / 2);
            return std::nullopt;
        }
        case FamilyTag::unitary_even:
            if (s.support_is({{0, int(r)}})) return pw(p, r * (m - 1) * (m - 2));
            return std::nullopt;
        case FamilyTag::unitary_odd: {
            int b0 = int(2 * r * m);
            if (s.support_is({{b0, b0 + int(r)}})) return pw(p, r * (m - 1) * (m - 2));
            if (s.support_is({{0, int(r)}}) || s.support_is({{int(r), int(2 * r)}}))
                return pw(p, r * (m - 1) * (m - 2));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

uint64_t max_stabilizer_closed_form(const Presentation& pres) {
    if (pres.l_order() == 1) return 1;
    const auto& F = pres.family();
    int64_t r = F.r, n = F.size, m = F.size;
    uint64_t p = F.p;
    switch (F.tag) {
        case FamilyTag::heisenberg: return 1;
        case FamilyTag::up_full: return pw(p, r * (n - 2) * (n - 3) / 2);
        case FamilyTag::sp:
            if (p != 2) return pw(p, r * (n - 1) * (n - 2) / 2);
            if (n == 2) return 2;
            return pw(2, r * (n - 1) * (n - 2) / 2 + 1);
        case FamilyTag::orth_even:
            if (m == 2) return pw(p, r);
            return pw(p, r * ((m - 2) * (m - 3) / 2 + 1));
        case FamilyTag::orth_odd:
            if (m == 2) return pw(p, r);
            return pw(p, r * (m - 1) * (m - 2) / 2);
        case FamilyTag::unitary_even:
        case FamilyTag::unitary_odd: return pw(p, r * (m - 1) * (m - 2));
    }
    return 0;
}

std::vector<Orbit> orbit_decomposition(const Presentation& pres) {
    uint64_t total = pres.delta_order();
    require(total <= pres.caps().chars, Errc::cap_exceeded,
            "character group of order " + std::to_string(total) + " exceeds the character cap");
    require(pres.l_order() <= pres.caps().group, Errc::cap_exceeded, "|L| exceeds the enumeration cap");
    int d = pres.delta_dim();
    uint32_t p = pres.p();
    uint64_t nl = pres.l_order();
    std::vector<FpMat> mats(nl);
    for (uint64_t l = 0; l < nl; ++l) mats[l] = pres.action_matrix(l);
    std::vector<char> seen(total, 0);
    std::vector<Orbit> out;
    std::vector<uint64_t> images;
    for (uint64_t idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        Vec b = fp_decode(idx, d, p);
        images.clear();
        uint64_t stab = 0;
        for (uint64_t l = 0; l < nl; ++l) {
            uint64_t j = fp_encode(fp_apply_transpose(mats[l], b, p), p);
            if (j == idx) ++stab;
            images.push_back(j);
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        for (auto j : images) {
            require(!seen[j] || j == idx, Errc::internal, "orbits overlap");
            seen[j] = 1;
        }
        Orbit o;
        o.rep = b;
        o.orbit_size = images.size();
        o.stab_size = stab;
        o.central = restrict_to_center(pres, b);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace syl
