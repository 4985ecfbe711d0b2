#include "wm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace syl {

CentralDims central_dims(const Presentation& pres) {
    CentralDims cd;
    cd.rank = int(pres.center_coords().size());
    cd.p = pres.p();
    uint64_t nt = ipow(cd.p, uint64_t(cd.rank));
    constexpr uint64_t inf = std::numeric_limits<uint64_t>::max();
    cd.dim.assign(nt, inf);
    cd.witness.assign(nt, Vec{});
    cd.stab.assign(nt, 0);
    for (const auto& o : orbit_decomposition(pres)) {
        uint64_t t = fp_encode(o.central, cd.p);
        uint64_t dim = pres.l_order() / o.stab_size;
        require(dim * o.stab_size == pres.l_order(), Errc::internal, "stabilizer order does not divide |L|");
        if (dim < cd.dim[t] || (dim == cd.dim[t] && o.rep < cd.witness[t])) {
            cd.dim[t] = dim;
            cd.witness[t] = o.rep;
            cd.stab[t] = o.stab_size;
        }
    }
    for (uint64_t t = 0; t < nt; ++t)
        require(cd.dim[t] != inf, Errc::internal, "central character without a lift to Delta");
    return cd;
}

uint64_t min_irrep_dim_for_central_char(const Presentation& pres, const Vec& t) {
    require(int(t.size()) == int(pres.center_coords().size()), Errc::dimension_mismatch,
            "central character length differs from the center rank");
    if (fp_is_zero(t)) return 1;
    return central_dims(pres).dim[fp_encode(t, pres.p())];
}

namespace {

struct Cand {
    uint64_t t;
    uint64_t d;
    Vec v;
};

std::vector<Cand> candidates(const CentralDims& cd) {
    std::vector<Cand> c;
    for (uint64_t t = 1; t < cd.dim.size(); ++t) c.push_back({t, cd.dim[t], fp_decode(t, cd.rank, cd.p)});
    std::stable_sort(c.begin(), c.end(), [](const Cand& a, const Cand& b) { return a.d < b.d; });
    return c;
}

void exhaustive(const std::vector<Cand>& c, int s, uint32_t p, size_t start, std::vector<size_t>& cur,
                uint64_t sum, uint64_t& best, std::vector<size_t>& best_set) {
    if (int(cur.size()) == s) {
        if (sum < best) {
            best = sum;
            best_set = cur;
        }
        return;
    }
    int need = s - int(cur.size());
    for (size_t i = start; i < c.size(); ++i) {
        // Candidates are sorted by d, so every completion costs at least need * d_i.
        if (sum + uint64_t(need) * c[i].d >= best) break;
        std::vector<Vec> rows;
        for (auto k : cur) rows.push_back(c[k].v);
        rows.push_back(c[i].v);
        if (fp_rank(rows, p) != int(rows.size())) continue;
        cur.push_back(i);
        exhaustive(c, s, p, i + 1, cur, sum + c[i].d, best, best_set);
        cur.pop_back();
    }
}

}  // namespace

FaithfulResult min_basis_from_table(const CentralDims& cd, bool force_greedy) {
    FaithfulResult res;
    int s = cd.rank;
    if (s == 0) {
        res.dim = 0;
        res.strategy = "exhaustive";
        res.certified = true;
        return res;
    }
    auto c = candidates(cd);
    auto fill = [&](const std::vector<size_t>& idx) {
        res.basis.clear();
        res.dim = 0;
        for (auto k : idx) {
            FaithfulWitness w;
            w.central = c[k].v;
            w.character = cd.witness[c[k].t];
            w.stab = cd.stab[c[k].t];
            w.dim = c[k].d;
            res.dim = checked_add(res.dim, w.dim);
            res.basis.push_back(std::move(w));
        }
    };
    // Greedy by increasing d: optimal for a matroid, certified below by the exchange condition.
    std::vector<size_t> greedy;
    {
        std::vector<Vec> rows;
        for (size_t i = 0; i < c.size() && int(greedy.size()) < s; ++i) {
            rows.push_back(c[i].v);
            if (fp_rank(rows, cd.p) == int(rows.size())) greedy.push_back(i);
            else rows.pop_back();
        }
    }
    require(int(greedy.size()) == s, Errc::internal, "central characters do not span");
    std::vector<Vec> gb;
    for (auto k : greedy) gb.push_back(c[k].v);
    bool cert = true;
    for (const auto& x : c) {
        auto coef = fp_solve_in_span(gb, x.v, cd.p);
        require(!coef.empty(), Errc::internal, "greedy basis does not span");
        for (int i = 0; i < s; ++i)
            if (coef[i] && c[greedy[i]].d > x.d) cert = false;
    }
    uint64_t space = ipow(cd.p, uint64_t(s));
    if (space <= 81 && !force_greedy) {
        uint64_t best = std::numeric_limits<uint64_t>::max();
        std::vector<size_t> cur, best_set;
        exhaustive(c, s, cd.p, 0, cur, 0, best, best_set);
        fill(best_set);
        res.strategy = "exhaustive";
        res.certified = true;
        uint64_t gsum = 0;
        for (auto k : greedy) gsum += c[k].d;
        require(gsum == best && cert, Errc::internal, "greedy basis disagrees with exhaustive search");
        return res;
    }
    fill(greedy);
    res.strategy = "greedy";
    res.certified = cert;
    return res;
}

FaithfulResult min_faithful_dim(const Presentation& pres) {
    Presentation view = pres.analysis_view();
    return min_basis_from_table(central_dims(view));
}

const char* ed_method_name(EdMethod m) {
    switch (m) {
        case EdMethod::closed_form: return "closed_form";
        case EdMethod::wm_search: return "wm_search";
        case EdMethod::special_known: return "special_known";
    }
    return "?";
}

EdResult ed_formula(const FamilyParams& fam) {
    EdResult res;
    res.family = fam;
    if (validate_family(fam)) {
        res.ed = 2;
        res.method = EdMethod::special_known;
        return res;
    }
    uint64_t p = fam.p, r = fam.r, n = fam.size, m = fam.size;
    auto term = [&](uint64_t coef, uint64_t e) { return checked_mul(coef, ipow(p, e)); };
    switch (fam.tag) {
        case FamilyTag::heisenberg:
        case FamilyTag::up_full: res.ed = term(r, r * (n - 2)); break;
        case FamilyTag::sp:
            if (p != 2 || n == 2) res.ed = term(r, r * (n - 1));
            else res.ed = checked_mul(term(r, r * (n - 1) - 1), checked_add(ipow(2, r * (n - 2)), 1));
            break;
        case FamilyTag::orth_even: res.ed = m == 2 ? 2 * r : term(r, 2 * r * (m - 2)); break;
        case FamilyTag::orth_odd: res.ed = checked_add(term(r, r * (m - 1)), term(r, r * (m - 1) * (m - 2))); break;
        case FamilyTag::unitary_even: res.ed = term(r, 2 * r * (m - 1)); break;
        case FamilyTag::unitary_odd: res.ed = term(3 * r, 2 * r * (m - 1)); break;
    }
    res.method = EdMethod::closed_form;
    return res;
}

}  // namespace syl
