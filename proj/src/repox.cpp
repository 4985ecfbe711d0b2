#include "repox.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace syl {

bool MonoMat::is_identity() const {
    for (size_t j = 0; j < perm.size(); ++j)
        if (perm[j] != j || expo[j]) return false;
    return true;
}

MonoMat compose(const MonoMat& a, const MonoMat& b, uint32_t p) {
    require(a.perm.size() == b.perm.size(), Errc::dimension_mismatch, "monomial matrices of different size");
    MonoMat c;
    size_t n = b.perm.size();
    c.perm.resize(n);
    c.expo.resize(n);
    for (size_t j = 0; j < n; ++j) {
        uint32_t k = b.perm[j];
        c.perm[j] = a.perm[k];
        c.expo[j] = (b.expo[j] + a.expo[k]) % p;
    }
    return c;
}

MonomialRep induce_monomial(const Presentation& pres, const Vec& s) {
    auto st = stabilizer_bruteforce(pres, s);
    uint64_t nl = pres.l_order();
    uint64_t dim = nl / st.size;
    require(dim <= pres.caps().repdim, Errc::cap_exceeded,
            "induced dimension " + std::to_string(dim) + " exceeds the representation cap");
    MonomialRep rep;
    rep.p = pres.p();
    rep.s = s;
    rep.stab = st.size;
    rep.coset_of.assign(nl, UINT32_MAX);
    for (uint64_t l = 0; l < nl; ++l) {
        if (rep.coset_of[l] != UINT32_MAX) continue;
        uint32_t j = uint32_t(rep.reps.size());
        rep.reps.push_back(l);
        for (auto h : st.members) {
            uint64_t lh = pres.l_mul(l, h);
            require(rep.coset_of[lh] == UINT32_MAX, Errc::internal, "cosets overlap");
            rep.coset_of[lh] = j;
        }
    }
    rep.dim = rep.reps.size();
    require(rep.dim == dim, Errc::internal, "coset count differs from |L| / |L_s|");
    for (auto l : rep.reps) rep.twisted.push_back(l_act_on_char(pres, l, s));
    return rep;
}

MonoMat evaluate(const Presentation& pres, const MonomialRep& rep, const GroupElt& g) {
    pres.check(g);
    MonoMat m;
    m.perm.resize(rep.dim);
    m.expo.resize(rep.dim);
    for (uint64_t j = 0; j < rep.dim; ++j) {
        uint32_t i = rep.coset_of[pres.l_mul(g.l, rep.reps[j])];
        m.perm[j] = i;
        m.expo[j] = fp_dot(rep.twisted[i], g.delta, rep.p);
    }
    return m;
}

template <class Fn>
static uint64_t parallel_count(uint64_t total, unsigned workers, Fn fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || total < 4096) return fn(0, total);
    std::vector<std::thread> pool;
    std::atomic<uint64_t> acc{0};
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { acc += fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
    return acc.load();
}

uint64_t rep_kernel(const Presentation& pres, const std::vector<MonomialRep>& reps) {
    require(pres.group_order() <= pres.caps().group, Errc::cap_exceeded,
            "group order " + std::to_string(pres.group_order()) + " exceeds the enumeration cap");
    uint64_t nd = pres.delta_order();
    int d = pres.delta_dim();
    uint32_t p = pres.p();
    uint64_t count = 0;
    for (uint64_t l = 0; l < pres.l_order(); ++l) {
        // The permutation part depends on l alone.
        bool perm_trivial = true;
        for (const auto& rep : reps) {
            for (uint64_t j = 0; j < rep.dim && perm_trivial; ++j)
                if (rep.coset_of[pres.l_mul(l, rep.reps[j])] != j) perm_trivial = false;
            if (!perm_trivial) break;
        }
        if (!perm_trivial) continue;
        count += parallel_count(nd, pres.caps().workers, [&](uint64_t lo, uint64_t hi) {
            uint64_t c = 0;
            for (uint64_t idx = lo; idx < hi; ++idx) {
                Vec delta = fp_decode(idx, d, p);
                GroupElt g{delta, l};
                bool trivial = true;
                for (const auto& rep : reps) {
                    if (!evaluate(pres, rep, g).is_identity()) {
                        trivial = false;
                        break;
                    }
                }
                c += trivial;
            }
            return c;
        });
    }
    return count;
}

// ---------------------------------------------------------------- Up_n

UpRep heisenberg_extension(const Field& f, int n, const Vec& s_x, const Caps& caps) {
    require(n >= 3, Errc::invalid_params, "extension needs n >= 3");
    require(int(s_x.size()) == f.r(), Errc::dimension_mismatch, "central character must have r coordinates");
    require(!fp_is_zero(s_x), Errc::invalid_params, "central character must be nontrivial");
    UpRep rep;
    rep.field = f;
    rep.n = n;
    rep.s_x = s_x;
    rep.dim = ipow(f.size(), uint64_t(n - 2));
    require(rep.dim <= caps.repdim, Errc::cap_exceeded,
            "induced dimension " + std::to_string(rep.dim) + " exceeds the representation cap");
    return rep;
}

MonoMat evaluate(const UpRep& rep, const Mat& g) {
    const Field& f = rep.field;
    int n = rep.n;
    require(g.rows == n && is_unitriangular(g), Errc::mismatch, "element is not in Up_n");
    uint64_t q = f.size();
    MonoMat m;
    m.perm.resize(rep.dim);
    m.expo.resize(rep.dim);
    std::vector<elem> c(n - 2);
    for (uint64_t j = 0; j < rep.dim; ++j) {
        uint64_t t = j;
        for (int k = n - 3; k >= 0; --k) {
            c[k] = elem(t % q);
            t /= q;
        }
        // Last column of g * t_c, where t_c has last column (0, c, 1).
        uint64_t target = 0;
        elem top = 0;
        for (int i = 0; i < n - 1; ++i) {
            elem v = g(i, n - 1);
            for (int k = 1; k <= n - 2; ++k) v = f.add(v, f.mul(g(i, k), c[k - 1]));
            if (i == 0) top = v;
            else target = target * q + v;
        }
        m.perm[j] = uint32_t(target);
        uint64_t e = 0;
        for (int k = 0; k < f.r(); ++k) e += uint64_t(rep.s_x[k]) * uint64_t(f.digit(top, k));
        m.expo[j] = uint32_t(e % uint64_t(f.p()));
    }
    return m;
}

uint64_t up_kernel(const std::vector<UpRep>& reps, const Caps& caps) {
    require(!reps.empty(), Errc::invalid_params, "empty direct sum");
    const Field& f = reps[0].field;
    int n = reps[0].n;
    uint64_t count = 0;
    for_each_unitriangular(f, n, caps.group, [&](const Mat& g) {
        for (const auto& rep : reps)
            if (!evaluate(rep, g).is_identity()) return;
        ++count;
    });
    return count;
}

Certificate certify_up_from_centrals(const Field& f, int n, const std::vector<Vec>& centrals, const Caps& caps) {
    Certificate c;
    c.group = "Up_" + std::to_string(n);
    std::vector<UpRep> reps;
    for (const auto& t : centrals) {
        reps.push_back(heisenberg_extension(f, n, t, caps));
        c.summands.push_back({t, reps.back().dim});
        c.total_dim = checked_add(c.total_dim, reps.back().dim);
    }
    c.kernel_size = up_kernel(reps, caps);
    return c;
}

Certificate certify_upper_bound(const Presentation& pres, const FaithfulResult& fr) {
    if (pres.family().tag == FamilyTag::up_full && pres.family().size >= 3) {
        std::vector<Vec> centrals;
        for (const auto& w : fr.basis) centrals.push_back(w.central);
        return certify_up_from_centrals(pres.field(), pres.family().size, centrals, pres.caps());
    }
    Presentation view = pres.analysis_view();
    Certificate c;
    c.group = "G";
    std::vector<MonomialRep> reps;
    for (const auto& w : fr.basis) {
        reps.push_back(induce_monomial(view, w.character));
        c.summands.push_back({w.character, reps.back().dim});
        c.total_dim = checked_add(c.total_dim, reps.back().dim);
    }
    c.kernel_size = rep_kernel(view, reps);
    return c;
}

}  // namespace syl
