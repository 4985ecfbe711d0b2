#include "fpvec.hpp"

namespace syl {

uint32_t fp_inv(uint32_t a, uint32_t p) {
    require(a % p != 0, Errc::singular, "inverse of zero in F_p");
    int64_t t = 0, nt = 1, rr = p, nr = a % p;
    while (nr) {
        int64_t q = rr / nr;
        t -= q * nt;
        std::swap(t, nt);
        rr -= q * nr;
        std::swap(rr, nr);
    }
    return uint32_t((t % int64_t(p) + p) % p);
}

int fp_rank(std::vector<Vec> rows, uint32_t p) {
    if (rows.empty()) return 0;
    int cols = int(rows[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < int(rows.size()); ++c) {
        int piv = -1;
        for (int i = rk; i < int(rows.size()); ++i)
            if (rows[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rk]);
        uint32_t s = fp_inv(rows[rk][c], p);
        for (int i = rk + 1; i < int(rows.size()); ++i) {
            if (!rows[i][c]) continue;
            uint64_t f = uint64_t(rows[i][c]) * s % p;
            for (int j = c; j < cols; ++j) rows[i][j] = uint32_t((rows[i][j] + (p - f) * rows[rk][j]) % p);
        }
        ++rk;
    }
    return rk;
}

std::vector<uint32_t> fp_solve_in_span(const std::vector<Vec>& basis, const Vec& v, uint32_t p) {
    // Augmented system: columns are basis vectors, right-hand side v.
    int k = int(basis.size());
    int d = int(v.size());
    std::vector<std::vector<uint32_t>> a(d, std::vector<uint32_t>(k + 1, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = basis[j][i];
        a[i][k] = v[i];
    }
    std::vector<int> pivcol;
    int rk = 0;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int i = rk; i < d; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rk]);
        uint32_t s = fp_inv(a[rk][c], p);
        for (auto& x : a[rk]) x = uint32_t(uint64_t(x) * s % p);
        for (int i = 0; i < d; ++i) {
            if (i == rk || !a[i][c]) continue;
            uint64_t f = a[i][c];
            for (int j = 0; j <= k; ++j) a[i][j] = uint32_t((a[i][j] + (p - f) * a[rk][j]) % p);
        }
        pivcol.push_back(c);
        ++rk;
    }
    for (int i = rk; i < d; ++i)
        if (a[i][k]) return {};
    std::vector<uint32_t> coef(k, 0);
    for (int i = 0; i < rk; ++i) coef[pivcol[i]] = a[i][k];
    return coef;
}

}  // namespace syl
