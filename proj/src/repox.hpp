#pragma once

// Induced monomial representations over p-th roots of unity, stored as exponents.

#include <cstdint>
#include <string>
#include <vector>

#include "wm.hpp"

namespace syl {

// Column j of the image is zeta^{expo[j]} e_{perm[j]}.
struct MonoMat {
    std::vector<uint32_t> perm;
    std::vector<uint32_t> expo;
    bool is_identity() const;
    bool operator==(const MonoMat& o) const { return perm == o.perm && expo == o.expo; }
};

// a * b
MonoMat compose(const MonoMat& a, const MonoMat& b, uint32_t p);

// Ind_{Delta L_s}^{G} psi_s with coset representatives the smallest L index per coset.
struct MonomialRep {
    uint32_t p = 0;
    Vec s;
    uint64_t dim = 0;
    uint64_t stab = 0;
    std::vector<uint64_t> reps;      // coset representatives l_j
    std::vector<uint32_t> coset_of;  // L index -> coset
    std::vector<Vec> twisted;        // (M_{l_j^{-1}})^T s
};

MonomialRep induce_monomial(const Presentation& pres, const Vec& s);
MonoMat evaluate(const Presentation& pres, const MonomialRep& rep, const GroupElt& g);

// Number of group elements acting trivially in every summand, by enumeration of G.
uint64_t rep_kernel(const Presentation& pres, const std::vector<MonomialRep>& reps);

// Representation of Up_n(F_{p^r}) induced from the extension of psi(<s_x, g_{1n}>) to
// the subgroup of Up_n with zero last column below the first row.
struct UpRep {
    Field field;
    int n = 0;
    Vec s_x;  // r coordinates, paired with the digits of entry (1, n)
    uint64_t dim = 0;
};

UpRep heisenberg_extension(const Field& f, int n, const Vec& s_x, const Caps& caps = {});
MonoMat evaluate(const UpRep& rep, const Mat& g);
uint64_t up_kernel(const std::vector<UpRep>& reps, const Caps& caps);

struct CertSummand {
    Vec character;
    uint64_t dim = 0;
};

struct Certificate {
    std::string group;  // "G" or "Up_n"
    std::vector<CertSummand> summands;
    uint64_t total_dim = 0;
    uint64_t kernel_size = 0;
    bool faithful() const { return kernel_size == 1; }
};

// Faithful direct sum for a witness basis; up_full (n >= 3) uses heisenberg_extension on Up_n.
Certificate certify_upper_bound(const Presentation& pres, const FaithfulResult& fr);
// Up_n certificate from central characters of H_n or Up_n (entry (1, n) coordinates).
Certificate certify_up_from_centrals(const Field& f, int n, const std::vector<Vec>& centrals, const Caps& caps);

}  // namespace syl
