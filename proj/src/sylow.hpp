#pragma once

// p-Sylow subgroups of the classical groups as G = Delta x| L.
//
// Delta is an F_p vector space with a labelled coordinate chart, L a group of
// unitriangular matrices with a fixed pattern of free entries, and
//   (d1, l1)(d2, l2) = (d1 + M_{l1} d2, l1 l2)
// where M_l is the F_p matrix of the action of l on Delta.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ff.hpp"
#include "fpvec.hpp"
#include "matgrp.hpp"

namespace syl {

enum class FamilyTag { heisenberg, up_full, sp, orth_even, orth_odd, unitary_even, unitary_odd };

const char* family_name(FamilyTag t);
std::optional<FamilyTag> parse_family(const std::string& s);

// size is n for heisenberg / up_full / sp and m for the orthogonal and unitary families.
struct FamilyParams {
    FamilyTag tag = FamilyTag::sp;
    int p = 2;
    int r = 1;
    int size = 2;
    int epsilon = 1;  // accepted for orth_even, no effect on the Sylow
};

// Ambient matrix dimension (n of GL_n, 2n of Sp, 2m or 2m+1 otherwise).
int ambient_dim(const FamilyParams& f);
// Throws invalid_params / excluded_case; returns true for the Sp(4,2) special case.
bool validate_family(const FamilyParams& f);
bool is_special_case(const FamilyParams& f);

struct GroupElt {
    Vec delta;
    uint64_t l = 0;
    bool operator==(const GroupElt& o) const { return l == o.l && delta == o.delta; }
    bool operator<(const GroupElt& o) const { return l != o.l ? l < o.l : delta < o.delta; }
};

class Presentation {
public:
    static Presentation build(const FamilyParams& fam, const Caps& caps = {});

    // Copy of an abelian presentation with L folded into Delta, so that Z lies in Delta.
    // Only differs from *this for orth_even with m = 2.
    Presentation analysis_view() const;

    const FamilyParams& family() const { return fam_; }
    const Caps& caps() const { return caps_; }
    void set_caps(const Caps& c) { caps_ = c; }
    const Field& field() const { return f_; }
    bool over_ext() const { return ext_ != nullptr; }
    const QuadExt& ext() const { return *ext_; }
    uint32_t p() const { return uint32_t(fam_.p); }
    bool special() const { return special_; }
    bool abelianized() const { return abel_; }

    int delta_dim() const { return int(labels_.size()); }
    const std::vector<std::string>& coord_labels() const { return labels_; }
    uint64_t delta_order() const;
    uint64_t l_order() const { return l_order_; }
    uint64_t group_order() const;
    // Group order predicted by the family's Sylow order formula.
    uint64_t expected_group_order() const;

    int l_size() const { return l_size_; }
    const std::vector<std::pair<int, int>>& l_free() const { return l_free_; }
    uint64_t l_field_size() const;
    Mat l_matrix(uint64_t idx) const;
    uint64_t l_index(const Mat& a) const;
    uint64_t l_mul(uint64_t a, uint64_t b) const;
    uint64_t l_inv(uint64_t a) const;

    // F_p matrix of d -> l.d; cached for every l when |L| is within caps.group.
    FpMat action_matrix(uint64_t l) const;
    Vec act(uint64_t l, const Vec& d) const;
    // Direct evaluation through the family's matrix formula, bypassing the cache.
    Vec act_direct(uint64_t l, const Vec& d) const;

    GroupElt identity() const { return {Vec(delta_dim(), 0), 0}; }
    GroupElt mul(const GroupElt& g, const GroupElt& h) const;
    GroupElt inv(const GroupElt& g) const;
    GroupElt pow(const GroupElt& g, uint64_t e) const;
    GroupElt element(uint64_t idx) const;  // idx = l * |Delta| + delta index
    void check(const GroupElt& g) const;   // throws mismatch on foreign elements

    // Generators: Delta basis vectors and elementary matrices of L.
    std::vector<GroupElt> generators() const;

    Mat embed(const GroupElt& g) const;
    std::optional<FormSpec> form() const;
    // Membership of an embedded matrix in the family's ambient classical group.
    bool in_ambient_group(const Mat& m) const;
    // False for the odd orthogonal and unitary families, whose stated matrix
    // factorization does not land in the form group; see README.
    bool embedding_expected_valid() const;

    // Closed-form center. center_coords index Delta; center_includes_l means all of L is central too.
    int center_rank_closed() const;
    const std::vector<int>& center_coords() const { return center_; }
    bool center_includes_l() const { return center_l_; }
    bool in_closed_center(const GroupElt& g) const;

    // Structured access to a Delta vector for the families' matrix formulas.
    struct DeltaVal {
        std::vector<elem> x;  // vector block (heisenberg v+x, up_full c, odd families x)
        Mat b;                // matrix block, fully populated by its symmetry rule
    };
    DeltaVal decode(const Vec& d) const;
    Vec encode(const DeltaVal& v) const;

private:
    enum class SlotKind { base, ext_full, ext_diag };
    struct Slot {
        SlotKind kind;
        bool in_x;  // vector block or matrix block
        int i, j;
    };
    enum class Sym { none, symmetric, antisymmetric, antihermitian };

    void add_slot(SlotKind k, bool in_x, int i, int j, const std::string& name);
    int slot_width(SlotKind k) const;
    Vec act_formula(const Mat& a, const Vec& d) const;
    void ensure_cache() const;

    FamilyParams fam_;
    Caps caps_;
    Field f_;
    std::shared_ptr<const QuadExt> ext_;
    bool special_ = false;
    bool abel_ = false;
    int abel_extra_ = 0;  // trailing Delta coords that encode the folded L entries
    std::vector<std::pair<int, int>> abel_free_;

    std::vector<Slot> slots_;
    std::vector<std::string> labels_;
    int xlen_ = 0, bdim_ = 0;
    Sym sym_ = Sym::none;

    int l_size_ = 0;
    std::vector<std::pair<int, int>> l_free_;
    uint64_t l_order_ = 1;

    std::vector<int> center_;
    bool center_l_ = false;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Center by commutation with a generating set, then verified against every element.
std::vector<GroupElt> center_bruteforce(const Presentation& pres);
// Elements of the subgroup spanned by the closed-form center coordinates.
std::vector<GroupElt> center_closed_form_elements(const Presentation& pres);

struct SocleReport {
    std::vector<int> coords;
    bool elementary_abelian = false;  // every central element has order dividing p
};
SocleReport socle(const Presentation& pres);

}  // namespace syl
