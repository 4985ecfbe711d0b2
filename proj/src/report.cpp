#include "report.hpp"

#include <algorithm>

namespace syl {

json field_json(const Field& f, bool with_ext) {
    json j;
    j["p"] = f.p();
    j["r"] = f.r();
    j["modulus"] = f.modulus();  // coefficient of x^i at index i
    auto qe = find_quadext_eta(f);
    j["eta"] = f.coeffs(qe.eta);
    j["eta_kind"] = qe.kind == AlphaKind::odd_sqrt ? "first_nonsquare" : "first_trace_one";
    if (with_ext) {
        QuadExt k = QuadExt::make(f);
        j["alpha_kind"] = k.kind() == AlphaKind::odd_sqrt ? "odd_sqrt" : "char2_artin_schreier";
        j["alpha_relation"] = k.kind() == AlphaKind::odd_sqrt ? "alpha^2 + eta' = 0" : "alpha^2 + alpha + eta = 0";
        j["eta_prime"] = f.coeffs(k.eta_prime());
    }
    return j;
}

json family_json(const FamilyParams& fam) {
    json j;
    j["family"] = family_name(fam.tag);
    j["p"] = fam.p;
    j["r"] = fam.r;
    bool uses_n = fam.tag == FamilyTag::heisenberg || fam.tag == FamilyTag::up_full || fam.tag == FamilyTag::sp;
    j[uses_n ? "n" : "m"] = fam.size;
    j["ambient_dim"] = ambient_dim(fam);
    if (fam.tag == FamilyTag::orth_even) j["epsilon"] = fam.epsilon;
    return j;
}

json presentation_json(const Presentation& pres) {
    json j = family_json(pres.family());
    j["field"] = field_json(pres.field(), pres.over_ext());
    j["delta_dim"] = pres.delta_dim();
    j["delta_coords"] = pres.coord_labels();
    j["l_order"] = pres.l_order();
    j["group_order"] = pres.group_order();
    j["expected_group_order"] = pres.expected_group_order();
    j["special"] = pres.special();
    std::vector<std::string> cl;
    for (int c : pres.center_coords()) cl.push_back(pres.coord_labels()[c]);
    j["center_coords"] = pres.center_coords();
    j["center_labels"] = cl;
    j["center_includes_L"] = pres.center_includes_l();
    j["center_rank"] = pres.center_rank_closed();
    return j;
}

json ed_json(const EdResult& e) {
    json j = family_json(e.family);
    j["ed"] = e.ed;
    j["method"] = ed_method_name(e.method);
    return j;
}

json certificate_json(const Certificate& c) {
    json j;
    j["group"] = c.group;
    json s = json::array();
    for (const auto& x : c.summands) s.push_back({{"char", x.character}, {"dim", x.dim}});
    j["summands"] = s;
    j["total_dim"] = c.total_dim;
    j["kernel_size"] = c.kernel_size;
    j["faithful"] = c.faithful();
    return j;
}

json verify_json(const VerifyReport& v) {
    json j = ed_json(v.formula);
    j["status"] = verify_status_name(v.status);
    if (!v.detail.empty()) j["detail"] = v.detail;
    j["field"] = field_json(Field::make(v.family.p, v.family.r),
                            v.family.tag == FamilyTag::unitary_even || v.family.tag == FamilyTag::unitary_odd);
    if (v.status == VerifyStatus::special) {
        j["search"] = nullptr;
        return j;
    }
    j["center_rank"] = v.center_rank;
    if (v.search) {
        json w = json::array();
        for (const auto& b : v.search->basis)
            w.push_back({{"central", b.central}, {"char", b.character}, {"stab", b.stab}, {"dim", b.dim}});
        j["search"] = {{"ed", v.search->dim},
                       {"strategy", v.search->strategy},
                       {"certified", v.search->certified},
                       {"witness", w}};
    }
    if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
    if (v.ambient_certificate) j["ambient_certificate"] = certificate_json(*v.ambient_certificate);
    return j;
}

json center_json(const Presentation& pres) {
    json j = presentation_json(pres);
    auto brute = center_bruteforce(pres);
    auto closed = center_closed_form_elements(pres);
    uint64_t order = brute.size();
    int rank = 0;
    for (uint64_t o = order; o > 1; o /= pres.p()) ++rank;
    j["bruteforce_order"] = order;
    j["bruteforce_rank"] = rank;
    j["closed_form_order"] = closed.size();
    j["equal"] = brute == closed;
    j["socle_elementary_abelian"] = socle(pres).elementary_abelian;
    return j;
}

json orbits_json(const Presentation& pres) {
    json j = family_json(pres.family());
    j["field"] = field_json(pres.field(), pres.over_ext());
    json rows = json::array();
    uint64_t total = 0;
    for (const auto& o : orbit_decomposition(pres)) {
        rows.push_back({{"rep", o.rep}, {"orbit_size", o.orbit_size}, {"stab_size", o.stab_size}, {"central", o.central}});
        total += o.orbit_size;
    }
    j["orbits"] = rows;
    j["orbit_count"] = rows.size();
    j["sum_orbit_sizes"] = total;
    j["char_group_order"] = pres.delta_order();
    j["l_order"] = pres.l_order();
    return j;
}

json stabilizer_json(const Presentation& pres, const Vec& b) {
    json j = family_json(pres.family());
    auto st = stabilizer_bruteforce(pres, b);
    j["char"] = b;
    j["central"] = restrict_to_center(pres, b);
    j["size"] = st.size;
    j["orbit_size"] = pres.l_order() / st.size;
    auto cf = stabilizer_closed_form(pres, b);
    if (cf) j["closed_form"] = *cf;
    else j["closed_form"] = "NOT_COVERED";
    std::vector<uint64_t> first(st.members.begin(), st.members.begin() + std::min<size_t>(st.members.size(), 64));
    j["members"] = first;
    return j;
}

}  // namespace syl
