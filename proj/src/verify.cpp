#include "verify.hpp"

namespace syl {

const char* verify_status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::ok: return "OK";
        case VerifyStatus::mismatch: return "MISMATCH";
        case VerifyStatus::special: return "SPECIAL";
        case VerifyStatus::cap: return "CAP_EXCEEDED";
    }
    return "?";
}

VerifyReport verify(const FamilyParams& fam, const Caps& caps, bool run_oracle) {
    VerifyReport rep;
    rep.family = fam;
    rep.formula = ed_formula(fam);
    if (rep.formula.method == EdMethod::special_known) {
        rep.status = VerifyStatus::special;
        rep.detail = "known value for the exceptional isomorphism with A_6; no search claim";
        return rep;
    }
    try {
        Presentation pres = Presentation::build(fam, caps);
        rep.center_rank = pres.analysis_view().center_rank_closed();
        rep.search = min_faithful_dim(pres);
        std::string why;
        if (!rep.search->certified) why += "basis minimisation not certified; ";
        if (rep.search->dim != rep.formula.ed)
            why += "search " + std::to_string(rep.search->dim) + " != formula " + std::to_string(rep.formula.ed) + "; ";
        if (rep.search->dim < uint64_t(rep.center_rank)) why += "search below the center rank; ";
        if (run_oracle) {
            rep.certificate = certify_upper_bound(pres, *rep.search);
            if (!rep.certificate->faithful())
                why += "oracle kernel has " + std::to_string(rep.certificate->kernel_size) + " elements; ";
            if (rep.certificate->total_dim != rep.search->dim) why += "oracle dimension differs from search; ";
            if (fam.tag == FamilyTag::heisenberg) {
                std::vector<Vec> centrals;
                for (const auto& w : rep.search->basis) centrals.push_back(w.central);
                rep.ambient_certificate = certify_up_from_centrals(pres.field(), fam.size, centrals, caps);
                if (!rep.ambient_certificate->faithful()) why += "Up_n extension is not faithful; ";
                if (rep.ambient_certificate->total_dim != rep.formula.ed) why += "Up_n extension dimension differs; ";
            }
        }
        if (!why.empty()) {
            rep.status = VerifyStatus::mismatch;
            rep.detail = why.substr(0, why.size() - 2);
        }
    } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
        rep.status = VerifyStatus::cap;
        rep.detail = e.what();
    }
    return rep;
}

}  // namespace syl
