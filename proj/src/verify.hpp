#pragma once

// Cross-validation: closed form vs Wigner-Mackey search vs monomial oracle.

#include <optional>
#include <string>

#include "repox.hpp"

namespace syl {

enum class VerifyStatus { ok, mismatch, special, cap };
const char* verify_status_name(VerifyStatus s);

struct VerifyReport {
    FamilyParams family;
    EdResult formula;
    VerifyStatus status = VerifyStatus::ok;
    std::string detail;
    int center_rank = 0;
    std::optional<FaithfulResult> search;
    std::optional<Certificate> certificate;
    // Heisenberg family only: the extension construction on the ambient Up_n.
    std::optional<Certificate> ambient_certificate;
};

VerifyReport verify(const FamilyParams& fam, const Caps& caps, bool run_oracle = true);

}  // namespace syl
