#pragma once

// Minimal dimensions per central character and minimal faithful dimension.

#include <string>
#include <vector>

#include "chars.hpp"

namespace syl {

// d(t) for every central character t (indexed by fp_encode(t)), from one orbit scan.
struct CentralDims {
    int rank = 0;
    uint32_t p = 0;
    std::vector<uint64_t> dim;        // d(t); d(0) = 1
    std::vector<Vec> witness;         // a character realising d(t)
    std::vector<uint64_t> stab;       // its stabilizer order
};
CentralDims central_dims(const Presentation& pres);

uint64_t min_irrep_dim_for_central_char(const Presentation& pres, const Vec& t);

struct FaithfulWitness {
    Vec central;
    Vec character;
    uint64_t stab = 0;
    uint64_t dim = 0;
};

struct FaithfulResult {
    uint64_t dim = 0;
    std::vector<FaithfulWitness> basis;
    std::string strategy;  // "exhaustive" or "greedy"
    bool certified = false;  // exhaustive search, or greedy with a passing exchange certificate
};

FaithfulResult min_faithful_dim(const Presentation& pres);
// Same optimisation over an explicit d-table; exposed for tests.
FaithfulResult min_basis_from_table(const CentralDims& cd, bool force_greedy = false);

enum class EdMethod { closed_form, wm_search, special_known };
const char* ed_method_name(EdMethod m);

struct EdResult {
    FamilyParams family;
    uint64_t ed = 0;
    EdMethod method = EdMethod::closed_form;
};

EdResult ed_formula(const FamilyParams& fam);

}  // namespace syl
