#pragma once

// Characters of Delta as F_p exponent vectors: psi_b(d) = zeta^{<b, d>}.

#include <optional>
#include <vector>

#include "sylow.hpp"

namespace syl {

uint32_t char_eval(const Presentation& pres, const Vec& b, const Vec& d);

// Projection onto the closed-form center coordinates.
Vec restrict_to_center(const Presentation& pres, const Vec& b);

// b' with <b', d> = <b, l^{-1}.d>, i.e. b' = (M_{l^{-1}})^T b.
Vec l_act_on_char(const Presentation& pres, uint64_t l, const Vec& b);

// l fixes psi_b iff M_l^T b = b.
bool fixes_char(const Presentation& pres, uint64_t l, const Vec& b);

struct Stabilizer {
    uint64_t size = 0;
    std::vector<uint64_t> members;  // L indices, ascending
};
Stabilizer stabilizer_bruteforce(const Presentation& pres, const Vec& b);

// |L_b| from the closed-form shapes, or nullopt when b is not one of them.
std::optional<uint64_t> stabilizer_closed_form(const Presentation& pres, const Vec& b);

// Largest |L_b| over characters with nontrivial central restriction, in closed form.
uint64_t max_stabilizer_closed_form(const Presentation& pres);

struct Orbit {
    Vec rep;  // lexicographically smallest member
    uint64_t orbit_size = 0;
    uint64_t stab_size = 0;
    Vec central;
};
std::vector<Orbit> orbit_decomposition(const Presentation& pres);

}  // namespace syl
