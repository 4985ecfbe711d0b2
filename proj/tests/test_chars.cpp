#include <doctest.h>

#include <map>
#include <set>

#include "chars.hpp"

using namespace syl;

namespace {

struct Inst {
    FamilyTag tag;
    int p, r, size;
};

const std::vector<Inst> kInst = {
    {FamilyTag::heisenberg, 2, 1, 3},   {FamilyTag::heisenberg, 3, 1, 4},   {FamilyTag::up_full, 2, 1, 4},
    {FamilyTag::up_full, 3, 1, 4},      {FamilyTag::up_full, 2, 1, 5},      {FamilyTag::sp, 3, 1, 2},
    {FamilyTag::sp, 2, 2, 2},           {FamilyTag::sp, 2, 1, 3},           {FamilyTag::sp, 3, 1, 3},
    {FamilyTag::sp, 2, 1, 4},           {FamilyTag::sp, 2, 2, 3},           {FamilyTag::orth_even, 3, 1, 2},    {FamilyTag::orth_even, 2, 1, 2},
    {FamilyTag::orth_even, 3, 1, 3},    {FamilyTag::orth_even, 2, 1, 3},    {FamilyTag::orth_even, 2, 1, 4},
    {FamilyTag::orth_odd, 3, 1, 2},     {FamilyTag::orth_odd, 3, 1, 3},     {FamilyTag::unitary_even, 2, 1, 1},
    {FamilyTag::unitary_odd, 2, 1, 1},  {FamilyTag::unitary_even, 2, 1, 2}, {FamilyTag::unitary_odd, 2, 1, 2},
    {FamilyTag::unitary_even, 3, 1, 2}, {FamilyTag::unitary_even, 2, 1, 3},
};

std::string label(const Inst& i) {
    return std::string(family_name(i.tag)) + " p=" + std::to_string(i.p) + " r=" + std::to_string(i.r) +
           " size=" + std::to_string(i.size);
}

// Stabilizer straight from the definition: psi_b(l.d) = psi_b(d) for every d in Delta.
uint64_t stabilizer_by_definition(const Presentation& pres, const Vec& b) {
    uint64_t count = 0;
    for (uint64_t l = 0; l < pres.l_order(); ++l) {
        bool fixes = true;
        for (uint64_t di = 0; di < pres.delta_order() && fixes; ++di) {
            Vec d = fp_decode(di, pres.delta_dim(), pres.p());
            fixes = char_eval(pres, b, pres.act_direct(l, d)) == char_eval(pres, b, d);
        }
        count += fixes;
    }
    return count;
}

}  // namespace

TEST_CASE("character evaluation is a homomorphism in both arguments") {
    Presentation pres = Presentation::build({FamilyTag::sp, 3, 1, 2, 1});
    uint32_t p = pres.p();
    for (uint64_t bi = 0; bi < pres.delta_order(); bi += 5)
        for (uint64_t di = 0; di < pres.delta_order(); di += 3) {
            Vec b = fp_decode(bi, pres.delta_dim(), p), d = fp_decode(di, pres.delta_dim(), p);
            Vec e = fp_decode((di * 7 + 1) % pres.delta_order(), pres.delta_dim(), p);
            CHECK(char_eval(pres, b, fp_add(d, e, p)) == (char_eval(pres, b, d) + char_eval(pres, b, e)) % p);
        }
}

TEST_CASE("action on characters is contragredient") {
    for (const auto& i : kInst) {
        CAPTURE(label(i));
        Presentation pres = Presentation::build({i.tag, i.p, i.r, i.size, 1});
        if (pres.delta_order() > 4096) continue;
        uint32_t p = pres.p();
        for (uint64_t l = 0; l < pres.l_order(); l += 1 + pres.l_order() / 16)
            for (uint64_t bi = 0; bi < pres.delta_order(); bi += 1 + pres.delta_order() / 32) {
                Vec b = fp_decode(bi, pres.delta_dim(), p);
                Vec bl = l_act_on_char(pres, l, b);
                for (uint64_t di = 0; di < pres.delta_order(); di += 1 + pres.delta_order() / 32) {
                    Vec d = fp_decode(di, pres.delta_dim(), p);
                    CHECK(char_eval(pres, bl, pres.act(l, d)) == char_eval(pres, b, d));
                }
                CHECK(fixes_char(pres, l, b) == (bl == b));
            }
    }
}

TEST_CASE("stabilizers agree with the definition") {
    for (const auto& i : kInst) {
        CAPTURE(label(i));
        Presentation pres = Presentation::build({i.tag, i.p, i.r, i.size, 1});
        if (pres.delta_order() * pres.l_order() > 20000) continue;
        for (uint64_t bi = 0; bi < pres.delta_order(); bi += 1 + pres.delta_order() / 40) {
            Vec b = fp_decode(bi, pres.delta_dim(), pres.p());
            auto st = stabilizer_bruteforce(pres, b);
            CHECK(st.size == st.members.size());
            CHECK(st.size == stabilizer_by_definition(pres, b));
        }
    }
}

TEST_CASE("stabilizer is a subgroup") {
    Presentation pres = Presentation::build({FamilyTag::sp, 2, 1, 3, 1});
    for (uint64_t bi = 1; bi < pres.delta_order(); bi += 3) {
        auto st = stabilizer_bruteforce(pres, fp_decode(bi, pres.delta_dim(), 2));
        std::set<uint64_t> s(st.members.begin(), st.members.end());
        CHECK(s.count(0) == 1);
        for (auto a : st.members)
            for (auto b : st.members) CHECK(s.count(pres.l_mul(a, pres.l_inv(b))) == 1);
    }
}

TEST_CASE("closed-form stabilizers and the global maximum match a full scan") {
    for (const auto& i : kInst) {
        CAPTURE(label(i));
        Presentation pres = Presentation::build({i.tag, i.p, i.r, i.size, 1});
        uint64_t covered = 0, brute_max = 0;
        for (uint64_t bi = 0; bi < pres.delta_order(); ++bi) {
            Vec b = fp_decode(bi, pres.delta_dim(), pres.p());
            auto st = stabilizer_bruteforce(pres, b);
            if (auto cf = stabilizer_closed_form(pres, b)) {
                ++covered;
                CAPTURE(bi);
                CHECK(*cf == st.size);
            }
            if (!fp_is_zero(restrict_to_center(pres, b))) brute_max = std::max(brute_max, st.size);
        }
        CHECK(covered > 1);
        CHECK(brute_max == max_stabilizer_closed_form(pres));
    }
}

TEST_CASE("orbit decomposition partitions the character group") {
    for (const auto& i : kInst) {
        CAPTURE(label(i));
        Presentation pres = Presentation::build({i.tag, i.p, i.r, i.size, 1});
        auto orbits = orbit_decomposition(pres);
        uint64_t total = 0;
        std::set<Vec> reps;
        for (const auto& o : orbits) {
            total += o.orbit_size;
            CHECK(o.orbit_size * o.stab_size == pres.l_order());
            CHECK(o.stab_size == stabilizer_bruteforce(pres, o.rep).size);
            CHECK(o.central == restrict_to_center(pres, o.rep));
            reps.insert(o.rep);
            // rep is the smallest member of its orbit, and the central restriction is constant on it
            for (uint64_t l = 0; l < pres.l_order(); l += 1 + pres.l_order() / 8) {
                Vec x = l_act_on_char(pres, l, o.rep);
                CHECK(fp_encode(o.rep, pres.p()) <= fp_encode(x, pres.p()));
                CHECK(restrict_to_center(pres, x) == o.central);
            }
        }
        CHECK(total == pres.delta_order());
        CHECK(reps.size() == orbits.size());
    }
}
