#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syl {

enum class Errc {
    invalid_params = 1,
    not_prime,
    degree_too_large,
    excluded_case,
    cap_exceeded,
    dimension_mismatch,
    singular,
    not_in_group,
    leading_coeff_zero,
    mismatch,
    overflow,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

// Resource limits shared by every enumeration path.
struct Caps {
    uint64_t group = uint64_t(1) << 20;  // |G| and |L| enumeration
    uint64_t chars = uint64_t(1) << 20;  // |Delta^| scans
    uint64_t repdim = 4096;              // induced representation dimension
    unsigned workers = 1;
};

// Checked integer power; throws Errc::overflow past 2^63.
uint64_t ipow(uint64_t base, uint64_t exp);
uint64_t checked_mul(uint64_t a, uint64_t b);
uint64_t checked_add(uint64_t a, uint64_t b);

}  // namespace syl
