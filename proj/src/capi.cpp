#include "sylowed/sylowed.h"

#include <cstring>
#include <new>
#include <string>

#include "report.hpp"

struct syl_context {
    syl::Caps caps;
    uint64_t seed = 0;
    std::string last_error;
};

struct syl_presentation {
    syl::Presentation pres;
};

namespace {

syl_status from_errc(syl::Errc c) {
    switch (c) {
        case syl::Errc::invalid_params: return SYL_ERR_INVALID;
        case syl::Errc::not_prime: return SYL_ERR_NOT_PRIME;
        case syl::Errc::degree_too_large: return SYL_ERR_DEGREE;
        case syl::Errc::excluded_case: return SYL_ERR_EXCLUDED;
        case syl::Errc::cap_exceeded: return SYL_ERR_CAP;
        case syl::Errc::dimension_mismatch: return SYL_ERR_DIMENSION;
        case syl::Errc::singular: return SYL_ERR_SINGULAR;
        case syl::Errc::not_in_group: return SYL_ERR_NOT_IN_GROUP;
        case syl::Errc::leading_coeff_zero: return SYL_ERR_LEADING_ZERO;
        case syl::Errc::mismatch: return SYL_ERR_MISMATCH;
        case syl::Errc::overflow: return SYL_ERR_OVERFLOW;
        case syl::Errc::internal: return SYL_ERR_INTERNAL;
    }
    return SYL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, mapping exceptions to status codes and recording the message on ctx.
template <class Fn>
syl_status guarded(syl_context* ctx, Fn&& fn) {
    if (!ctx) return SYL_ERR_NULL;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const syl::Error& e) {
        ctx->last_error = e.what();
        return from_errc(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return SYL_ERR_CAP;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SYL_ERR_INTERNAL;
    }
}

syl::FamilyParams to_params(const syl_family_params* f) {
    syl::require(f->family >= SYL_HEISENBERG && f->family <= SYL_UNITARY_ODD, syl::Errc::invalid_params,
                 "unknown family tag " + std::to_string(f->family));
    return {static_cast<syl::FamilyTag>(f->family), f->p, f->r, f->size, f->epsilon};
}

syl_status emit(syl_context* ctx, const syl::json& j, char** out) {
    *out = dup_string(j.dump(2));
    if (!*out) {
        ctx->last_error = "out of memory";
        return SYL_ERR_CAP;
    }
    return SYL_OK;
}

}  // namespace

extern "C" {

syl_context* syl_context_create(void) { return new (std::nothrow) syl_context(); }

void syl_context_destroy(syl_context* ctx) { delete ctx; }

syl_status syl_context_set_caps(syl_context* ctx, uint64_t group, uint64_t chars, uint64_t repdim) {
    if (!ctx) return SYL_ERR_NULL;
    if (group) ctx->caps.group = group;
    if (chars) ctx->caps.chars = chars;
    if (repdim) ctx->caps.repdim = repdim;
    return SYL_OK;
}

syl_status syl_context_set_workers(syl_context* ctx, unsigned workers) {
    if (!ctx) return SYL_ERR_NULL;
    if (workers == 0) {
        ctx->last_error = "workers must be positive";
        return SYL_ERR_INVALID;
    }
    ctx->caps.workers = workers;
    return SYL_OK;
}

syl_status syl_context_set_seed(syl_context* ctx, uint64_t seed) {
    if (!ctx) return SYL_ERR_NULL;
    ctx->seed = seed;
    return SYL_OK;
}

uint64_t syl_context_seed(const syl_context* ctx) { return ctx ? ctx->seed : 0; }

const char* syl_last_error(const syl_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* syl_status_string(syl_status s) {
    switch (s) {
        case SYL_OK: return "OK";
        case SYL_ERR_NULL: return "NullArgument";
        default: break;
    }
    if (s >= SYL_ERR_INVALID && s <= SYL_ERR_INTERNAL) return syl::errc_name(static_cast<syl::Errc>(s));
    return "Unknown";
}

syl_status syl_family_from_name(const char* name, int* out) {
    if (!name || !out) return SYL_ERR_NULL;
    auto t = syl::parse_family(name);
    if (!t) return SYL_ERR_INVALID;
    *out = static_cast<int>(*t);
    return SYL_OK;
}

const char* syl_family_name(int family) {
    if (family < SYL_HEISENBERG || family > SYL_UNITARY_ODD) return "unknown";
    return syl::family_name(static_cast<syl::FamilyTag>(family));
}

void syl_string_free(char* s) { std::free(s); }

syl_status syl_formula(syl_context* ctx, const syl_family_params* fam, syl_formula_result* out) {
    return guarded(ctx, [&] {
        if (!fam || !out) return SYL_ERR_NULL;
        auto e = syl::ed_formula(to_params(fam));
        out->ed = e.ed;
        out->method = static_cast<int>(e.method);
        return SYL_OK;
    });
}

syl_status syl_formula_json(syl_context* ctx, const syl_family_params* fam, char** out_json) {
    return guarded(ctx, [&] {
        if (!fam || !out_json) return SYL_ERR_NULL;
        auto p = to_params(fam);
        syl::json j = syl::ed_json(syl::ed_formula(p));
        bool ext = p.tag == syl::FamilyTag::unitary_even || p.tag == syl::FamilyTag::unitary_odd;
        j["field"] = syl::field_json(syl::Field::make(p.p, p.r), ext);
        return emit(ctx, j, out_json);
    });
}

syl_status syl_presentation_build(syl_context* ctx, const syl_family_params* fam, syl_presentation** out) {
    return guarded(ctx, [&] {
        if (!fam || !out) return SYL_ERR_NULL;
        *out = nullptr;
        *out = new syl_presentation{syl::Presentation::build(to_params(fam), ctx->caps)};
        return SYL_OK;
    });
}

void syl_presentation_destroy(syl_presentation* pres) { delete pres; }

syl_status syl_presentation_info_get(const syl_presentation* pres, syl_presentation_info* out) {
    if (!pres || !out) return SYL_ERR_NULL;
    const auto& p = pres->pres;
    out->delta_dim = p.delta_dim();
    out->delta_order = p.delta_order();
    out->l_order = p.l_order();
    out->group_order = p.group_order();
    out->center_rank = p.center_rank_closed();
    out->special = p.special() ? 1 : 0;
    return SYL_OK;
}

syl_status syl_presentation_json(syl_context* ctx, const syl_presentation* pres, char** out_json) {
    return guarded(ctx, [&] {
        if (!pres || !out_json) return SYL_ERR_NULL;
        return emit(ctx, syl::presentation_json(pres->pres), out_json);
    });
}

syl_status syl_verify_json(syl_context* ctx, const syl_family_params* fam, int run_oracle, int* agree,
                           char** out_json) {
    return guarded(ctx, [&] {
        if (!fam || !agree || !out_json) return SYL_ERR_NULL;
        auto rep = syl::verify(to_params(fam), ctx->caps, run_oracle != 0);
        syl::json j = syl::verify_json(rep);
        j["seed"] = ctx->seed;
        *agree = rep.status == syl::VerifyStatus::ok || rep.status == syl::VerifyStatus::special;
        syl_status s = emit(ctx, j, out_json);
        if (s != SYL_OK) return s;
        if (rep.status == syl::VerifyStatus::mismatch || rep.status == syl::VerifyStatus::cap) {
            ctx->last_error = rep.detail;
            return rep.status == syl::VerifyStatus::cap ? SYL_ERR_CAP : SYL_ERR_MISMATCH;
        }
        return SYL_OK;
    });
}

syl_status syl_inspect_center_json(syl_context* ctx, const syl_presentation* pres, char** out_json) {
    return guarded(ctx, [&] {
        if (!pres || !out_json) return SYL_ERR_NULL;
        syl::Presentation p = pres->pres;
        p.set_caps(ctx->caps);
        return emit(ctx, syl::center_json(p), out_json);
    });
}

syl_status syl_inspect_orbits_json(syl_context* ctx, const syl_presentation* pres, char** out_json) {
    return guarded(ctx, [&] {
        if (!pres || !out_json) return SYL_ERR_NULL;
        syl::Presentation p = pres->pres;
        p.set_caps(ctx->caps);
        return emit(ctx, syl::orbits_json(p), out_json);
    });
}

syl_status syl_inspect_stabilizer_json(syl_context* ctx, const syl_presentation* pres, const uint32_t* ch,
                                       int len, char** out_json) {
    return guarded(ctx, [&] {
        if (!pres || !ch || !out_json) return SYL_ERR_NULL;
        syl::Presentation p = pres->pres;
        p.set_caps(ctx->caps);
        syl::require(len == p.delta_dim(), syl::Errc::dimension_mismatch,
                     "character has " + std::to_string(len) + " entries, Delta has dimension " +
                         std::to_string(p.delta_dim()));
        syl::Vec b(ch, ch + len);
        for (uint32_t v : b)
            syl::require(v < p.p(), syl::Errc::invalid_params, "character entries must lie in [0, p)");
        return emit(ctx, syl::stabilizer_json(p, b), out_json);
    });
}

}  // extern "C"
