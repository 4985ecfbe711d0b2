#ifndef SYLOWED_SYLOWED_H
#define SYLOWED_SYLOWED_H

/* C interface to the sylowed core: opaque handles, integer status codes,
 * JSON strings for structured results. Strings returned through char** are
 * owned by the caller and released with syl_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SYL_BUILDING_LIBRARY)
#define SYL_API __attribute__((visibility("default")))
#else
#define SYL_API
#endif

typedef enum syl_status {
    SYL_OK = 0,
    SYL_ERR_INVALID = 1,
    SYL_ERR_NOT_PRIME = 2,
    SYL_ERR_DEGREE = 3,
    SYL_ERR_EXCLUDED = 4,
    SYL_ERR_CAP = 5,
    SYL_ERR_DIMENSION = 6,
    SYL_ERR_SINGULAR = 7,
    SYL_ERR_NOT_IN_GROUP = 8,
    SYL_ERR_LEADING_ZERO = 9,
    SYL_ERR_MISMATCH = 10,
    SYL_ERR_OVERFLOW = 11,
    SYL_ERR_INTERNAL = 12,
    SYL_ERR_NULL = 13
} syl_status;

typedef enum syl_family {
    SYL_HEISENBERG = 0,
    SYL_UP_FULL = 1,
    SYL_SP = 2,
    SYL_ORTH_EVEN = 3,
    SYL_ORTH_ODD = 4,
    SYL_UNITARY_EVEN = 5,
    SYL_UNITARY_ODD = 6
} syl_family;

/* size is n for heisenberg, up_full and sp; m otherwise. */
typedef struct syl_family_params {
    int family;
    int p;
    int r;
    int size;
    int epsilon;
} syl_family_params;

typedef enum syl_ed_method {
    SYL_METHOD_CLOSED_FORM = 0,
    SYL_METHOD_WM_SEARCH = 1,
    SYL_METHOD_SPECIAL_KNOWN = 2
} syl_ed_method;

typedef struct syl_formula_result {
    uint64_t ed;
    int method;
} syl_formula_result;

typedef struct syl_presentation_info {
    int delta_dim;
    uint64_t delta_order;
    uint64_t l_order;
    uint64_t group_order;
    int center_rank;
    int special;
} syl_presentation_info;

typedef struct syl_context syl_context;
typedef struct syl_presentation syl_presentation;

SYL_API syl_context* syl_context_create(void);
SYL_API void syl_context_destroy(syl_context* ctx);
/* Zero leaves the corresponding cap unchanged. */
SYL_API syl_status syl_context_set_caps(syl_context* ctx, uint64_t group, uint64_t chars, uint64_t repdim);
SYL_API syl_status syl_context_set_workers(syl_context* ctx, unsigned workers);
SYL_API syl_status syl_context_set_seed(syl_context* ctx, uint64_t seed);
SYL_API uint64_t syl_context_seed(const syl_context* ctx);
/* Message of the last failing call on ctx; valid until the next call. */
SYL_API const char* syl_last_error(const syl_context* ctx);

SYL_API const char* syl_status_string(syl_status s);
SYL_API syl_status syl_family_from_name(const char* name, int* out);
SYL_API const char* syl_family_name(int family);
SYL_API void syl_string_free(char* s);

SYL_API syl_status syl_formula(syl_context* ctx, const syl_family_params* fam, syl_formula_result* out);
SYL_API syl_status syl_formula_json(syl_context* ctx, const syl_family_params* fam, char** out_json);

SYL_API syl_status syl_presentation_build(syl_context* ctx, const syl_family_params* fam, syl_presentation** out);
SYL_API void syl_presentation_destroy(syl_presentation* pres);
SYL_API syl_status syl_presentation_info_get(const syl_presentation* pres, syl_presentation_info* out);
SYL_API syl_status syl_presentation_json(syl_context* ctx, const syl_presentation* pres, char** out_json);

/* Formula, search and oracle. *agree is 1 on OK or SPECIAL. A mismatch returns
 * SYL_ERR_MISMATCH and a cap overrun SYL_ERR_CAP, both with the partial report. */
SYL_API syl_status syl_verify_json(syl_context* ctx, const syl_family_params* fam, int run_oracle, int* agree,
                                   char** out_json);

SYL_API syl_status syl_inspect_center_json(syl_context* ctx, const syl_presentation* pres, char** out_json);
SYL_API syl_status syl_inspect_orbits_json(syl_context* ctx, const syl_presentation* pres, char** out_json);
/* ch holds delta_dim exponents in [0, p). */
SYL_API syl_status syl_inspect_stabilizer_json(syl_context* ctx, const syl_presentation* pres, const uint32_t* ch,
                                               int len, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
