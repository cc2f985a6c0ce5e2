/*
 * C interface to libspaceform: self-map monoids of spherical space forms.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an sf_status; on failure a message for the
 * calling thread is available from sf_last_error(). Mapping degrees cross the
 * boundary as decimal strings because they are unbounded. Strings returned
 * through `char** out` are heap-allocated and must be released with
 * sf_string_free().
 */
#ifndef SPACEFORM_SPACEFORM_H
#define SPACEFORM_SPACEFORM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPACEFORM_BUILDING)
#    define SF_API __declspec(dllexport)
#  else
#    define SF_API __declspec(dllimport)
#  endif
#else
#  define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_INVALID_ORDER = 1,
  SF_ERR_STRUCTURE = 2,
  SF_ERR_NOT_A_GROUP = 3,
  SF_ERR_SIZE = 4,
  SF_ERR_DOMAIN = 5,
  SF_ERR_INCOMPLETE_TABLE = 6,
  SF_ERR_NOT_A_HOMOMORPHISM = 7,
  SF_ERR_INVALID_TABLE = 8,
  SF_ERR_UNSUPPORTED_GROUP = 9,
  SF_ERR_NOT_REALIZABLE = 10,
  SF_ERR_INVALID_DIMENSION = 11,
  SF_ERR_PARSE = 12,
  SF_ERR_IO = 13,
  SF_ERR_INVALID_ARGUMENT = 14,
  SF_ERR_INTERNAL = 15
} sf_status;

typedef enum sf_format { SF_FORMAT_JSON = 0, SF_FORMAT_CSV = 1, SF_FORMAT_MD = 2 } sf_format;

typedef struct sf_group sf_group;
typedef struct sf_context sf_context;

/* Diagnostics */
SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
/* 0 for SF_OK, 1 input error, 2 validation failure, 3 internal breach. */
SF_API int sf_status_exit_code(sf_status status);
SF_API void sf_string_free(char* s);

/* Process-wide cap on |G| (default 128) applied by every constructor. */
SF_API void sf_set_max_order(uint32_t max_order);
SF_API uint32_t sf_max_order(void);

/* Groups */
SF_API sf_status sf_group_cyclic(uint32_t m, sf_group** out);
SF_API sf_status sf_group_quaternion(uint32_t order, sf_group** out);
/* Row-major order x order table. */
SF_API sf_status sf_group_from_table(const int64_t* table, uint32_t order, sf_group** out);
/* Group-table file text: { "order": m, "table": [[...], ...] }. */
SF_API sf_status sf_group_from_json(const char* json_text, sf_group** out);
SF_API sf_status sf_group_direct_product(const sf_group* a, const sf_group* b, sf_group** out);
SF_API void sf_group_free(sf_group* g);

SF_API uint32_t sf_group_order(const sf_group* g);
SF_API int sf_group_is_abelian(const sf_group* g);
SF_API int sf_group_is_cyclic(const sf_group* g);
SF_API sf_status sf_group_mul(const sf_group* g, uint32_t x, uint32_t y, uint32_t* out);
SF_API sf_status sf_group_element_order(const sf_group* g, uint32_t x, uint32_t* out);
/* AdmissibilityReport as JSON; *passed set to 1 or 0. */
SF_API sf_status sf_group_rank_one(const sf_group* g, int* passed, char** json_out);

/* Monoid contexts M(G, n). dtable_json may be NULL for cyclic groups. */
SF_API sf_status sf_context_new(const sf_group* g, uint32_t n, const char* dtable_json,
                                sf_context** out);
SF_API void sf_context_free(sf_context* ctx);

SF_API uint32_t sf_context_modulus(const sf_context* ctx);
SF_API uint32_t sf_context_n(const sf_context* ctx);
SF_API size_t sf_context_endo_count(const sf_context* ctx);
SF_API size_t sf_context_aut_count(const sf_context* ctx);
SF_API size_t sf_context_identity_endo(const sf_context* ctx);
/* Copies the image array (|G| entries) of endomorphism `alpha`. */
SF_API sf_status sf_context_endo_images(const sf_context* ctx, size_t alpha, uint32_t* images,
                                        size_t capacity);
SF_API sf_status sf_context_endo_is_automorphism(const sf_context* ctx, size_t alpha, int* out);
SF_API sf_status sf_context_compose(const sf_context* ctx, size_t a, size_t b, size_t* out);
SF_API sf_status sf_context_degree(const sf_context* ctx, size_t alpha, uint32_t* residue);
SF_API int sf_context_is_abelian(const sf_context* ctx);

/* Elements (alpha, k). SF_ERR_NOT_REALIZABLE when k != d(alpha) mod |G|. */
SF_API sf_status sf_element_check(const sf_context* ctx, size_t alpha, const char* k);
SF_API sf_status sf_element_multiply(const sf_context* ctx, size_t alpha_x, const char* k_x,
                                     size_t alpha_y, const char* k_y, size_t* alpha_out,
                                     char** k_out);
SF_API sf_status sf_element_is_invertible(const sf_context* ctx, size_t alpha, const char* k,
                                          int* out);
SF_API sf_status sf_equivalence_order(const sf_context* ctx, size_t* out);
SF_API sf_status sf_degree_realizable(const sf_context* ctx, const char* k, int* out);

/* Even-dimensional classes: "A0", "A2" or an odd integer. */
SF_API sf_status sf_even_canonicalize(const char* k, char** out);
SF_API sf_status sf_even_multiply(const char* x, const char* y, char** out);

/* Oracle cross-check on C_m; report JSON, *passed set to 1 or 0. */
SF_API sf_status sf_cross_check(uint32_t m, uint32_t n, uint32_t window, int* passed,
                                char** json_out);

/* Reports (JSON text, see sf_render for other formats). */
SF_API sf_status sf_report_monoid(const sf_context* ctx, uint32_t window, char** out);
SF_API sf_status sf_report_equiv(const sf_context* ctx, char** out);
SF_API sf_status sf_report_even(uint32_t n, char** out);
SF_API sf_status sf_report_degrees(const sf_context* ctx, const char* const* degrees,
                                   size_t count, char** out);
SF_API sf_status sf_report_census(uint32_t max_m, uint32_t n, char** out);
/* Always produces a report when the inputs parse; *exit_code carries the
 * outcome (0 pass, 1 input error, 2 validation failure). */
SF_API sf_status sf_report_check(const sf_group* g, uint32_t n, const char* dtable_json,
                                 uint32_t window, int* exit_code, char** out);
SF_API sf_status sf_render(const char* report_json, sf_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPACEFORM_SPACEFORM_H */
