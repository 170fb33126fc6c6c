#ifndef DISEMISIMPLE_H
#define DISEMISIMPLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum DsStatus {
  DS_STATUS_OK = 0,
  DS_STATUS_NULL_POINTER = 1,
  DS_STATUS_INVALID_UTF8 = 2,
  DS_STATUS_PARSE_ERROR = 3,
  DS_STATUS_COMPUTE_ERROR = 4,
  DS_STATUS_PANIC = 5,
} DsStatus;

/**
 * Outcome of a prehomogeneity test.
 */
typedef enum DsVerdict {
  DS_VERDICT_PREHOMOGENEOUS = 0,
  DS_VERDICT_NOT_PREHOMOGENEOUS = 1,
  DS_VERDICT_INCONCLUSIVE = 2,
} DsVerdict;

/**
 * A semisimple Lie algebra given by its simple factors.
 */
typedef struct DsAlgebra DsAlgebra;

/**
 * A finite-dimensional module over a [`DsAlgebra`].
 */
typedef struct DsModule DsModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *ds_last_error(void);

/**
 * Library version as a static string.
 */
const char *ds_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void ds_string_free(char *s);

/**
 * Parses an algebra such as `A1xA2`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum DsStatus ds_algebra_parse(const char *text, struct DsAlgebra **out);

/**
 * Dimension of the algebra.
 *
 * # Safety
 * `alg` must be a live handle and `out` writable.
 */
enum DsStatus ds_algebra_dim(const struct DsAlgebra *alg, uintptr_t *out);

/**
 * # Safety
 * `alg` must be null or a handle from [`ds_algebra_parse`] not yet freed.
 */
void ds_algebra_free(struct DsAlgebra *alg);

/**
 * Parses and builds a module expression such as `L(1)#L(0,1)`.
 *
 * # Safety
 * `alg` must be a live handle, `text` nul-terminated and `out` writable.
 */
enum DsStatus ds_module_parse(const struct DsAlgebra *alg, const char *text, struct DsModule **out);

/**
 * Dimension of the module.
 *
 * # Safety
 * `module` must be a live handle and `out` writable.
 */
enum DsStatus ds_module_dim(const struct DsModule *module, uintptr_t *out);

/**
 * Decomposition into irreducibles, e.g. `2L(1,0) + L(0,1)`.
 *
 * # Safety
 * `module` must be a live handle and `out` writable.
 */
enum DsStatus ds_module_decompose(const struct DsModule *module, char **out);

/**
 * # Safety
 * `module` must be null or a handle from [`ds_module_parse`] not yet freed.
 */
void ds_module_free(struct DsModule *module);

/**
 * Tests the module for a dense orbit. `exact != 0` selects the symbolic
 * mode, in which `seed` and `trials` are ignored. `out_json` may be null.
 *
 * # Safety
 * `module` must be a live handle; `out_verdict` writable; `out_json` null
 * or writable.
 */
enum DsStatus ds_prehom(const struct DsModule *module,
                        uint64_t seed,
                        uint32_t trials,
                        int exact,
                        enum DsVerdict *out_verdict,
                        char **out_json);

/**
 * Certifies `s ⋉ V` as disemisimple. `out_certified` receives 1 or 0;
 * `out_json` (optional) the certificate or refusal.
 *
 * # Safety
 * `module` must be a live handle; `out_certified` writable; `out_json`
 * null or writable.
 */
enum DsStatus ds_certify(const struct DsModule *module,
                         int exact,
                         int *out_certified,
                         char **out_json);

/**
 * Exhaustive comparison with the table for a simple type; `bound == 0`
 * means `dim s − 1`. Writes the JSON report; `out_clean` receives 1 when
 * the diff is empty.
 *
 * # Safety
 * `simple_type` must be nul-terminated; outputs writable.
 */
enum DsStatus ds_crosscheck(const char *simple_type,
                            uint64_t bound,
                            int *out_clean,
                            char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DISEMISIMPLE_H */
