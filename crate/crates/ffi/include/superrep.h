#ifndef SUPERREP_H
#define SUPERREP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SrMethod {
  SR_METHOD_QUIVER = 0,
  SR_METHOD_TABLE = 1,
  SR_METHOD_BOTH = 2,
} SrMethod;

typedef enum SrRepType {
  SR_REP_TYPE_FINITE = 0,
  SR_REP_TYPE_TAME = 1,
  SR_REP_TYPE_WILD = 2,
} SrRepType;

typedef enum SrStatus {
  SR_STATUS_OK = 0,
  SR_STATUS_NULL_POINTER = 1,
  SR_STATUS_INVALID_UTF8 = 2,
  SR_STATUS_INVALID = 3,
  SR_STATUS_CYCLIC = 4,
  SR_STATUS_UNSUPPORTED_FIELD = 5,
  SR_STATUS_BUDGET = 6,
  SR_STATUS_UNDECIDED = 7,
  SR_STATUS_INTERNAL = 8,
  SR_STATUS_PANIC = 9,
} SrStatus;

/**
 * Opaque superspecies.
 */
typedef struct SrSpecies SrSpecies;

/**
 * Opaque superquiver.
 */
typedef struct SrSuperquiver SrSuperquiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sr_last_error(void);

/**
 * Library version as a static string.
 */
const char *sr_version(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void sr_string_free(char *s);

/**
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum SrStatus sr_species_from_json(const char *json, struct SrSpecies **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void sr_species_free(struct SrSpecies *s);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_species_vertex_count(const struct SrSpecies *s, size_t *out);

/**
 * # Safety
 * Pointers must be valid; `*out` is released with [`sr_string_free`].
 */
enum SrStatus sr_species_to_json(const struct SrSpecies *s, char **out);

/**
 * Representation type by the chosen route; `Both` fails with
 * [`SrStatus::Internal`] when the routes disagree.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_species_classify(const struct SrSpecies *s,
                                  enum SrMethod method,
                                  enum SrRepType *out);

/**
 * Dimension of the tensor algebra as a decimal string or `"infinite"`.
 *
 * # Safety
 * Pointers must be valid; `*out` is released with [`sr_string_free`].
 */
enum SrStatus sr_species_tensor_dim(const struct SrSpecies *s, char **out);

/**
 * Number of isomorphism classes of indecomposable representations over
 * F_p within the budget (`SUPERREP_BUDGET`, else the default).
 *
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_species_count_indecomposables(const struct SrSpecies *s, uint32_t p, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_species_superquiver(const struct SrSpecies *s, struct SrSuperquiver **out);

/**
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum SrStatus sr_superquiver_from_json(const char *json, struct SrSuperquiver **out);

/**
 * # Safety
 * `q` must come from this library or be null.
 */
void sr_superquiver_free(struct SrSuperquiver *q);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_superquiver_is_realizable(const struct SrSuperquiver *q, bool *out);

/**
 * A species realizing the superquiver; fails with [`SrStatus::Invalid`]
 * when it is not realizable.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SrStatus sr_superquiver_species(const struct SrSuperquiver *q, struct SrSpecies **out);

/**
 * # Safety
 * Pointers must be valid; `*out` is released with [`sr_string_free`].
 */
enum SrStatus sr_superquiver_dot(const struct SrSuperquiver *q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERREP_H */
