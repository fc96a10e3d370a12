#ifndef PLACTICC_H
#define PLACTICC_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PLACTICC_OP_E 0

#define PLACTICC_OP_F 1

#define PLACTICC_VARIANT_ACOL 0

#define PLACTICC_VARIANT_ACOL_BULLET 1

/**
 * Result code of every call.
 */
typedef enum PlacticcStatus {
  PLACTICC_STATUS_OK = 0,
  /**
   * Malformed text or JSON input.
   */
  PLACTICC_STATUS_PARSE_ERROR = 1,
  /**
   * A value violates the precondition of the operation.
   */
  PLACTICC_STATUS_INVALID_INPUT = 2,
  /**
   * A numeric argument is out of range for the rank.
   */
  PLACTICC_STATUS_DOMAIN_ERROR = 3,
  /**
   * A required pointer argument was null.
   */
  PLACTICC_STATUS_NULL_POINTER = 4,
  /**
   * The crystal operator does not apply to the word.
   */
  PLACTICC_STATUS_UNDEFINED = 5,
  /**
   * Rewriting exceeded its step limit.
   */
  PLACTICC_STATUS_STEP_LIMIT = 6,
  /**
   * Enumeration refused because the rank exceeds the cap.
   */
  PLACTICC_STATUS_CAP_EXCEEDED = 7,
  /**
   * A verification report contains violations.
   */
  PLACTICC_STATUS_VIOLATIONS = 8,
  /**
   * Internal error or caught panic.
   */
  PLACTICC_STATUS_INTERNAL = 9,
} PlacticcStatus;

/**
 * A word of admissible columns over `C_n` together with its rank `n`.
 */
typedef struct PlacticcWord PlacticcWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *placticc_last_error_message(void);

/**
 * Parses a word of columns such as `[1 2] [1] [2 -2]` over `C_n`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PlacticcStatus placticc_word_parse(const char *src, size_t n, struct PlacticcWord **out);

/**
 * Releases a word. Null is ignored.
 *
 * # Safety
 * `w` must come from this library and not be freed twice.
 */
void placticc_word_free(struct PlacticcWord *w);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void placticc_string_free(char *s);

/**
 * Bracketed text form of `w`.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_word_to_string(const struct PlacticcWord *w, char **out);

/**
 * Number of columns of `w`, `ε` included.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_word_len(const struct PlacticcWord *w, size_t *out);

/**
 * Normal form of `w`.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_normalize(const struct PlacticcWord *w, struct PlacticcWord **out);

/**
 * Normal form of the product `a b`; both words must share their rank.
 *
 * # Safety
 * `a` and `b` must be live words and `out` a valid pointer.
 */
enum PlacticcStatus placticc_product(const struct PlacticcWord *a,
                                     const struct PlacticcWord *b,
                                     struct PlacticcWord **out);

/**
 * Inserts the second column of a two-column word into the first and
 * returns the resulting standard pair.
 *
 * # Safety
 * `pair` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_insert_pair(const struct PlacticcWord *pair,
                                         struct PlacticcWord **out);

/**
 * Applies `e_i` (`op = PLACTICC_OP_E`) or `f_i` (`op = PLACTICC_OP_F`).
 * Returns `Undefined` and leaves `out` untouched when the operator does
 * not apply.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_crystal_apply(const struct PlacticcWord *w,
                                           uint32_t op,
                                           size_t i,
                                           struct PlacticcWord **out);

/**
 * Highest-weight word of the crystal component of `w`.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_highest_weight(const struct PlacticcWord *w,
                                            struct PlacticcWord **out);

/**
 * Lengths of the leftmost and rightmost reductions of a critical
 * branching source.
 *
 * # Safety
 * `w` must be a live word; `a_len` and `b_len` valid pointers.
 */
enum PlacticcStatus placticc_conf(const struct PlacticcWord *w,
                                  uint32_t variant,
                                  size_t *a_len,
                                  size_t *b_len);

/**
 * C-tree of a highest-weight word, as JSON.
 *
 * # Safety
 * `w` must be a live word and `out` a valid pointer.
 */
enum PlacticcStatus placticc_tree_encode(const struct PlacticcWord *w, char **out);

/**
 * Reading of a valid tree given as JSON. An invalid tree yields
 * `InvalidInput` with its violations in the error message.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PlacticcStatus placticc_tree_decode(const char *json, struct PlacticcWord **out);

/**
 * Checks every critical branching at rank `n` and writes the JSON report.
 * Returns `Violations` (with the report still written) if any check fails.
 * `jobs = 0` uses all cores.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PlacticcStatus placticc_verify_shapes(size_t n, uint32_t variant, size_t jobs, char **out);

/**
 * Library version, a static string.
 */
const char *placticc_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PLACTICC_H */
