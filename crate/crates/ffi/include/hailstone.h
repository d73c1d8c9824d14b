#ifndef HAILSTONE_H
#define HAILSTONE_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HsFormulation {
  HS_FORMULATION_BRANCHED = 0,
  HS_FORMULATION_ACCELERATED,
  HS_FORMULATION_MIRROR_PALINDROME,
  HS_FORMULATION_MIRROR_REFLECTION,
} HsFormulation;

/**
 * Integer sequences over `[0, 2^L - 1]` (odd part: `[1, 2^L]`).
 * For `PALINDROMES` the length argument is the half length `k`.
 */
typedef enum HsSequenceKind {
  HS_SEQUENCE_KIND_TZS = 0,
  HS_SEQUENCE_KIND_ODD_PART,
  HS_SEQUENCE_KIND_REFLECT,
  HS_SEQUENCE_KIND_PALINDROMES,
  HS_SEQUENCE_KIND_RLD,
  HS_SEQUENCE_KIND_DIGIT_SUM,
  HS_SEQUENCE_KIND_SORTED_TZS,
} HsSequenceKind;

/**
 * Result code of every fallible call.
 */
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_UNDEFINED_AT_ZERO,
  HS_STATUS_OUT_OF_FRAME,
  HS_STATUS_LENGTH_TOO_LARGE,
  HS_STATUS_LENGTH_TOO_SMALL,
  HS_STATUS_OVERFLOW,
  HS_STATUS_INVALID_ARGUMENT,
  HS_STATUS_INDEX_OUT_OF_BOUNDS,
  HS_STATUS_CONSISTENCY,
  HS_STATUS_NULL_POINTER,
  HS_STATUS_PANIC,
} HsStatus;

typedef enum HsTermination {
  HS_TERMINATION_FIXED_POINT = 0,
  HS_TERMINATION_POWER_OF_TWO,
  HS_TERMINATION_CYCLE,
  HS_TERMINATION_STEP_LIMIT,
  HS_TERMINATION_OVERFLOW,
} HsTermination;

typedef struct HsRunLengthCode HsRunLengthCode;

typedef struct HsSequence HsSequence;

typedef struct HsTrajectory HsTrajectory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of `status`.
 */
const char *hs_status_str(enum HsStatus status);

uint32_t hs_binary_length(uint64_t x);

uint32_t hs_digit_sum(uint64_t x);

/**
 * Trailing zeros of `x`. A nonzero `frame` makes `t(0) = frame`; with
 * `frame == 0` the value at zero is undefined.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_trailing_zeros(uint64_t x, uint32_t frame, uint32_t *out);

/**
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_odd_part(uint64_t x, uint64_t *out);

/**
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_complement(uint64_t x, uint32_t len, uint64_t *out);

/**
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_reflect(uint64_t x, uint32_t len, uint64_t *out);

/**
 * Palindrome of length `2k` whose upper half is `w`.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_palindrome(uint64_t w, uint32_t k, uint64_t *out);

/**
 * `P(w, k) - P(w - 1, k)` for `w >= 1`.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_palindrome_diff(uint64_t w, uint32_t k, uint64_t *out);

/**
 * Number of runs of `x` read as an `len`-bit word.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_rld(uint64_t x, uint32_t len, uint32_t *out);

/**
 * One step of the chosen formulation.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
enum HsStatus hs_step(enum HsFormulation formulation, uint64_t x, uint64_t *out);

/**
 * Iterates from `x0` for at most `max_steps` steps. Intermediate values are
 * tracked in 128 bits; reading one above `UINT64_MAX` reports overflow.
 *
 * # Safety
 * `out` must be null or valid for a write. The handle written there must be
 * released with [`hs_trajectory_free`].
 */
enum HsStatus hs_trajectory_new(uint64_t x0,
                                enum HsFormulation formulation,
                                size_t max_steps,
                                struct HsTrajectory **out);

/**
 * Number of recorded values, the start included. Zero for a null handle.
 *
 * # Safety
 * `traj` must be null or a live handle.
 */
size_t hs_trajectory_len(const struct HsTrajectory *traj);

/**
 * # Safety
 * `traj` must be null or a live handle; `out` must be null or valid for a write.
 */
enum HsStatus hs_trajectory_value(const struct HsTrajectory *traj, size_t index, uint64_t *out);

/**
 * # Safety
 * `traj` must be null or a live handle; `out` must be null or valid for a write.
 */
enum HsStatus hs_trajectory_t_value(const struct HsTrajectory *traj, size_t index, uint32_t *out);

/**
 * # Safety
 * `traj` must be null or a live handle; `out` must be null or valid for a write.
 */
enum HsStatus hs_trajectory_termination(const struct HsTrajectory *traj, enum HsTermination *out);

/**
 * # Safety
 * `traj` must be null or a handle from [`hs_trajectory_new`] not yet freed.
 */
void hs_trajectory_free(struct HsTrajectory *traj);

/**
 * Materializes a sequence; `len` is at most 24.
 *
 * # Safety
 * `out` must be null or valid for a write. The handle written there must be
 * released with [`hs_sequence_free`].
 */
enum HsStatus hs_sequence_new(enum HsSequenceKind kind, uint32_t len, struct HsSequence **out);

/**
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t hs_sequence_len(const struct HsSequence *seq);

/**
 * # Safety
 * `seq` must be null or a live handle; `out` must be null or valid for a write.
 */
enum HsStatus hs_sequence_get(const struct HsSequence *seq, size_t index, uint64_t *out);

/**
 * Copies up to `cap` values into `buf` and stores the count in `written`
 * (if non-null).
 *
 * # Safety
 * `seq` must be null or a live handle; `buf` must be valid for `cap` writes.
 */
enum HsStatus hs_sequence_copy(const struct HsSequence *seq,
                               uint64_t *buf,
                               size_t cap,
                               size_t *written);

/**
 * # Safety
 * `seq` must be null or a handle from [`hs_sequence_new`] not yet freed.
 */
void hs_sequence_free(struct HsSequence *seq);

/**
 * Signed run-length code of `x` as a `len`-bit word, least significant
 * run first: positive for runs of ones, negative for zeros.
 *
 * # Safety
 * `out` must be null or valid for a write. The handle written there must be
 * released with [`hs_rl_code_free`].
 */
enum HsStatus hs_rl_encode(uint64_t x, uint32_t len, struct HsRunLengthCode **out);

/**
 * Validates `coeffs` as a code for a `len`-bit word and decodes it.
 *
 * # Safety
 * `coeffs` must be valid for `count` reads; `out` must be null or valid for a write.
 */
enum HsStatus hs_rl_decode(const int32_t *coeffs, size_t count, uint32_t len, uint64_t *out);

/**
 * Number of runs. Zero for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t hs_rl_code_len(const struct HsRunLengthCode *code);

/**
 * # Safety
 * `code` must be null or a live handle; `buf` must be valid for `cap` writes.
 */
enum HsStatus hs_rl_code_coeffs(const struct HsRunLengthCode *code,
                                int32_t *buf,
                                size_t cap,
                                size_t *written);

/**
 * # Safety
 * `code` must be null or a handle from [`hs_rl_encode`] not yet freed.
 */
void hs_rl_code_free(struct HsRunLengthCode *code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAILSTONE_H */
