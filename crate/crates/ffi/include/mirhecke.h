#ifndef MIRHECKE_H
#define MIRHECKE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MhGVariant {
  MH_G_VARIANT_ORACLE = 0,
  MH_G_VARIANT_PAPER = 1,
} MhGVariant;

typedef enum MhStatus {
  MH_STATUS_OK = 0,
  MH_STATUS_NULL_POINTER = 1,
  MH_STATUS_INVALID_ARGUMENT = 2,
  MH_STATUS_COMPUTATION = 3,
  MH_STATUS_PANIC = 4,
} MhStatus;

/**
 * A computed character table.
 */
typedef struct MhCharacterTable MhCharacterTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mh_last_error_message(void);

/**
 * Writes `dim H_n(q)` to `out`. Fails if the value does not fit in 64 bits.
 *
 * # Safety
 * `out` must be NULL or valid for a write of one `uint64_t`.
 */
enum MhStatus mh_dim(size_t n, uint64_t *out);

/**
 * Computes the character table for rank `n`. On success `*out` owns a new
 * handle to be released with [`mh_table_free`].
 *
 * # Safety
 * `out` must be NULL or valid for a write of one pointer.
 */
enum MhStatus mh_table_new(size_t n, enum MhGVariant variant, struct MhCharacterTable **out);

/**
 * # Safety
 * `table` must be NULL or a handle from [`mh_table_new`] not yet freed.
 */
void mh_table_free(struct MhCharacterTable *table);

/**
 * Number of rows (equal to the number of columns); 0 for NULL.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
size_t mh_table_size(const struct MhCharacterTable *table);

/**
 * Entry at (`row`, `col`) in canonical partition order, as a polynomial in
 * `q` such as `"q-1"`. NULL on error.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
char *mh_table_entry_string(const struct MhCharacterTable *table, size_t row, size_t col);

/**
 * The whole table as CSV. NULL on error.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
char *mh_table_csv(const struct MhCharacterTable *table);

/**
 * Class polynomials of the basis element `index` (`"A=..;B=..;w=.."`) as
 * JSON, using `r` tensor variables (`r >= n`). NULL on error.
 *
 * # Safety
 * `table` must be NULL or a live handle; `index` must be NULL or a
 * NUL-terminated string.
 */
char *mh_class_poly_json(const struct MhCharacterTable *table, const char *index, size_t r);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void mh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MIRHECKE_H */
