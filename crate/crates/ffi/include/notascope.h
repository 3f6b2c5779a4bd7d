#ifndef NOTASCOPE_H
#define NOTASCOPE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NsStatus {
  NS_STATUS_OK = 0,
  NS_STATUS_NULL_ARGUMENT = 1,
  NS_STATUS_INVALID_UTF8 = 2,
  NS_STATUS_INVALID_GALLERY = 3,
  NS_STATUS_IO = 4,
  NS_STATUS_UNKNOWN_NOTATION = 5,
  NS_STATUS_UNKNOWN_EXAMPLE = 6,
  NS_STATUS_UNKNOWN_TOKENIZER = 7,
  NS_STATUS_DEGENERATE_GALLERY = 8,
  NS_STATUS_COMPRESSOR_UNAVAILABLE = 9,
  NS_STATUS_INVALID_ARGUMENT = 10,
  NS_STATUS_LEX_ERROR = 11,
  NS_STATUS_BUFFER_TOO_SMALL = 12,
  NS_STATUS_INTERNAL = 13,
  NS_STATUS_PANIC = 14,
} NsStatus;

typedef enum NsMetric {
  /**
   * Compression distance in bytes.
   */
  NS_METRIC_CD = 0,
  /**
   * Levenshtein distance over non-comment lexemes.
   */
  NS_METRIC_TOKEN_LD = 1,
} NsMetric;

/**
 * Loaded gallery plus its distance configuration.
 */
typedef struct NsGallery NsGallery;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ns_version(void);

/**
 * Message for the last failed call on this thread, or null if none.
 * Valid until the next failing call on the same thread.
 */
const char *ns_last_error_message(void);

/**
 * Loads the gallery at `root`. `compressor` is `algorithm[:level]` or
 * null for the default `zlib:9`.
 *
 * # Safety
 * `root` and `compressor` must be null or NUL-terminated strings;
 * `out` must be valid for writes.
 */
enum NsStatus ns_gallery_load(const char *root, const char *compressor, struct NsGallery **out);

/**
 * Releases a handle from [`ns_gallery_load`]. Null is ignored.
 *
 * # Safety
 * `gallery` must be null or a live handle; it must not be used afterwards.
 */
void ns_gallery_free(struct NsGallery *gallery);

/**
 * # Safety
 * `gallery` must be a live handle and `out` valid for writes.
 */
enum NsStatus ns_gallery_notation_count(const struct NsGallery *gallery, size_t *out);

/**
 * # Safety
 * `gallery` must be a live handle and `out` valid for writes.
 */
enum NsStatus ns_gallery_example_count(const struct NsGallery *gallery, size_t *out);

/**
 * Copies the id of notation `index` (in gallery.json order) into `buf`.
 *
 * # Safety
 * `gallery` must be a live handle, `buf` valid for `capacity` bytes, and
 * `required` null or valid for writes.
 */
enum NsStatus ns_gallery_notation_id(const struct NsGallery *gallery,
                                     size_t index,
                                     char *buf,
                                     size_t capacity,
                                     size_t *required);

/**
 * Copies the id of example `index` (canonical order) into `buf`.
 *
 * # Safety
 * As for [`ns_gallery_notation_id`].
 */
enum NsStatus ns_gallery_example_id(const struct NsGallery *gallery,
                                    size_t index,
                                    char *buf,
                                    size_t capacity,
                                    size_t *required);

/**
 * Copies the 64-character hex content hash into `buf`.
 *
 * # Safety
 * As for [`ns_gallery_notation_id`].
 */
enum NsStatus ns_gallery_content_hash(const struct NsGallery *gallery,
                                      char *buf,
                                      size_t capacity,
                                      size_t *required);

/**
 * Median normalized byte length of the notation's specs.
 *
 * # Safety
 * `gallery` must be a live handle, `notation` a NUL-terminated string and
 * `out` valid for writes.
 */
enum NsStatus ns_median_spec_length(const struct NsGallery *gallery,
                                    const char *notation,
                                    double *out);

/**
 * Distinct non-comment lexemes across the notation's specs.
 *
 * # Safety
 * As for [`ns_median_spec_length`].
 */
enum NsStatus ns_vocabulary_size(const struct NsGallery *gallery,
                                 const char *notation,
                                 size_t *out);

/**
 * Median pairwise distance between the notation's specs.
 *
 * # Safety
 * As for [`ns_median_spec_length`].
 */
enum NsStatus ns_sprawl(const struct NsGallery *gallery,
                        const char *notation,
                        enum NsMetric metric,
                        double *out);

/**
 * Median distance from one example to the notation's other examples.
 *
 * # Safety
 * As for [`ns_median_spec_length`]; `example` must be a NUL-terminated
 * string.
 */
enum NsStatus ns_remoteness(const struct NsGallery *gallery,
                            const char *notation,
                            const char *example,
                            enum NsMetric metric,
                            double *out);

/**
 * Writes the n×n distance matrix row-major into `values`, rows and
 * columns in canonical example order. `n` always receives the example
 * count; `NS_STATUS_BUFFER_TOO_SMALL` is returned if `capacity < n * n`.
 *
 * # Safety
 * `gallery` must be a live handle, `notation` a NUL-terminated string,
 * `values` valid for `capacity` writes, and `n` valid for writes.
 */
enum NsStatus ns_distance_matrix(const struct NsGallery *gallery,
                                 const char *notation,
                                 enum NsMetric metric,
                                 double *values,
                                 size_t capacity,
                                 size_t *n);

/**
 * Compression distance between two byte strings, `a` concatenated first.
 *
 * # Safety
 * `a` and `b` must be valid for `a_len` and `b_len` reads (either may be
 * null when its length is 0); `compressor` as in [`ns_gallery_load`];
 * `out` valid for writes.
 */
enum NsStatus ns_compression_distance(const uint8_t *a,
                                      size_t a_len,
                                      const uint8_t *b,
                                      size_t b_len,
                                      const char *compressor,
                                      double *out);

/**
 * Token edit distance between two texts under a built-in tokenizer
 * (`generic`, `json`, `python`, `r`, `javascript`).
 *
 * # Safety
 * `tokenizer`, `a` and `b` must be NUL-terminated strings and `out` valid
 * for writes.
 */
enum NsStatus ns_token_levenshtein(const char *tokenizer,
                                   const char *a,
                                   const char *b,
                                   size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOTASCOPE_H */
