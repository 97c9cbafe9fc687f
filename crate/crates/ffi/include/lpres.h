#ifndef LPRES_H
#define LPRES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LpresStatus {
  LPRES_STATUS_OK = 0,
  LPRES_STATUS_NULL_ARGUMENT = 1,
  LPRES_STATUS_INVALID_UTF8 = 2,
  LPRES_STATUS_SYNTAX = 3,
  LPRES_STATUS_UNKNOWN_ENTRY = 4,
  LPRES_STATUS_INVALID_INPUT = 5,
  /*
   Coset, recursion or point bound hit; retry with larger limits.
   */
  LPRES_STATUS_RESOURCE_LIMIT = 6,
  LPRES_STATUS_NO_TREE_ACTION = 7,
  LPRES_STATUS_UNSUPPORTED = 8,
  LPRES_STATUS_INTERNAL = 9,
} LpresStatus;

/*
 A group: a catalog entry or a parsed `.grp` file.
 */
typedef struct LpresGroup LpresGroup;

/*
 A freely reduced word over a group's generators.
 */
typedef struct LpresWord LpresWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after success.
 Valid until the next `lpres_*` call on the same thread.
 */
const char *lpres_last_error(void);

/*
 Static, NUL-terminated crate version.
 */
const char *lpres_version(void);

/*
 # Safety
 `s` must be NULL or a string returned by this library, not yet freed.
 */
void lpres_string_free(char *s);

/*
 # Safety
 `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LpresStatus lpres_group_from_catalog(const char *name, struct LpresGroup **out);

/*
 Parses a group file in the `.grp` language.

 # Safety
 `source` must be a NUL-terminated string; `out` must be writable.
 */
enum LpresStatus lpres_group_parse(const char *source, struct LpresGroup **out);

/*
 # Safety
 `g` must be NULL or a handle from this library, not yet freed.
 */
void lpres_group_free(struct LpresGroup *g);

/*
 Canonical `.grp` text.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_group_print(const struct LpresGroup *g, char **out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_group_rank(const struct LpresGroup *g, size_t *out);

/*
 Number of relators up to substitution depth `depth`, cyclic dedup.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_enumerate_count(const struct LpresGroup *g, size_t depth, size_t *out);

/*
 Relators up to `depth`, one per line.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_enumerate(const struct LpresGroup *g, size_t depth, char **out);

/*
 Abelian invariants of the depth-`depth` truncation, e.g. `Z/2 x Z`.

 # Safety
 `g` must be a live handle; both outputs must be writable.
 */
enum LpresStatus lpres_abelianize(const struct LpresGroup *g,
                                  size_t depth,
                                  size_t *free_rank_out,
                                  char **text_out);

/*
 Order by Todd–Coxeter on the depth-`depth` truncation.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_order(const struct LpresGroup *g,
                             size_t depth,
                             size_t max_cosets,
                             uint64_t *out);

/*
 Parses a word over the group's generators (or its tree generators).

 # Safety
 `g` must be a live handle, `source` NUL-terminated, `out` writable.
 */
enum LpresStatus lpres_word_parse(const struct LpresGroup *g,
                                  const char *source,
                                  struct LpresWord **out);

/*
 # Safety
 `w` must be NULL or a handle from this library, not yet freed.
 */
void lpres_word_free(struct LpresWord *w);

/*
 Length of the freely reduced word.

 # Safety
 `w` must be a live handle; `out` must be writable.
 */
enum LpresStatus lpres_word_length(const struct LpresWord *w, size_t *out);

/*
 Decides triviality with the contracting word-problem algorithm;
 writes 1 for trivial, 0 otherwise.

 # Safety
 `g` and `w` must be live handles, `w` parsed against `g`; `out` writable.
 */
enum LpresStatus lpres_word_is_trivial(const struct LpresGroup *g,
                                       const struct LpresWord *w,
                                       int32_t *out);

/*
 Image of a vertex (0-based digits, `len` of them) under the word.

 # Safety
 `vertex` and `out` must each point to `len` `u32`s; handles must be live.
 */
enum LpresStatus lpres_word_act(const struct LpresGroup *g,
                                const struct LpresWord *w,
                                const uint32_t *vertex,
                                size_t len,
                                uint32_t *out);

/*
 Runs the verification suite on a catalog entry and returns the JSON
 report. `passed` receives 1 when no check failed.

 # Safety
 `name` must be NUL-terminated; outputs must be writable.
 */
enum LpresStatus lpres_verify_json(const char *name, int32_t *passed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LPRES_H */
