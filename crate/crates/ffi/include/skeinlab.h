#ifndef SKEINLAB_H
#define SKEINLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum {
  SKEIN_STATUS_OK = 0,
  SKEIN_STATUS_NULL_POINTER = 1,
  SKEIN_STATUS_INVALID_UTF8 = 2,
  SKEIN_STATUS_PARSE_ERROR = 3,
  SKEIN_STATUS_UNKNOWN_LINK = 4,
  SKEIN_STATUS_UNKNOWN_INVARIANT = 5,
  SKEIN_STATUS_BINDING_ERROR = 6,
  SKEIN_STATUS_EVALUATION_ERROR = 7,
  SKEIN_STATUS_PANIC = 8,
} SkeinStatus;

/**
 * A link diagram.
 */
typedef struct SkeinDiagram SkeinDiagram;

/**
 * A Laurent polynomial with Gaussian-integer coefficients.
 */
typedef struct SkeinPoly SkeinPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null. Valid until the next
 * call into the library on the same thread.
 */
const char *skein_last_error(void);

/**
 * Parse `PD[X(a,b,c,d), ...] loops=n` text or the JSON form.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
SkeinStatus skein_diagram_parse(const char *text, SkeinDiagram **out);

/**
 * Look a diagram up in the catalog (honouring `SKEINLAB_CATALOG`).
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 */
SkeinStatus skein_diagram_from_catalog(const char *name, SkeinDiagram **out);

/**
 * # Safety
 * `d` must be null or a handle from this library not yet freed.
 */
void skein_diagram_free(SkeinDiagram *d);

/**
 * Number of crossings, or -1 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
int64_t skein_diagram_crossings(const SkeinDiagram *d);

/**
 * Number of components, or -1 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
int64_t skein_diagram_components(const SkeinDiagram *d);

/**
 * Writhe; 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
int64_t skein_diagram_writhe(const SkeinDiagram *d);

/**
 * Evaluate an invariant by name (`hr`, `p`, `kq-formula`, ...). `template` may be null for
 * the default walk order, otherwise comma-separated edge labels.
 *
 * # Safety
 * `d` must be a live handle, the strings valid or null where allowed, `out` valid.
 */
SkeinStatus skein_compute(const SkeinDiagram *d,
                          const char *invariant,
                          const char *template_,
                          SkeinPoly **out);

/**
 * Parse a polynomial in canonical text form.
 *
 * # Safety
 * `text` must be a valid string and `out` a valid pointer.
 */
SkeinStatus skein_poly_parse(const char *text, SkeinPoly **out);

/**
 * Apply `jones`, `alexander` or `var=poly` to a polynomial, producing a new one.
 *
 * # Safety
 * `p` must be a live handle, `binding` a valid string, `out` a valid pointer.
 */
SkeinStatus skein_poly_specialize(const SkeinPoly *p, const char *binding, SkeinPoly **out);

/**
 * Canonical text of a polynomial; free with [`skein_string_free`]. Null for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *skein_poly_to_string(const SkeinPoly *p);

/**
 * 1 if equal, 0 if not, -1 if either handle is null.
 *
 * # Safety
 * Both pointers must be null or live handles.
 */
int32_t skein_poly_equal(const SkeinPoly *a, const SkeinPoly *b);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void skein_poly_free(SkeinPoly *p);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void skein_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKEINLAB_H */
