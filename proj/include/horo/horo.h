/*
 * C interface to the horo engine.
 *
 * All objects are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Strings returned through char** are
 * heap-allocated and released with horo_string_free. Every function returns a
 * horo_status; on failure horo_last_error() describes the problem for the
 * calling thread.
 */
#ifndef HORO_H_
#define HORO_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HORO_BUILDING_LIBRARY)
#    define HORO_API __declspec(dllexport)
#  else
#    define HORO_API __declspec(dllimport)
#  endif
#else
#  define HORO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum horo_status {
  HORO_OK = 0,
  HORO_E_PARSE = 1,       /* descriptor or argument does not parse */
  HORO_E_DOMAIN = 2,      /* parameters outside the valid domain */
  HORO_E_CAP = 3,         /* bound exceeds the configured cap */
  HORO_E_CONSISTENCY = 4, /* derived value disagrees with a reference value */
  HORO_E_ARGUMENT = 5,    /* null pointer or bad enum */
  HORO_E_INTERNAL = 6
} horo_status;

typedef enum horo_format {
  HORO_FORMAT_TABLE = 0,
  HORO_FORMAT_JSONL = 1,
  HORO_FORMAT_CSV = 2
} horo_format;

typedef struct horo_record horo_record;
typedef struct horo_record_list horo_record_list;

typedef struct horo_bounds {
  int homogeneous;     /* nonzero: sweep G/P_k */
  int horospherical;   /* nonzero: sweep the two-orbit families */
  int linear_sections; /* nonzero: sweep G(k,n) and OG(k,2k) sections */
  int hypersurfaces;   /* nonzero: sweep hypersurfaces in P^n */
  char series;         /* 'A'..'G' restricts the homogeneous sweep; 0 for all */
  int max_rank;
  int max_n;
  int max_codim;
  int max_degree;
  int cap;             /* every bound must be <= cap */
} horo_bounds;

HORO_API const char* horo_version(void);

/* Message for the last failed call on this thread; "" if none. */
HORO_API const char* horo_last_error(void);

HORO_API void horo_string_free(char* s);

/* Everything off, zero bounds, cap 64. */
HORO_API void horo_bounds_init(horo_bounds* bounds);

/*
 * Invariants of a two-orbit family ("X1(5)", "X2", ...), cross-checked
 * against the reference table. `expectations` may be NULL or a list of
 * "column=value" pairs that are checked as well. On a failed check *out is
 * still set and HORO_E_CONSISTENCY is returned.
 */
HORO_API horo_status horo_invariants(const char* descriptor, const char* expectations,
                                     horo_record** out);

/* Verdict for any descriptor kind; same contract as horo_invariants. */
HORO_API horo_status horo_classify(const char* descriptor, const char* expectations,
                                   horo_record** out);

HORO_API void horo_record_free(horo_record* record);

HORO_API const char* horo_record_descriptor(const horo_record* record);

/* 1 or 0, or -1 when the record carries no verdict. */
HORO_API int horo_record_two_fano(const horo_record* record);

/* Exact "p/q" string for ch2.S_Y (which = 'Y') or ch2.S_Z (which = 'Z'). */
HORO_API horo_status horo_record_ch2(const horo_record* record, char which, char** out);

HORO_API horo_status horo_record_format(const horo_record* record, horo_format format,
                                        char** out);

HORO_API horo_status horo_enumerate(const horo_bounds* bounds, horo_record_list** out);

HORO_API void horo_record_list_free(horo_record_list* list);

HORO_API size_t horo_record_list_size(const horo_record_list* list);

/* Borrowed pointer, valid until the list is freed. NULL when out of range. */
HORO_API const horo_record* horo_record_list_get(const horo_record_list* list, size_t index);

HORO_API horo_status horo_record_list_format(const horo_record_list* list, horo_format format,
                                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* HORO_H_ */
