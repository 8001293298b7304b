/*
 * C interface to the pathweights library: simple-path weight multisets of
 * weighted complete graphs, single-pair and all-pairs realizability, and
 * family certificates.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every call returns a pw_status; on failure the
 * message is available from pw_last_error() on the same thread. Strings
 * returned through char** parameters are owned by the caller and must be
 * released with pw_string_free(). Output pointers documented as optional
 * may be NULL.
 */
#ifndef PATHWEIGHTS_H
#define PATHWEIGHTS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#ifdef PATHWEIGHTS_EXPORTS
#define PW_API __declspec(dllexport)
#else
#define PW_API __declspec(dllimport)
#endif
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_INVALID_PARAMETER = 1,
  PW_ERR_LIMIT = 2,
  PW_ERR_PARSE = 3,
  PW_ERR_REALIZABILITY = 4,
  PW_ERR_MALFORMED_CERTIFICATE = 5,
  PW_ERR_INTERNAL = 6
} pw_status;

typedef enum pw_outcome { PW_YES = 0, PW_NO = 1, PW_BUDGET_EXCEEDED = 2 } pw_outcome;

typedef struct pw_graph pw_graph;
typedef struct pw_multiset pw_multiset;
typedef struct pw_family pw_family;
typedef struct pw_indexing pw_indexing;
typedef struct pw_certificate pw_certificate;

PW_API const char* pw_version(void);
PW_API const char* pw_last_error(void);
PW_API const char* pw_status_name(pw_status status);
PW_API void pw_string_free(char* s);

/* Counting */
PW_API pw_status pw_count_simple_paths(int n, uint64_t* out);
PW_API pw_status pw_check_count_identity(int n, int* holds);

/* Documents. `kind` receives "graph", "multiset", "family", "indexing",
 * "certificate" or "report". */
PW_API pw_status pw_document_kind(const char* text, char** kind);

PW_API pw_status pw_graph_generate(int n, uint64_t seed, int64_t num_bound, int64_t den_bound, pw_graph** out);
PW_API pw_status pw_graph_parse(const char* text, pw_graph** out);
PW_API pw_status pw_graph_write(const pw_graph* g, char** text);
PW_API int pw_graph_vertex_count(const pw_graph* g);
PW_API pw_status pw_graph_weight(const pw_graph* g, int l, int m, char** weight);
PW_API void pw_graph_free(pw_graph* g);

PW_API pw_status pw_multiset_parse(const char* text, pw_multiset** out);
PW_API pw_status pw_multiset_write(const pw_multiset* m, char** text);
PW_API uint64_t pw_multiset_cardinality(const pw_multiset* m);
PW_API void pw_multiset_free(pw_multiset* m);

PW_API pw_status pw_family_parse(const char* text, pw_family** out);
PW_API pw_status pw_family_write(const pw_family* f, char** text);
PW_API void pw_family_free(pw_family* f);

PW_API pw_status pw_indexing_parse(const char* text, pw_indexing** out);
PW_API pw_status pw_indexing_write(const pw_indexing* x, char** text);
PW_API void pw_indexing_free(pw_indexing* x);

PW_API pw_status pw_certificate_parse(const char* text, pw_certificate** out);
PW_API pw_status pw_certificate_write(const pw_certificate* c, char** text);
PW_API void pw_certificate_free(pw_certificate* c);

/* Forward direction */
PW_API pw_status pw_forward(const pw_graph* g, int i, int j, pw_multiset** out);
PW_API pw_status pw_forward_family(const pw_graph* g, pw_family** out);
PW_API pw_status pw_forward_indexing(const pw_graph* g, int i, int j, pw_indexing** out);
/* h_{i,j} of the edge values held by `anchors`. */
PW_API pw_status pw_hmap(const pw_graph* anchors, int i, int j, pw_multiset** out);
/* The anchors of a certificate, as a graph. */
PW_API pw_status pw_certificate_anchors(const pw_certificate* c, pw_graph** out);

/* Single pair. `report` is optional and receives a report document. */
PW_API pw_status pw_check_single(const pw_indexing* x, int* holds, char** report);
/* Endpoints fixed to (1, 2). `witness` (optional) is set only on PW_YES. */
PW_API pw_status pw_solve_single(const pw_multiset* y, int n, uint64_t budget, pw_outcome* outcome,
                                 pw_graph** witness, char** report);

/* Families */
PW_API pw_status pw_certify(const pw_graph* g, int pivot_u, int pivot_v, pw_certificate** out);
PW_API pw_status pw_verify_certificate(const pw_family* f, const pw_certificate* c, int* valid, char** report);
PW_API pw_status pw_solve_family(const pw_family* f, uint64_t budget, pw_outcome* outcome, pw_graph** witness,
                                 char** report);
PW_API pw_status pw_verify_family(const pw_graph* g, const pw_family* f, int* holds, char** report);

#define PW_DEFAULT_BUDGET 1000000u

#ifdef __cplusplus
}
#endif

#endif /* PATHWEIGHTS_H */
