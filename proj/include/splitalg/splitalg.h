/* C interface to the splitting-algebra analysis library.
 *
 * All functions return a status code; on failure sa_last_error() gives a
 * thread-local human-readable message. Strings returned through `char**`
 * are heap-allocated JSON documents and must be released with
 * sa_string_free().
 */
#ifndef SPLITALG_SPLITALG_H_
#define SPLITALG_SPLITALG_H_

#ifdef __cplusplus
extern "C" {
#endif

#define SA_OK 0        /* success */
#define SA_EPARSE 1    /* malformed input text */
#define SA_EINVALID 2  /* input violates a graph/model invariant */
#define SA_EARG 3      /* bad argument to an API call */
#define SA_EINTERNAL 4 /* internal assertion failure */

/* Opaque handle: a validated layered graph, possibly with surface or
 * simplicial metadata depending on how it was built. */
typedef struct sa_graph sa_graph;

/* Message for the most recent failure on this thread; empty on success. */
const char* sa_last_error(void);

void sa_graph_free(sa_graph* g);
void sa_string_free(char* s);

/* Loads any supported JSON document, detecting the schema by its keys:
 * "vertices" = plain graph, "ground" = simplicial complex, "cells" =
 * cell poset, otherwise "faces" = surface subdivision. */
int sa_graph_load_json(const char* text, sa_graph** out);

int sa_graph_from_graph_json(const char* text, sa_graph** out);
int sa_graph_from_surface_json(const char* text, sa_graph** out);
int sa_graph_from_simplicial_json(const char* text, int add_top, int strict,
                                  sa_graph** out);
int sa_graph_from_cell_poset_json(const char* text, sa_graph** out);

/* Complete layered graph with the given level sizes (sizes[0] must be 1). */
int sa_graph_complete(const int* sizes, int count, sa_graph** out);
int sa_graph_cassidy_shelton(sa_graph** out);

/* Canonical JSON rendering of the graph schema. */
int sa_graph_to_json(const sa_graph* g, char** out);

/* Validates raw graph JSON without building a handle; the report lists
 * every violated invariant. Returns SA_OK even when the graph is
 * invalid (the report carries "ok": false); SA_EPARSE on bad JSON. */
int sa_validate_json(const char* text, char** out_report);

/* Analysis reports, rendered as JSON documents. `modular` enables the
 * dual-prime modular fast path for kernel ranks. */
int sa_hilbert_report(const sa_graph* g, int order, char** out);
int sa_dual_report(const sa_graph* g, int modular, char** out);
int sa_koszul_report(const sa_graph* g, int modular, char** out);

/* Requires a handle built from surface data. */
int sa_surface_report(const sa_graph* g, int modular, char** out);
int sa_orbits_report(const sa_graph* g, char** out);

/* Requires a handle built from simplicial data. */
int sa_simplicial_report(const sa_graph* g, int modular, char** out);

/* The worked end-to-end example on the Cassidy-Shelton graph. */
int sa_demo_cassidy_shelton(char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPLITALG_SPLITALG_H_ */
