/*
 * circhad: C API for the circulant Hadamard toolkit.
 *
 * Exact verification of circulant Hadamard rows, regularity profiles, the
 * doubly stochastic construction, a step-by-step audit of the identity
 * chain connecting the two, and exhaustive searches for circulant Hadamard
 * rows and Barker sequences.
 *
 * Conventions: every fallible call returns a ch_status; CH_OK means the out
 * parameters are valid. Objects come back as opaque handles owned by the
 * caller and released with the matching *_free. Strings produced by the
 * library are heap-allocated and released with ch_string_free. On failure,
 * ch_last_error() returns a thread-local human-readable detail message.
 */

#ifndef CIRCHAD_H
#define CIRCHAD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ch_status {
    CH_OK = 0,
    CH_ERR_INVALID_ARGUMENT = 1, /* malformed input (empty row, bad entry, ...) */
    CH_ERR_DIMENSION = 2,        /* operand orders do not match */
    CH_ERR_PRECONDITION = 3,     /* e.g. auditing a non-Hadamard row */
    CH_ERR_OUT_OF_SCOPE = 4,     /* e.g. theoretical filter below order 4 */
    CH_ERR_RESOURCE_LIMIT = 5,   /* node budget exhausted; partial result returned */
    CH_ERR_IO = 6,               /* checkpoint file could not be read/written */
    CH_ERR_INTERNAL = 7
} ch_status;

/* Static description of a status code. */
const char* ch_status_message(ch_status status);

/* Thread-local detail message for the most recent failure; never NULL. */
const char* ch_last_error(void);

/* Library version, e.g. "1.0.0". */
const char* ch_version(void);

/* Releases a string returned by the library. NULL is fine. */
void ch_string_free(char* s);

/* ---- rows ---------------------------------------------------------- */

/* Parses "1,-1,-1,-1" (commas, optional '+') or compact "+---" into ±1
 * entries. *out_row receives a malloc'd int8_t array of *out_len entries;
 * release with ch_row_free. */
ch_status ch_row_parse(const char* text, int8_t** out_row, size_t* out_len);
void ch_row_free(int8_t* row);

/* ---- verification --------------------------------------------------- */

typedef struct ch_verify_result {
    int is_hadamard;      /* 0/1 */
    int has_profile;      /* 0/1; fields below valid only when 1 */
    uint32_t h;           /* order = 4h^2 */
    int sum_sign;         /* +1 or -1 */
    uint32_t positive_count;
    uint32_t negative_count;
} ch_verify_result;

ch_status ch_verify_row(const int8_t* row, size_t len, ch_verify_result* out);

/* ---- catalog --------------------------------------------------------- */

/* Number of known circulant Hadamard matrices (10). */
size_t ch_catalog_size(void);

/* Entry i: writes the name ("H1".."H10", NUL-terminated) into name_buf and
 * the first row into row_buf (capacity row_cap entries; 4 suffices). */
ch_status ch_catalog_entry(size_t index, char name_buf[8], int8_t* row_buf,
                           size_t row_cap, size_t* out_len);

/* JSON list [{name, order, first_row}, ...]; indent < 0 for compact. */
ch_status ch_catalog_json(int indent, char** out_json);

/* ---- audit ----------------------------------------------------------- */

typedef struct ch_audit_report ch_audit_report;

#define CH_AUDIT_MODE_STRICT 0
#define CH_AUDIT_MODE_EXTENDED 1

ch_status ch_audit_row(const int8_t* row, size_t len, int mode,
                       ch_audit_report** out);

size_t ch_audit_report_step_count(const ch_audit_report* report);
/* step_id/verdict/witness of step i. Returned strings live as long as the
 * report; witness is NULL when absent. */
ch_status ch_audit_report_step(const ch_audit_report* report, size_t index,
                               const char** out_step_id, const char** out_verdict,
                               const char** out_witness);
const char* ch_audit_report_conclusion(const ch_audit_report* report);
uint32_t ch_audit_report_h(const ch_audit_report* report);
ch_status ch_audit_report_json(const ch_audit_report* report, int indent,
                               char** out_json);
void ch_audit_report_free(ch_audit_report* report);

/* ---- theoretical filter ---------------------------------------------- */

#define CH_FILTER_EXCLUDED_SHAPE 0
#define CH_FILTER_EXCLUDED_PARITY 1
#define CH_FILTER_CANDIDATE 2

typedef struct ch_filter_verdict {
    uint32_t order;
    int status; /* CH_FILTER_* */
    char reason[160];
} ch_filter_verdict;

/* Orders below 4 yield CH_ERR_OUT_OF_SCOPE. */
ch_status ch_theoretical_filter(uint32_t order, ch_filter_verdict* out);

/* ---- search ----------------------------------------------------------- */

typedef struct ch_search_report ch_search_report;

typedef void (*ch_progress_fn)(uint64_t nodes_visited, uint64_t blocks_done,
                               uint64_t blocks_total, uint64_t survivors_so_far,
                               void* user_data);

typedef struct ch_search_options {
    uint32_t worker_count;         /* 0 or 1 = single-threaded */
    uint64_t node_budget;          /* 0 = unlimited */
    int confirm_excluded_orders;   /* 0/1: full 2^n sweep on excluded orders */
    uint64_t emit_progress_every;  /* node count; 0 = never */
    const char* checkpoint_path;   /* NULL = no checkpointing */
    ch_progress_fn progress;       /* NULL = no callback */
    void* progress_user_data;
} ch_search_options;

/* options == NULL means defaults. On CH_ERR_RESOURCE_LIMIT the partial
 * report is still returned through *out and must be freed. */
ch_status ch_search_hadamard(uint32_t order, const ch_search_options* options,
                             ch_search_report** out);
ch_status ch_search_barker(uint32_t length, const ch_search_options* options,
                           ch_search_report** out);

uint32_t ch_search_report_order(const ch_search_report* report);
const char* ch_search_report_mode(const ch_search_report* report);
uint64_t ch_search_report_raw_count(const ch_search_report* report);
size_t ch_search_report_survivor_count(const ch_search_report* report);
ch_status ch_search_report_survivor(const ch_search_report* report, size_t index,
                                    int8_t* row_buf, size_t row_cap,
                                    size_t* out_len);
uint64_t ch_search_report_nodes_visited(const ch_search_report* report);
uint64_t ch_search_report_pruned_by_weight(const ch_search_report* report);
uint64_t ch_search_report_pruned_by_partial_pacf(const ch_search_report* report);
uint64_t ch_search_report_duration_ms(const ch_search_report* report);
/* 1 when the run finished, 0 for a partial (budget-limited) result. */
int ch_search_report_complete(const ch_search_report* report);
/* Filter verdict recorded in the report, if any. Returns CH_ERR_OUT_OF_SCOPE
 * when the report carries none (orders < 4, Barker mode). */
ch_status ch_search_report_filter(const ch_search_report* report,
                                  ch_filter_verdict* out);
/* Certificate JSON; with_metadata adds duration_ms. */
ch_status ch_search_report_json(const ch_search_report* report, int with_metadata,
                                int indent, char** out_json);
void ch_search_report_free(ch_search_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CIRCHAD_H */
