/* C interface to the generalized complex structure toolkit.
 *
 * All functions are thread-safe as long as each handle is used from one
 * thread at a time; handles are immutable after creation and may be shared
 * for reads.  Strings returned by accessors are owned by their handle and
 * stay valid until the handle is freed.
 */
#ifndef GCKIT_H
#define GCKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gckit_status {
    GCKIT_OK = 0,
    GCKIT_CHECKS_FAILED = 1, /* command ran; at least one check failed */
    GCKIT_PARSE_ERROR = 2,   /* unusable input: JSON, grammar, names, options */
    GCKIT_INVALID_ARGUMENT = 3,
    GCKIT_INTERNAL_ERROR = 4
} gckit_status;

/* Opaque handles. */
typedef struct gckit_doc gckit_doc;
typedef struct gckit_report gckit_report;

/* Interface revision; bumped on incompatible changes. */
int gckit_abi_version(void);

/* Parse a structure document (JSON text).  On success stores a new handle in
 * *out_doc; free with gckit_doc_free. */
gckit_status gckit_doc_parse(const char* json_text, gckit_doc** out_doc);
void gckit_doc_free(gckit_doc* doc);

/* Run a command against a document.  command is one of: check, poisson,
 * decompose, orthcomp, linearize, normalform.  options_json may be NULL or a
 * JSON object like {"point": ["0","0"], "subspace": "W", "degree": 3}.
 * Returns GCKIT_OK or GCKIT_CHECKS_FAILED when a report was produced (stored
 * in *out_report; free with gckit_report_free), an error status otherwise. */
gckit_status gckit_run(const gckit_doc* doc, const char* command,
                       const char* options_json, gckit_report** out_report);

/* Report body as deterministic JSON text (owned by the report). */
const char* gckit_report_json(const gckit_report* report);
/* 1 when every check passed, 0 otherwise. */
int gckit_report_passed(const gckit_report* report);
void gckit_report_free(gckit_report* report);

/* Message describing the last failure on this thread, or an empty string. */
const char* gckit_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
