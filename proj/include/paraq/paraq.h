/* paraq: exact verification engine for deformed parastatistics algebras.
 *
 * C interface around the verification runner. Configuration and report
 * objects are opaque; all functions are safe to call from C. Strings
 * returned by the library stay owned by the object they were read from
 * and remain valid until that object is freed.
 */
#ifndef PARAQ_H
#define PARAQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct paraq_config paraq_config;
typedef struct paraq_report paraq_report;

typedef enum {
  PARAQ_OK = 0,
  PARAQ_ERR_USAGE = 1,   /* bad key, bad value, inconsistent configuration */
  PARAQ_ERR_INTERNAL = 2 /* engine failure; see paraq_last_error() */
} paraq_status;

/* Fresh configuration with the default run parameters. */
paraq_config* paraq_config_new(void);
void paraq_config_free(paraq_config* cfg);

/* Keys: family, modes, order, cutoff, suite (comma-separated list),
 * sigma, star, q, format, jobs, corrupt. Values are parsed from text. */
paraq_status paraq_config_set(paraq_config* cfg, const char* key,
                              const char* value);

/* Runs the selected suites. Returns NULL on configuration or engine
 * errors (status and paraq_last_error() explain); a non-NULL report may
 * still contain failing checks. */
paraq_report* paraq_run(const paraq_config* cfg, paraq_status* status);
void paraq_report_free(paraq_report* rep);

int paraq_report_pass_count(const paraq_report* rep);
int paraq_report_fail_count(const paraq_report* rep);
/* Rendered report in the configured format (text or json). */
const char* paraq_report_render(const paraq_report* rep);

/* Message of the last error raised on this thread, or "". */
const char* paraq_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* PARAQ_H */
