#ifndef KZD_H
#define KZD_H

#include <stddef.h>

#if defined(KZD_BUILDING)
#define KZD_API __attribute__((visibility("default")))
#else
#define KZD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kzd_status {
    KZD_OK = 0,
    KZD_MISMATCH = 1,      /* command ran; a check failed */
    KZD_EINVAL = 2,        /* bad argument or configuration */
    KZD_EIO = 3,           /* unreadable or malformed input file */
    KZD_EINTERNAL = 4      /* unexpected failure */
} kzd_status;

typedef struct kzd_config kzd_config;
typedef struct kzd_report kzd_report;

KZD_API const char* kzd_version(void);
/* Message for the last failing call on this thread; never NULL. */
KZD_API const char* kzd_last_error(void);

KZD_API kzd_config* kzd_config_new(void);
KZD_API void kzd_config_free(kzd_config* cfg);
KZD_API kzd_status kzd_config_set_catalog(kzd_config* cfg, const char* path);
KZD_API kzd_status kzd_config_set_max_cosets(kzd_config* cfg, long max_cosets); /* >= 1000 */
KZD_API kzd_status kzd_config_set_cache_dir(kzd_config* cfg, const char* dir);
KZD_API kzd_status kzd_config_set_format(kzd_config* cfg, const char* format);   /* text, json, csv */
KZD_API kzd_status kzd_config_set_jobs(kzd_config* cfg, int jobs);               /* >= 1 */
KZD_API kzd_status kzd_config_set_extended(kzd_config* cfg, int on);
KZD_API kzd_status kzd_config_set_witnesses(kzd_config* cfg, int on);
/* kemperman, hamidoune, odd-unit, census-bound */
KZD_API kzd_status kzd_config_disable_oracle(kzd_config* cfg, const char* name);

/* Commands. On KZD_OK or KZD_MISMATCH *out receives a report the caller frees. */
KZD_API kzd_status kzd_table1(const kzd_config* cfg, kzd_report** out);
KZD_API kzd_status kzd_catalog_verify(const kzd_config* cfg, kzd_report** out);
/* ns: even orders in 4..20; orders above 16 require the extended flag. */
KZD_API kzd_status kzd_census(const kzd_config* cfg, const int* ns, size_t count, kzd_report** out);
KZD_API kzd_status kzd_bounds(const kzd_config* cfg, kzd_report** out);
/* Classify one relator set such as "h2^2*h3^-2*h2" (comma-separated for several). */
KZD_API kzd_status kzd_classify(const kzd_config* cfg, const char* relators, kzd_report** out);
/* One relator list per line (blank lines and '#' comments skipped); output is one JSON record per line. */
KZD_API kzd_status kzd_classify_batch(const kzd_config* cfg, const char* lines, kzd_report** out);

/* Rendered output in the configured format; owned by the report. */
KZD_API const char* kzd_report_output(const kzd_report* r);
/* 1 if every check in the report passed. */
KZD_API int kzd_report_ok(const kzd_report* r);
KZD_API void kzd_report_free(kzd_report* r);

#ifdef __cplusplus
}
#endif

#endif
