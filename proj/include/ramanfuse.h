/* ramanfuse C API: Raman serum spectra preprocessing, multimodal fusion
 * classifiers, SHAP/LIME consensus explanations and clinical text reports,
 * driven end to end from one configuration.
 *
 * The library is consumed through an opaque pipeline handle and integer
 * status codes; the last error message is retrievable per handle. All paths
 * are UTF-8. Handles are not thread-safe; use one per thread.
 */
#ifndef RAMANFUSE_H
#define RAMANFUSE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rmf_pipeline rmf_pipeline;

typedef enum rmf_status {
    RMF_OK = 0,
    RMF_ERR_CONFIG = 2,   /* bad configuration or arguments */
    RMF_ERR_DATA = 3,     /* malformed or inconsistent input data */
    RMF_ERR_TRAINING = 4, /* optimisation failure */
    RMF_ERR_INTERNAL = 5  /* everything else */
} rmf_status;

/* Library version, e.g. "0.1.0". */
const char* rmf_version(void);

/* Create a pipeline with built-in defaults. Never fails except on OOM
 * (returns NULL). Free with rmf_pipeline_free. */
rmf_pipeline* rmf_pipeline_new(void);
void rmf_pipeline_free(rmf_pipeline* p);

/* Load a configuration file ([section] + key = value lines). Unknown keys
 * are rejected. */
rmf_status rmf_pipeline_load_config(rmf_pipeline* p, const char* path);

/* Set one configuration key, e.g. ("pipeline.seed", "7"). Applied on top of
 * any loaded file; the last write wins. */
rmf_status rmf_pipeline_set(rmf_pipeline* p, const char* key, const char* value);

/* Read back a resolved configuration value. Returns NULL for unknown keys.
 * The pointer stays valid until the next call on this handle. */
const char* rmf_pipeline_get(rmf_pipeline* p, const char* key);

/* Run one stage: "synth", "preprocess", "train", "evaluate", "explain",
 * "report" or "run-all". Artifacts land under the configured out_dir. */
rmf_status rmf_pipeline_run(rmf_pipeline* p, const char* stage);

/* Message for the last failed call on this handle ("" when none). */
const char* rmf_pipeline_last_error(const rmf_pipeline* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAMANFUSE_H */
