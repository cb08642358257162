#pragma once

#include "ramanfuse/annotate.hpp"
#include "ramanfuse/config.hpp"
#include "ramanfuse/dataset.hpp"
#include "ramanfuse/explain.hpp"
#include "ramanfuse/models.hpp"
#include "ramanfuse/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace rmf::pipeline {

// Subcommands, in run-all order.
enum class stage_id { synth, preprocess, train, evaluate, explain, report, run_all };

stage_id parse_stage(const std::string& name);
const char* stage_name(stage_id s);

// Runs one stage (or all of them). Artifacts land under cfg.out_dir; a
// machine-readable run manifest (config hash, seed, version, stage list) is
// rewritten after every stage. Throws rmf::error on failure.
void run_stage(const run_config& cfg, stage_id stage);

// ---------------------------------------------------------------------------
// Internals shared by stages and exposed for integration tests.

// One task's assembled cohort with its split plan and fitted meta encoder.
struct task_bundle {
    dataset::cohort cohort;
    dataset::split_plan plan;
    tabular::meta_encoder encoder;
    std::vector<std::string> policy_names;  // excluded comorbidities + groups
    std::map<std::string, double> qc_scores;  // patient-level divergence
    std::vector<std::string> divergent_patients;
};

// Preprocess every replicate in the spectra CSV (errors flag the replicate
// rather than aborting), run replicate QC, and aggregate per patient.
struct preprocess_result {
    std::vector<dataset::replicate_input> normalized;
    std::vector<dataset::replicate_qc> replicate_rows;
    std::vector<std::string> failed_replicates;  // "<sample>_<rep>: reason"
    std::map<std::pair<std::string, int>, std::vector<std::size_t>> replaced;  // despiked channels
    vec grid;
    std::vector<dataset::patient_spectrum> patients;
};

preprocess_result preprocess_spectra(const run_config& cfg);

// Deterministic cohort construction from the on-disk inputs for one task.
task_bundle build_task(const run_config& cfg, dataset::task_kind task);

std::vector<dataset::task_kind> selected_tasks(const run_config& cfg);

// Paths of the stage artifacts.
std::string effective_spectra_csv(const run_config& cfg);
std::string effective_metadata_csv(const run_config& cfg);
std::string model_base_path(const run_config& cfg, dataset::task_kind task, const std::string& variant);

// Explanation artifacts for one patient under one task's model.
struct patient_explanation {
    explain::attribution shap;
    explain::attribution lime;
    explain::consensus_set consensus;
};

patient_explanation explain_patient(const run_config& cfg, const task_bundle& bundle,
                                    const models::fusion_model& model, std::size_t row);

}  // namespace rmf::pipeline
