#pragma once

#include "ramanfuse/dataset.hpp"
#include "ramanfuse/models.hpp"
#include "ramanfuse/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmf::pipeline {

// The one configuration file: flat key = value pairs grouped in [section]
// headers, every key listed in the registry below, unknown keys rejected.
// Every CLI flag maps one-to-one onto a key; flags win.
struct run_config {
    // [paths]
    std::string spectra_csv;        // empty: <out_dir>/spectra.csv (the synth output)
    std::string metadata_csv;       // empty: <out_dir>/metadata.csv
    std::string libraries_dir = "data/libraries";
    std::string policy_file;        // empty: built-in default policy
    std::string out_dir = "out";

    // [preprocess]
    spectra::preprocess_config pre;
    double replicate_divergence_k = 1.5;

    // [dataset]
    std::string task = "both";      // polyp_vs_control | crc_vs_control | both
    std::string balance = "unbalanced";
    int kfolds = 5;
    std::size_t loocv_limit = 100;  // run LOOCV only when the cohort is at most this big

    // [synth]
    dataset::synth_spec synth;

    // [models]
    std::string variants = "early,joint,late";
    std::vector<int> early_hidden = {256, 64};
    std::vector<int> joint_branch = {128};
    std::vector<int> joint_head = {64};
    std::vector<int> late_branch = {128, 32};
    std::vector<int> late_head = {8};
    double head_dropout = 0.3;
    models::adam_params adam;
    models::forest_params forest;
    double threshold = 0.5;

    // [explain]
    std::size_t background_rows = 100;
    std::size_t shap_samples = 2048;
    std::size_t lime_samples = 1000;
    double lime_width = -1.0;  // <= 0: 0.75 * sqrt(M)
    std::size_t top_k = 10;
    std::string explain_variant = "joint";

    // [report]
    std::string report_patient;  // empty: first test-split patient

    // [pipeline]
    std::uint64_t seed = 1;
    int jobs = 1;

    std::vector<std::string> variant_list() const;
    models::fusion_spec fusion_spec_for(const std::string& variant) const;
};

// Parse the file (may be empty path: defaults only), then apply
// "section.key=value" overrides in order. Unknown keys or malformed values
// throw config errors.
run_config load_config(const std::string& path, const std::vector<std::string>& overrides);
void apply_override(run_config& cfg, const std::string& assignment);

// Deterministic key = value dump of the resolved configuration (used for
// the run manifest's config hash) and the hash itself.
std::string canonical_dump(const run_config& cfg);
std::uint64_t config_hash(const run_config& cfg);

}  // namespace rmf::pipeline
