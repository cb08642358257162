#pragma once

#include "ramanfuse/linalg.hpp"
#include "ramanfuse/spectra.hpp"
#include "ramanfuse/tabular.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmf::dataset {

enum class task_kind { polyp_vs_control, crc_vs_control };
enum class balance_mode { unbalanced, balanced };

const char* task_name(task_kind t);
task_kind parse_task(const std::string& s);
balance_mode parse_balance(const std::string& s);

// Aligned multimodal cohort: one row per patient, spectral row = mean of the
// QC-passed replicates, labels binarised for the task (control = 0).
struct cohort {
    task_kind task = task_kind::polyp_vs_control;
    balance_mode balance = balance_mode::unbalanced;
    std::vector<std::string> patient_ids;
    vec grid;        // shared wavenumber axis
    matrix spectra;  // n x d_s, normalised intensities
    tabular::encoded_meta meta;
    std::vector<int> labels;
    std::vector<tabular::patient_record> records;  // aligned, post-exclusion
};

struct split_plan {
    std::vector<std::size_t> train, val, test;       // 70 / 10 / 20
    std::vector<std::vector<std::size_t>> folds;     // stratified k-fold test sets
    std::size_t n = 0;
    std::uint64_t seed = 0;

    // LOOCV schedule: fold i = {i}, for all n.
    std::size_t loocv_folds() const { return n; }
};

// Deterministic stratified 70/10/20 split plus stratified k folds. Label
// ratios are preserved within one sample per set.
split_plan make_splits(const std::vector<int>& labels, int k, std::uint64_t seed);
split_plan make_splits(const cohort& c, int k, std::uint64_t seed);

// Per-patient aggregate of normalised replicate spectra, carrying the
// replicate-level QC outcome.
struct patient_spectrum {
    std::string patient_id;
    vec intensities;  // mean over passed replicates
    std::size_t n_passed = 0;
    std::size_t n_replicates = 0;
};

// One preprocessed replicate plus how many channels the despiking step had
// to repair.
struct replicate_input {
    spectra::spectrum s;  // stage == normalized
    std::size_t n_despiked = 0;
};

// Per-replicate QC outcome, one row per input replicate.
struct replicate_qc {
    std::string sample_id;
    int replicate = 0;
    double divergence_score = 0.0;  // against the per-sample mean
    bool passed = false;
    std::string reason;  // empty when passed
};

// Replicate QC within each sample, then mean of the passed replicates:
//  - replicates with more than 5% of channels despiked are unusable;
//  - spike-repaired replicates are used only when fewer than two clean ones
//    remain (a repaired channel keeps part of the smeared spike);
//  - with >= 3 candidates, each replicate is judged by flag_divergent
//    against the per-sample mean at `replicate_k`. A lone gross outlier
//    among n replicates inflates the in-sample std, capping its own score
//    near 2 for n = 6, which is why the default threshold is 1.5 rather
//    than the patient-level 3.
// Patients whose every replicate is discarded are absent from the result.
std::vector<patient_spectrum> aggregate_replicates(const std::vector<replicate_input>& replicates,
                                                   double replicate_k,
                                                   std::vector<replicate_qc>* qc = nullptr);

struct assembly_result {
    cohort c;
    // Patient-level condition QC: patients flagged against their condition
    // baseline, excluded from the cohort.
    std::vector<std::string> divergent_patients;
    std::vector<double> divergence_scores;  // aligned with cohort patients
};

// Joins aggregated spectra with kept records, runs patient-level condition
// QC (flag_divergent against the per-diagnosis baseline), applies balanced
// downsampling over sex x diagnosis cells, filters to the task's classes and
// binarises labels. Meta encoding happens afterwards (fit on the training
// split) via encode_cohort_meta.
assembly_result assemble(const std::vector<patient_spectrum>& patients, const vec& grid,
                         const std::vector<tabular::patient_record>& records, task_kind task,
                         balance_mode balance, double patient_k, std::uint64_t seed);

// Fits the meta encoder on the plan's training rows and encodes every row;
// scaling statistics never see validation or test records.
tabular::meta_encoder encode_cohort_meta(cohort& c, const split_plan& plan);

// ---------------------------------------------------------------------------
// Synthetic cohort generation (desk-scale verification only: this is not a
// serum simulator, it exists to make the pipeline's properties testable).

struct synth_band {
    double center = 0.0;     // cm^-1
    double width = 8.0;      // Gaussian sigma
    double amplitude = 1.0;  // base height
    double amplitude_cv = 0.08;  // patient-to-patient relative std
};

struct synth_spec {
    std::size_t n_patients = 120;
    std::size_t d_s = 701;   // grid points over 400..1800 cm^-1
    double grid_lo = 400.0, grid_hi = 1800.0;
    int replicates = 6;

    // Class composition as fractions of n (control, polyp, cancer).
    double frac_control = 0.4, frac_polyp = 0.3, frac_cancer = 0.3;

    std::vector<synth_band> bands;  // defaults provided when empty
    // Indices into `bands` whose amplitude carries class signal (defaults
    // refer to default_bands(): 845/900/1360 for polyp, 1060/1480/1660 for
    // cancer).
    std::vector<std::size_t> polyp_bands = {8, 9, 16};
    std::vector<std::size_t> cancer_bands = {11, 18, 21};
    double spectra_effect = 0.0;   // class amplitude shift, in population sigmas
    double meta_effect = 0.0;      // shift on flagged metadata columns

    // Metadata schema sizing. Defaults land on the 701-feature schema the
    // report quotes.
    std::size_t n_comorbidities = 12;
    std::size_t n_symptoms = 17;
    std::size_t med_vocab = 662;

    double outlier_fraction = 0.0;  // patients with 6-sigma band displacement
    double outlier_sigma = 6.0;

    double noise_sd = 0.01;         // replicate noise scale
    double cosmic_rate = 0.10;      // spikes per replicate (expected)

    std::uint64_t seed = 1;

    // Total encodable metadata features under this schema.
    std::size_t schema_capacity() const;
};

struct synth_output {
    std::vector<spectra::spectrum> raw_spectra;  // n_patients * replicates
    std::vector<tabular::patient_record> records;
    vec grid;
    // Ground truth, also written to the manifest CSV.
    std::vector<std::string> outlier_ids;
    std::vector<int> true_class;  // diagnosis code per patient (0/1/2)
    std::vector<std::string> patient_ids;
};

synth_output generate_synthetic(const synth_spec& spec);

// Manifest CSV: patient_id,true_class,planted_outlier,planted_bands
void write_manifest_csv(const std::string& path, const synth_spec& spec, const synth_output& out);

// Default band set (phenylalanine anchor at 1003 plus fingerprint bands).
std::vector<synth_band> default_bands();

}  // namespace rmf::dataset
