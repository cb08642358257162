#pragma once

#include "ramanfuse/linalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rmf::tabular {

enum class sex_code { male, female };

// Diagnosis labels follow the cohort convention: 0 early cancer, 1 control,
// 2 polyp.
enum class diagnosis_code { early_cancer = 0, control = 1, polyp = 2 };

const char* sex_name(sex_code s);
const char* diagnosis_name(diagnosis_code d);

struct patient_record {
    std::string patient_id;
    std::optional<double> age;   // years; missing cells are imputed at encode time
    sex_code sex = sex_code::male;
    std::optional<double> bmi;   // kg/m^2
    int smoking_status = 0;      // one of {0, 1, 2, 4}
    diagnosis_code diagnosis = diagnosis_code::control;
    std::map<std::string, bool> comorbidity_flags;
    std::vector<std::string> medications;  // normalised names
    bool previous_malignancy = false;
    std::map<std::string, bool> symptoms;
};

void validate(const patient_record& r);

// Lowercase, whitespace collapsed to single spaces. Applied to medication,
// comorbidity and group names so the exclusion policy matches reliably.
std::string normalize_name(const std::string& s);

struct exclusion_policy {
    std::set<std::string> excluded_comorbidities;
    std::set<std::string> excluded_patient_groups;

    // The named exclusions shipped by default (Lynch syndrome etc. plus the
    // sensitive patient groups).
    static exclusion_policy defaults();
    // Key-value file: `excluded_comorbidity = <name>` / `excluded_group =
    // <name>`, one per line, repeated keys accumulate.
    static exclusion_policy load(const std::string& path);
};

struct exclusion_result {
    std::vector<patient_record> kept;
    std::vector<std::pair<std::string, std::string>> removed;  // patient_id, reason
    std::vector<std::string> dropped_columns;                  // flag names removed from kept records
};

// Removes any record carrying an excluded comorbidity or group flag and
// drops those flag columns from every kept record, so the encoder can never
// see them. An empty kept set halts the pipeline.
exclusion_result apply_exclusions(const std::vector<patient_record>& records, const exclusion_policy& policy);

// Fitted encoding schema: which columns exist, imputation medians, and the
// standardisation statistics — all derived from the training split only.
struct meta_encoder {
    struct numeric_field {
        std::string name;
        double median = 0.0;
    };
    std::vector<numeric_field> numerics;   // age, bmi
    std::vector<int> smoking_codes;        // observed in training
    std::vector<std::string> comorb_names;
    std::vector<std::string> symptom_names;
    std::vector<std::string> med_vocab;    // training-split vocabulary

    std::vector<std::string> feature_names;  // final kept columns, sorted
    vec col_mean, col_std;                   // per kept column, training stats
    std::size_t schema_capacity = 0;         // possible features before constant-drop
};

struct encoded_meta {
    std::vector<std::string> row_ids;
    matrix m;  // n x d_m, standardised
    std::vector<std::string> feature_names;
    vec scaler_mean, scaler_std;
    std::size_t schema_capacity = 0;
    std::size_t unseen_medication_tally = 0;  // inference-time drugs with no column
};

// Fit on the training records: learns vocabularies, imputation medians, and
// per-column mean/std; drops columns constant on the training split.
meta_encoder fit_encoder(const std::vector<patient_record>& training_records);

// Apply a fitted encoder. Unseen medications map to no column and are
// counted, never fatal.
encoded_meta encode(const meta_encoder& enc, const std::vector<patient_record>& records);

// Metadata CSV: one row per patient with canonical columns; medications are
// a single semicolon-delimited cell; comorbidity and symptom flags are 0/1
// columns prefixed `comorb_` / `symptom_`.
std::vector<patient_record> read_metadata_csv(const std::string& path);
void write_metadata_csv(const std::string& path, const std::vector<patient_record>& records);

}  // namespace rmf::tabular
