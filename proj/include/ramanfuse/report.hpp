#pragma once

#include "ramanfuse/annotate.hpp"
#include "ramanfuse/explain.hpp"
#include "ramanfuse/tabular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmf::report {

struct model_decision {
    bool available = false;
    bool recommend_colonoscopy = false;
    double probability = 0.0;
};

enum class risk_tier { low, medium, high };

const char* risk_name(risk_tier t);

// Everything the rendered report presents, assembled by compose() and
// turned into text by the two renderers.
struct clinical_report {
    // Patient header
    std::string patient_id;
    std::optional<double> age;
    std::optional<double> bmi;
    double bmi_over_recommended_pct = 0.0;  // (bmi - 25) / 25, floored at 0
    bool smoker = false;
    int smoking_code = 0;
    tabular::sex_code sex = tabular::sex_code::male;

    // History
    std::vector<std::string> conditions_present;
    std::vector<std::string> conditions_absent;
    std::vector<std::string> symptoms_present;
    std::vector<std::string> symptoms_absent;
    std::vector<std::string> excluded_comorbidities;  // policy names
    std::vector<std::string> medications;
    bool previous_malignancy = false;
    bool qc_flagged = false;  // spectrum divergent from the condition baseline

    // Risk
    model_decision polyp_model, crc_model;
    risk_tier tier = risk_tier::low;

    // Explanation
    std::size_t meta_flagged = 0;         // consensus features that are metadata
    std::size_t meta_positive_total = 0;  // positive binary facts in the record
    std::size_t schema_total = 0;         // features the encoder could have produced
    std::vector<std::string> spectral_features;  // consensus V<i> names

    // Metabolic observations per present comorbidity
    std::vector<std::pair<std::string, std::vector<std::string>>> comorbidity_observations;

    // Test results
    std::vector<std::string> polyp_matched, crc_matched;  // metabolites with peak evidence
    std::size_t polyp_total = 0, crc_total = 0;           // library entry counts
    std::vector<std::string> pathways_active, pathways_inactive;

    // Potential false positives
    std::vector<std::string> false_positives;
};

// The combined risk tier is a pure function of the two decisions: both
// positive -> high, exactly one -> medium, none -> low. An unavailable model
// counts as not recommending, and the renderers call it out explicitly.
risk_tier combine_risk(const model_decision& polyp, const model_decision& crc);

struct compose_inputs {
    model_decision polyp, crc;
    explain::consensus_set consensus;
    std::vector<annotate::annotated_feature> annotations;  // of the consensus features
    annotate::overlap_summary overlap;
    tabular::patient_record record;
    std::vector<std::string> excluded_comorbidities;  // policy names, for the history section
    std::size_t schema_total = 0;
    bool qc_flagged = false;
};

clinical_report compose(const compose_inputs& in, const annotate::libraries& libs);

// Prose rendering (the <id>.report.txt flavour).
std::string render_text(const clinical_report& r);
// Itemised rendering (the <id>.report.md flavour); content-identical.
std::string render_structured(const clinical_report& r);

// Recovers the decisions and tallies from the structured rendering; used to
// verify the round-trip.
struct parsed_summary {
    std::string risk;
    bool polyp_recommended = false, crc_recommended = false;
    std::size_t polyp_matched = 0, polyp_total = 0;
    std::size_t crc_matched = 0, crc_total = 0;
    std::size_t false_positive_count = 0;
};

parsed_summary parse_structured(const std::string& text);

}  // namespace rmf::report
