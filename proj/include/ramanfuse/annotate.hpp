#pragma once

#include "ramanfuse/explain.hpp"
#include "ramanfuse/linalg.hpp"

#include <string>
#include <vector>

namespace rmf::annotate {

enum class direction_hint { higher, lower, either };

// One row of the Raman-shift library: a wavenumber interval, the functional
// group it indicates, and candidate compounds.
struct shift_annotation {
    double range_lo = 0.0, range_hi = 0.0;  // cm^-1
    std::string functional_group;
    std::vector<std::string> candidate_compounds;
    direction_hint direction = direction_hint::either;
};

struct comorbidity_profile {
    std::string name;  // normalised lowercase
    std::vector<std::string> altered_metabolites;
    std::vector<std::string> altered_pathways;
};

struct disease_profile {
    std::string condition;  // "polyp" or "crc"
    std::vector<std::string> metabolites;
    std::vector<std::string> pathways;
};

// The three clinician-editable libraries, loaded from CSV files:
//   shift_annotations.csv      range_start,range_end,group,compounds,direction
//   comorbidity_metabolites.csv  comorbidity,metabolites,pathways
//   disease_metabolites.csv      condition,metabolite,pathway
// List cells are semicolon-delimited. Shipped defaults are illustrative.
struct libraries {
    std::vector<shift_annotation> shifts;
    std::vector<comorbidity_profile> comorbidities;
    std::vector<disease_profile> diseases;  // aggregated per condition

    static libraries load(const std::string& dir);
    const disease_profile* disease(const std::string& condition) const;
    const comorbidity_profile* comorbidity(const std::string& name) const;
};

struct annotated_feature {
    std::string feature;      // V<index> or a metadata column name
    bool spectral = false;
    double wavenumber = 0.0;  // when spectral
    std::vector<shift_annotation> matches;  // every overlapping range
    bool unannotated = false;
};

// Resolves every consensus feature exactly once: spectral features (V<index>
// into the grid) against all overlapping shift ranges, metadata features
// passed through. An index outside the grid is an error.
std::vector<annotated_feature> annotate_features(const std::vector<std::string>& features,
                                                 const vec& grid, const libraries& libs);

struct overlap_summary {
    // Metabolites present in both a patient comorbidity profile and the
    // disease evidence: potential false positives.
    std::vector<std::string> false_positive_metabolites;              // sorted, unique
    std::vector<std::pair<std::string, std::string>> sources;        // metabolite -> comorbidity
};

// Set intersection between the patient's comorbidity metabolite profiles and
// the disease-evidence metabolites.
overlap_summary overlap_report(const std::vector<std::string>& patient_comorbidities,
                               const std::vector<std::string>& disease_evidence,
                               const libraries& libs);

// Spectral feature naming: V<index> refers to grid[index].
bool parse_spectral_feature(const std::string& name, std::size_t* index);

}  // namespace rmf::annotate
