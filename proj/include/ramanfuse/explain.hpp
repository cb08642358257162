#pragma once

#include "ramanfuse/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmf::explain {

// The model under explanation, seen as a black-box scalar function of one
// feature vector.
using model_fn = std::function<double(const vec&)>;

enum class method { shap_exact, shap_kernel, lime };

const char* method_name(method m);

struct attribution {
    std::string sample_id;
    method m = method::shap_exact;
    std::vector<std::string> feature_names;
    vec scores;               // aligned with feature_names
    double base_value = 0.0;  // expected model output over the background
    std::size_t n_perturbations = 0;
    std::uint64_t seed = 0;
    std::optional<double> local_r2;  // lime only; null for a constant model
    bool used_ridge = false;         // kernel regression fell back to ridge

    // Feature indices ordered by |score| descending, ties broken by name.
    std::vector<std::size_t> ranking() const;
};

// Background rows used to stand in for absent features: a coalition's
// missing features take the background column means (the interventional
// mean-imputation reading). At most `max_rows` rows are subsampled with the
// seed.
struct background_set {
    matrix rows;

    static background_set subsample(const matrix& x, const std::vector<std::size_t>& candidates,
                                    std::size_t max_rows, std::uint64_t seed);
    vec column_means() const;
};

// Exact Shapley values by enumeration over all 2^M coalitions. Refuses
// M > 20 (use the kernel variant). Efficiency holds to machine precision:
// base_value + sum(scores) == f(x).
attribution shap_exact(const model_fn& f, const vec& x, const background_set& background,
                       const std::vector<std::string>& names);

// Kernel approximation: weighted least squares over coalitions drawn from
// the Shapley kernel, with the all-on/all-off constraints enforced by
// elimination, so efficiency holds by construction. Enumerates every
// coalition when the budget 2^M - 2 fits inside n_samples. Deterministic
// under the seed; a singular regression falls back to ridge and flags it.
attribution shap_kernel(const model_fn& f, const vec& x, const background_set& background,
                        const std::vector<std::string>& names, std::size_t n_samples,
                        std::uint64_t seed);

struct lime_params {
    std::size_t n_perturbations = 1000;  // >= 50
    double kernel_width = -1.0;          // <= 0: default 0.75 * sqrt(M)
    std::size_t top_k = 10;
    double binary_flip_prob = 0.5;
    std::uint64_t seed = 0;
};

// Local surrogate: Gaussian perturbations for numeric features, flips for
// binary ones (a flip swaps the feature to binary_other[j], so standardised
// binary columns flip between their two encoded levels), proximity weights
// exp(-d^2/width^2), then a weighted linear fit reduced to the top K
// coefficients (the complexity penalty realised as hard selection). Scores
// are the refit coefficients; local_r2 is the weighted R^2 of the K-feature
// surrogate.
attribution lime_explain(const model_fn& f, const vec& x, const std::vector<bool>& is_binary,
                         const vec& binary_other, const std::vector<std::string>& names,
                         const lime_params& params);

struct consensus_entry {
    std::string feature;
    std::size_t shap_rank = 0;  // 1-based
    std::size_t lime_rank = 0;
};

struct consensus_set {
    std::vector<consensus_entry> features;  // ordered by shap rank
    std::size_t k = 0;
};

// Intersection of the top-K features (by |score|, ties by name) of the two
// attributions.
consensus_set consensus(const attribution& shap, const attribution& lime, std::size_t k);

}  // namespace rmf::explain
