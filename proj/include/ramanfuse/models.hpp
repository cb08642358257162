#pragma once

#include "ramanfuse/dataset.hpp"
#include "ramanfuse/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rmf::models {

// ---------------------------------------------------------------------------
// Multilayer perceptrons and the three fusion variants

enum class fusion_variant { early, joint, late };

const char* variant_name(fusion_variant v);
fusion_variant parse_variant(const std::string& s);

// Final activation of an MLP: probability heads end in a sigmoid, joint
// branches expose ReLU features.
enum class output_kind { sigmoid, relu };

struct mlp_spec {
    std::vector<int> layer_widths;      // output width per layer; 1 for probability heads
    std::vector<double> dropout_rates;  // per layer, applied after its activation
    output_kind final_act = output_kind::sigmoid;

    void validate(int input_dim) const;
};

struct dense_layer {
    matrix w;  // out x in
    vec b;
};

struct mlp {
    std::vector<dense_layer> layers;
    std::vector<double> dropout_rates;
    output_kind final_act = output_kind::sigmoid;

    bool empty() const { return layers.empty(); }
    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().w.cols; }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().w.rows; }
};

struct adam_params {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int batch_size = 32;
    int max_epochs = 500;
    int patience = 25;  // early stopping on validation accuracy
};

struct scaler {
    vec mean, std;  // std floored at 1e-12 when constant
};

scaler fit_scaler(const matrix& x, const std::vector<std::size_t>& rows);
matrix apply_scaler(const scaler& s, const matrix& x);

struct training_trace {
    std::vector<double> epoch_loss;
    std::vector<double> val_accuracy;
    int best_epoch = -1;
};

// Hyperparameters for one fusion variant. Branch widths apply to the joint
// and late variants; the early variant is a single head on the concatenated
// features.
struct fusion_spec {
    fusion_variant variant = fusion_variant::early;
    std::vector<int> branch_hidden;  // joint: feature widths; late: hidden widths before the 1-unit output
    std::vector<int> head_hidden;
    double head_dropout = 0.3;
    std::uint64_t seed = 1;
    adam_params adam;

    static fusion_spec defaults(fusion_variant v);
};

struct fusion_model {
    fusion_variant variant = fusion_variant::early;
    mlp branch_s, branch_m;  // empty for the early variant
    mlp head;
    scaler spectra_scaler;   // fitted on training rows; meta arrives pre-scaled
    std::size_t d_s = 0, d_m = 0;
    training_trace trace;
    std::uint64_t seed = 0;
};

// Feature-level fusion: [X_s | X_m], spectral columns first.
matrix build_early_fusion(const matrix& xs, const matrix& xm);

// Inference for one sample (dropout disabled). Inputs are unscaled spectra
// and pre-scaled meta; the model applies its own spectra scaler.
double forward(const fusion_model& m, const double* xs_row, const double* xm_row);
vec forward_batch(const fusion_model& m, const matrix& xs, const matrix& xm);

// Mean binary cross-entropy with predictions clamped to [eps, 1-eps],
// eps = 1e-7.
double bce_loss(const std::vector<int>& y, const vec& y_hat);

// Mini-batch Adam on BCE, early stopping on validation accuracy, restoring
// the best-epoch weights. Deterministic under spec.seed. Throws a training
// error if the loss turns non-finite. The late variant trains its branches
// to convergence first, freezes them, then trains the head on their
// probabilities.
fusion_model train(const fusion_spec& spec, const matrix& xs, const matrix& xm,
                   const std::vector<int>& labels, const std::vector<std::size_t>& train_rows,
                   const std::vector<std::size_t>& val_rows);

// Max relative error between analytic gradients and central finite
// differences (h = 1e-5) over every parameter of every submodule, on the
// given batch with dropout disabled. Used by tests and the acceptance suite.
double gradient_check(const fusion_spec& spec, const matrix& xs, const matrix& xm,
                      const std::vector<int>& labels, const std::vector<std::size_t>& rows);

// ---------------------------------------------------------------------------
// Legacy random forest (spectra only)

struct forest_params {
    int n_trees = 500;
    int max_depth = -1;  // unlimited
    int min_leaf = 2;
    bool sqrt_features = true;  // else all features per split
    bool bootstrap = true;
    std::uint64_t seed = 7;
};

struct tree_node {
    int feature = -1;  // -1: leaf
    double threshold = 0.0;
    int left = -1, right = -1;
    double p_pos = 0.0;
};

struct forest_model {
    forest_params params;
    std::size_t n_features = 0;
    std::vector<std::vector<tree_node>> trees;
};

forest_model train_forest(const matrix& x, const std::vector<int>& y,
                          const std::vector<std::size_t>& train_rows, const forest_params& params);
double forest_predict(const forest_model& f, const double* row);
vec forest_predict_batch(const forest_model& f, const matrix& x, const std::vector<std::size_t>& rows);

// ---------------------------------------------------------------------------
// Evaluation

struct eval_report {
    double accuracy = 0.0;
    double precision = 0.0, recall = 0.0, f1 = 0.0;          // positive class
    double precision_neg = 0.0, recall_neg = 0.0, f1_neg = 0.0;  // negative class
    std::optional<double> auc;
    std::string auc_note;  // reason when auc is null
    std::vector<std::pair<double, double>> roc_points;  // (fpr, tpr)
    long tp = 0, fp = 0, fn = 0, tn = 0;
};

// Metrics at the given threshold; ROC swept over every distinct score,
// AUC = trapezoidal integral of the ROC points. A single-class label set
// yields a null AUC with the reason recorded.
eval_report evaluate(const vec& scores, const std::vector<int>& labels, double threshold = 0.5);

// ---------------------------------------------------------------------------
// Cross-validation

enum class cv_scheme { stratified_kfold, loocv };

struct cv_metric {
    double mean = 0.0, stddev = 0.0;  // sample std over folds
    std::size_t n = 0;
};

struct cv_result {
    std::vector<eval_report> folds;
    cv_metric accuracy, precision, recall, f1, auc;
    eval_report pooled;  // metrics over all out-of-fold predictions
};

// Trainer contract: fit on the given rows, return a scorer over any row.
using trainer_fn =
    std::function<std::function<double(std::size_t)>(const std::vector<std::size_t>& train_rows)>;

cv_result cross_validate(std::size_t n, const std::vector<int>& labels, cv_scheme scheme, int k,
                         std::uint64_t seed, const trainer_fn& fit);

// ---------------------------------------------------------------------------
// Serialization: CSX1 container (little-endian, shape-prefixed f64 tensors)
// plus a JSON sidecar with hyperparameters.

struct named_tensor {
    std::string name;
    std::vector<std::uint64_t> dims;
    vec data;
};

void write_csx1(const std::string& path, const std::vector<named_tensor>& tensors);
std::vector<named_tensor> read_csx1(const std::string& path);

// base path -> base.csx1 + base.json
void save_fusion_model(const std::string& base_path, const fusion_model& m);
fusion_model load_fusion_model(const std::string& base_path);
void save_forest_model(const std::string& base_path, const forest_model& f);
forest_model load_forest_model(const std::string& base_path);

}  // namespace rmf::models
