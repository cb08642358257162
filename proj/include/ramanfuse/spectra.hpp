#pragma once

#include "ramanfuse/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rmf::spectra {

// Preprocessing stages, in the only order they may advance.
enum class stage { raw, smoothed, background_corrected, despiked, normalized };

enum class qc_state { unchecked, passed, flagged_divergent };

const char* stage_name(stage s);
const char* qc_name(qc_state q);

// One Raman measurement: a wavenumber axis (cm^-1, strictly increasing) and
// an intensity vector of the same length, with provenance and QC flags.
struct spectrum {
    std::string sample_id;
    int replicate_index = 0;
    vec wavenumbers;
    vec intensities;
    stage st = stage::raw;
    qc_state qc = qc_state::unchecked;
};

// Checks the structural invariants (monotone axis, matching lengths, >= 5
// points); throws a data error when violated.
void validate(const spectrum& s);

struct preprocess_config {
    int sg_half_width = 5;             // m: window is 2m+1 points
    int sg_order = 3;                  // fit order, < 2m+1
    int bg_degree = 5;                 // fluorescence polynomial degree
    double cosmic_threshold_k = 8.0;   // T = median + k * 1.4826 * MAD
    double phe_window_lo = 995.0;      // phenylalanine search window, cm^-1
    double phe_window_hi = 1010.0;
    double phe_scale = 1.0;            // C: anchor intensity after normalisation
    double baseline_divergence_k = 3.0;

    // Throws a config error if any bound is violated.
    void validate() const;
};

// Per-condition reference: pointwise mean and sample std over N member
// spectra on a common grid.
struct condition_baseline {
    std::string condition_label;
    vec mean_spectrum;
    vec pointwise_std;
    std::size_t n_members = 0;
};

// Smoothing weights for one Savitzky-Golay evaluation point: least-squares
// polynomial fit over positions [-left, +right] relative to the point,
// evaluated at 0. The central (left == right == m) weights are cached per
// (m, order).
vec savitzky_golay_weights(int left, int right, int order);

// (a) Savitzky-Golay smoothing. Edge points use shrinking-window refits with
// the order clamped to the available window, so polynomials of degree <=
// order pass through unchanged everywhere.
spectrum savitzky_golay(const spectrum& s, int half_width, int order);

// (b) Fluorescence background subtraction: iterative polynomial fitting
// (fit, clip points above the fit to the fit, refit) until the baseline
// moves by < 1e-12 relative or 100 iterations.
spectrum correct_background(const spectrum& s, int degree);

struct despike_result {
    spectrum s;
    std::vector<std::size_t> replaced_indices;
};

// Robust spike threshold: median + k * 1.4826 * MAD.
double cosmic_threshold(const vec& intensities, double k);

// (c) Cosmic ray removal. A single pass over the original values: every
// interior point >= T becomes the mean of its original neighbours; an
// endpoint >= T takes its single neighbour's original value.
despike_result despike_with_threshold(const spectrum& s, double threshold);
despike_result remove_cosmic_rays(const spectrum& s, double k);

// (d) Normalisation to the phenylalanine peak: I' = (I / I_Phe) * C with
// I_Phe the maximum intensity inside the window. The anchor point comes out
// as exactly C. Throws a data error on a non-positive peak (the caller flags
// the spectrum rather than passing it through).
spectrum normalize_to_phenylalanine(const spectrum& s, double window_lo, double window_hi, double scale);

// Full Step-1 chain on a raw spectrum.
despike_result preprocess(const spectrum& raw, const preprocess_config& cfg);

// Pointwise mean and sample std over >= 2 normalised spectra sharing a grid.
condition_baseline compute_baseline(const std::vector<spectrum>& members, const std::string& condition_label);

struct divergence_decision {
    double score = 0.0;
    qc_state decision = qc_state::unchecked;
};

// Mean absolute z-score of s against the baseline (std floored at 1e-9);
// score > k flags the spectrum as divergent. Flagged spectra are excluded
// from training and called out in the clinical report.
divergence_decision flag_divergent(const spectrum& s, const condition_baseline& b, double k);

// CSV layout: first column `wavenumber`, one column per replicate named
// `<sample_id>_<replicate>`.
std::vector<spectrum> read_spectra_csv(const std::string& path);
void write_spectra_csv(const std::string& path, const std::vector<spectrum>& spectra);

}  // namespace rmf::spectra
