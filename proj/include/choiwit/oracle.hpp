#pragma once

// Numerical ground truth: biquadratic minimization over product vectors
// by alternating 3x3 eigenvector updates, witness expectation values,
// the PPT test, and a best-effort search for PPT entangled states with
// negative witness expectation.

#include "choiwit/choi.hpp"
#include "choiwit/spanning_types.hpp"

#include <cstdint>
#include <string>

namespace choiwit {

struct SearchConfig {
    int restarts = 50;
    int max_iters = 200;
    double conv_tol = 1e-12;
    // Relative zero threshold; effective bound is zero_tol * max(1, ||W||_F).
    double zero_tol = 1e-8;
    double rank_tol = 1e-7;
    std::uint64_t seed = 0;
};

struct MinFormResult {
    double value = 0.0;
    ProductVector argmin;
};

/// Global minimum of <xi (x) eta | W | xi (x) eta> over unit product
/// vectors, best over cfg.restarts deterministic random starts.
MinFormResult min_product_form(const CMat& w, const SearchConfig& cfg);

/// Single restart, deterministic in (cfg.seed, restart_index).
MinFormResult min_product_form_single(const CMat& w, const SearchConfig& cfg,
                                      int restart_index);

struct PositivityReport {
    bool verdict_closed = false;
    double min_found = 0.0;
    ProductVector argmin;
    bool agree = false;
};

PositivityReport positivity_cross_check(const MapParams& p, const SearchConfig& cfg);

/// trace(W rho); the imaginary residual must stay below 1e-10 * scale.
double witness_expectation(const CMat& w, const CMat& rho);

/// Throws std::invalid_argument naming the violated invariant
/// (hermiticity, trace, positivity) when rho is not a density matrix.
void validate_density(const CMat& rho, double tol = 1e-8);

struct PptResult {
    bool ppt = false;
    double margin = 0.0;  // min eigenvalue of rho^Gamma
};

PptResult is_ppt(const CMat& rho, double tol = 1e-10);

enum class DetectStatus { FOUND, NOT_FOUND };

struct DetectionReport {
    CMat state;
    double witness_value = 0.0;
    double ppt_margin = 0.0;
    DetectStatus status = DetectStatus::NOT_FOUND;
    std::string note;
};

/// Gradient descent on trace(W rho) with alternating projections onto the
/// density-matrix and PPT constraint sets. NOT_FOUND is a valid outcome
/// and carries no decomposability claim.
DetectionReport pptes_search(const WitnessMatrix& w, const SearchConfig& cfg);

}  // namespace choiwit
