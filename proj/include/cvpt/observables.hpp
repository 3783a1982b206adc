#pragma once

// Scalar observables extracted from a two-mode Gaussian state: output
// intensities, the |<a^dag b> - <a^dag><b>| correlation function, the
// logarithmic negativity, the uncertainty-relation margin, and entanglement
// birth/peak/death detection on a time series.

#include <functional>
#include <optional>
#include <vector>

#include "cvpt/model.hpp"

namespace cvpt {

enum class Mode { A, B };

/// eta is the smallest symplectic eigenvalue of the partially transposed
/// covariance matrix; E_N = max(0, -ln eta). sigma = det A + det B - 2 det C
/// over the 2x2 blocks V = (A C; C^T B). Values of E_N below 1e-12 are
/// reported as exactly 0. `unphysical` flags inputs violating the uncertainty
/// relation beyond roundoff (a noise-free evolved covariance typically does);
/// the numbers are still computed.
struct EntanglementReport {
    double eta = 1.0;
    double e_n = 0.0;
    double sigma = 2.0;
    double det_v = 1.0;
    bool unphysical = false;
};

/// Birth/peak/death of entanglement on a series. Times absent when E_N is
/// identically zero (birth, death) or never returns to zero (death).
struct EsdReport {
    double peak_value = 0.0;
    double peak_time = 0.0;
    std::optional<double> birth_time;
    std::optional<double> death_time;
};

/// <c^dag c> for the chosen mode: (V11 + V22 - 2)/4 + (mu1^2 + mu2^2)/2 with
/// the block picked by the mode.
double photon_number(const GaussianState& state, Mode mode);

/// |<a^dag b> - <a^dag><b>| = (1/4) |(V13 + V24) + i (V14 - V23)|.
double correlation_function(const GaussianState& state);

EntanglementReport log_negativity(const Mat4& v);

/// Smallest eigenvalue of the Hermitian matrix V + i Omega. Non-negative (to
/// roundoff) exactly when V is a physical covariance matrix.
double physicality_margin(const Mat4& v);

/// Peak found by grid maximum; birth/death located by grid sign change of
/// E_N > 1e-12. With an evaluator the crossings are refined by bisection to
/// 1e-6 in time. Throws std::invalid_argument on an empty series.
EsdReport detect_esd(const std::vector<std::pair<double, double>>& series);
EsdReport detect_esd(const std::vector<std::pair<double, double>>& series,
                     const std::function<double(double)>& evaluator);

}  // namespace cvpt
