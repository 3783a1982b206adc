#pragma once

// Time evolution of the Gaussian state. The mean evolves through the matrix
// exponential e^{Mt}; the covariance through the closed-form noise integral
// V(t) = e^{Mt} V0 e^{M^T t} + \int_0^t e^{M(t-s)} D e^{M^T(t-s)} ds,
// evaluated step-free from one exponential of the 8x8 augmented block matrix
// [[M, D], [0, -M^T]]. A fixed-step RK4 integrator of
// dV/dt = M V + V M^T + D is kept alongside as an independent oracle.

#include <vector>

#include "cvpt/model.hpp"

namespace cvpt {

struct TimeGrid {
    double t_max = 8.0;
    int steps = 2000;

    double step() const { return t_max / steps; }
    /// Uniform times 0, h, ..., t_max (steps + 1 entries).
    std::vector<double> times() const;
};

struct EvolutionRecord {
    double time = 0.0;
    GaussianState state;
};

/// e^{Mt} by scaling and squaring of a truncated Taylor series (never by
/// eigendecomposition: M is defective at the exceptional point J = g).
Mat4 matrix_exp(const Mat4& m, double t);

/// mu(t) = e^{Mt} mu0. The noise drives have zero mean and do not contribute.
Vec4 evolve_mean(const Mat4& m, const Vec4& mu0, double t);

/// Closed-form covariance propagation; the result is symmetrized.
Mat4 evolve_covariance(const Mat4& m, const Mat4& d, const Mat4& v0, double t);

/// Classic fixed-step RK4 on dV/dt = M V + V M^T + D over the grid. Returns
/// the covariance at every grid time including t = 0. Oracle for
/// evolve_covariance; not used on any production path.
std::vector<Mat4> evolve_covariance_ode(const Mat4& m, const Mat4& d, const Mat4& v0,
                                        const TimeGrid& grid);

/// Full state series at the grid times. Deterministic; grid points are
/// independent closed-form evaluations (no step-to-step error accumulation).
std::vector<EvolutionRecord> evolve_series(const SystemConfig& config,
                                           const CoherentInput& input,
                                           const TimeGrid& grid);

}  // namespace cvpt
