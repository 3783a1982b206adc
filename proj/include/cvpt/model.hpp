#pragma once

// Physical configuration of the coupled gain/loss waveguide pair with an
// embedded squeezing element, and construction of the quadrature-space drift
// and diffusion matrices. Quadrature ordering is (q_a, p_a, q_b, p_b) with
// mode a the amplifying guide and mode b the damping guide. The covariance
// convention is V_ij = <X_i X_j + X_j X_i> - 2<X_i><X_j>, so the vacuum
// covariance matrix is the identity.

#include <Eigen/Dense>
#include <complex>

namespace cvpt {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

/// Where the squeezing element sits.
enum class Placement { None, LossGuide, GainGuide, Both };

const char* to_string(Placement p);

struct SystemConfig {
    double g = 1.0;        ///< gain rate, >= 0
    double gamma = 1.0;    ///< loss rate, >= 0 (stored positive)
    double J = 1.9;        ///< inter-guide coupling, >= 0
    double r = 0.0;        ///< squeezing magnitude, >= 0
    double theta = 0.0;    ///< squeezing phase (radians)
    Placement placement = Placement::None;
    bool noise_enabled = true;  ///< full dynamics (D != 0) vs Hamiltonian limit
};

struct CoherentInput {
    std::complex<double> alpha{0.0, 0.0};  ///< input amplitude, mode a
    std::complex<double> beta{0.0, 0.0};   ///< input amplitude, mode b
};

/// Mean quadrature vector plus covariance matrix of a two-mode Gaussian state.
struct GaussianState {
    Vec4 mean = Vec4::Zero();
    Mat4 cov = Mat4::Identity();
};

/// Drift matrix M of dX/dt = M X + F(t) for the given squeezing placement.
/// trace(M) = 2(g - gamma) for every placement.
Mat4 build_dynamic_matrix(const SystemConfig& config);

/// Diffusion matrix of the covariance equation dV/dt = M V + V M^T + D.
/// D = 2 diag(g, g, gamma, gamma) at zero reservoir temperature, or zero in
/// the noise-free limit.
Mat4 build_diffusion_matrix(const SystemConfig& config);

/// Coherent input state: mean sqrt(2)(Re a, Im a, Re b, Im b), vacuum
/// fluctuations V = I regardless of the amplitudes.
GaussianState initial_state(const CoherentInput& input);

}  // namespace cvpt
