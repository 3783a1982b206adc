#include "cvpt/model.hpp"

#include <cmath>

namespace cvpt {

const char* to_string(Placement p) {
    switch (p) {
        case Placement::None: return "none";
        case Placement::LossGuide: return "loss";
        case Placement::GainGuide: return "gain";
        case Placement::Both: return "both";
    }
    return "?";
}

Mat4 build_dynamic_matrix(const SystemConfig& c) {
    const double rc = c.r * std::cos(c.theta);
    const double rs = c.r * std::sin(c.theta);
    const double g = c.g, gam = c.gamma, J = c.J;

    Mat4 m;
    switch (c.placement) {
        case Placement::None:
            m << g, 0, 0, J,
                 0, g, -J, 0,
                 0, J, -gam, 0,
                 -J, 0, 0, -gam;
            break;
        case Placement::LossGuide:
            m << g, 0, 0, J,
                 0, g, -J, 0,
                 0, J, -gam + rc, rs,
                 -J, 0, rs, -gam - rc;
            break;
        case Placement::GainGuide:
            m << g + rc, rs, 0, J,
                 rs, g - rc, -J, 0,
                 0, J, -gam, 0,
                 -J, 0, 0, -gam;
            break;
        case Placement::Both:
            m << g + rc, rs, 0, J,
                 rs, g - rc, -J, 0,
                 0, J, -gam + rc, rs,
                 -J, 0, rs, -gam - rc;
            break;
    }
    return m;
}

Mat4 build_diffusion_matrix(const SystemConfig& c) {
    Mat4 d = Mat4::Zero();
    if (!c.noise_enabled) return d;
    d(0, 0) = d(1, 1) = 2.0 * c.g;
    d(2, 2) = d(3, 3) = 2.0 * c.gamma;
    return d;
}

GaussianState initial_state(const CoherentInput& input) {
    GaussianState s;
    const double rt2 = std::sqrt(2.0);
    s.mean << rt2 * input.alpha.real(), rt2 * input.alpha.imag(),
              rt2 * input.beta.real(), rt2 * input.beta.imag();
    s.cov = Mat4::Identity();
    return s;
}

}  // namespace cvpt
