#include "cvpt/propagator.hpp"

#include "cvpt/detail/small_linalg.hpp"

namespace cvpt {

namespace {

detail::SmallMat<double, 4> to_small(const Mat4& m) {
    detail::SmallMat<double, 4> s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s(i, j) = m(i, j);
    return s;
}

Mat4 from_small(const detail::SmallMat<double, 4>& s) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = s(i, j);
    return m;
}

}  // namespace

std::vector<double> TimeGrid::times() const {
    std::vector<double> ts(static_cast<std::size_t>(steps) + 1);
    const double h = step();
    for (int i = 0; i <= steps; ++i) ts[static_cast<std::size_t>(i)] = h * i;
    return ts;
}

Mat4 matrix_exp(const Mat4& m, double t) {
    detail::SmallMat<double, 4> s = to_small(m);
    s.scale(t);
    return from_small(detail::matrix_exp_taylor(s));
}

Vec4 evolve_mean(const Mat4& m, const Vec4& mu0, double t) {
    return matrix_exp(m, t) * mu0;
}

Mat4 evolve_covariance(const Mat4& m, const Mat4& d, const Mat4& v0, double t) {
    return from_small(detail::covariance_closed_form<double>(to_small(m), to_small(d),
                                                             to_small(v0), t));
}

std::vector<Mat4> evolve_covariance_ode(const Mat4& m, const Mat4& d, const Mat4& v0,
                                        const TimeGrid& grid) {
    const double h = grid.step();
    auto rhs = [&](const Mat4& v) -> Mat4 { return m * v + v * m.transpose() + d; };

    std::vector<Mat4> out;
    out.reserve(static_cast<std::size_t>(grid.steps) + 1);
    Mat4 v = v0;
    out.push_back(v);
    for (int i = 0; i < grid.steps; ++i) {
        const Mat4 k1 = rhs(v);
        const Mat4 k2 = rhs(v + 0.5 * h * k1);
        const Mat4 k3 = rhs(v + 0.5 * h * k2);
        const Mat4 k4 = rhs(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        v = 0.5 * (v + v.transpose()).eval();
        out.push_back(v);
    }
    return out;
}

std::vector<EvolutionRecord> evolve_series(const SystemConfig& config,
                                           const CoherentInput& input,
                                           const TimeGrid& grid) {
    const Mat4 m = build_dynamic_matrix(config);
    const Mat4 d = build_diffusion_matrix(config);
    const GaussianState init = initial_state(input);

    std::vector<EvolutionRecord> out;
    out.reserve(static_cast<std::size_t>(grid.steps) + 1);
    for (double t : grid.times()) {
        EvolutionRecord rec;
        rec.time = t;
        rec.state.mean = evolve_mean(m, init.mean, t);
        rec.state.cov = evolve_covariance(m, d, init.cov, t);
        out.push_back(rec);
    }
    return out;
}

}  // namespace cvpt
