#include "cvpt/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "cvpt/detail/small_linalg.hpp"

namespace cvpt {

namespace {
constexpr double kZeroThreshold = 1e-12;
}

double photon_number(const GaussianState& state, Mode mode) {
    const int i = (mode == Mode::A) ? 0 : 2;
    const double fluct = (state.cov(i, i) + state.cov(i + 1, i + 1) - 2.0) / 4.0;
    const double coherent =
        (state.mean(i) * state.mean(i) + state.mean(i + 1) * state.mean(i + 1)) / 2.0;
    return fluct + coherent;
}

double correlation_function(const GaussianState& state) {
    const Mat4& v = state.cov;
    const double re = (v(0, 2) + v(1, 3)) / 4.0;
    const double im = (v(0, 3) - v(1, 2)) / 4.0;
    return std::hypot(re, im);
}

EntanglementReport log_negativity(const Mat4& v) {
    detail::SmallMat<double, 4> s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s(i, j) = v(i, j);
    const auto r = detail::log_negativity_kernel(s);
    return EntanglementReport{r.eta, r.e_n, r.sigma, r.det_v, r.unphysical};
}

double physicality_margin(const Mat4& v) {
    Eigen::Matrix4cd h = v.cast<std::complex<double>>();
    h(0, 1) += std::complex<double>(0, 1);
    h(1, 0) += std::complex<double>(0, -1);
    h(2, 3) += std::complex<double>(0, 1);
    h(3, 2) += std::complex<double>(0, -1);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

namespace {

EsdReport detect_esd_impl(const std::vector<std::pair<double, double>>& series,
                          const std::function<double(double)>* evaluator) {
    if (series.empty()) throw std::invalid_argument("detect_esd: empty series");

    std::size_t ipk = 0;
    for (std::size_t i = 1; i < series.size(); ++i)
        if (series[i].second > series[ipk].second) ipk = i;

    EsdReport rep;
    rep.peak_value = series[ipk].second;
    rep.peak_time = series[ipk].first;
    if (rep.peak_value <= kZeroThreshold) return rep;  // identically zero

    auto alive = [](double en) { return en > kZeroThreshold; };

    // Bisect the boundary of {E_N > 0} between a dead and a live time.
    // Falls back to the live grid time when no evaluator is supplied.
    auto refine = [&](double t_dead, double t_live) {
        if (!evaluator) return t_live;
        while (std::abs(t_live - t_dead) > 1e-6) {
            const double mid = 0.5 * (t_dead + t_live);
            if (alive((*evaluator)(mid)))
                t_live = mid;
            else
                t_dead = mid;
        }
        return 0.5 * (t_dead + t_live);
    };

    std::size_t first_live = 0;
    while (!alive(series[first_live].second)) ++first_live;
    rep.birth_time = (first_live > 0)
                         ? refine(series[first_live - 1].first, series[first_live].first)
                         : series.front().first;

    for (std::size_t i = ipk + 1; i < series.size(); ++i) {
        if (!alive(series[i].second)) {
            rep.death_time = evaluator ? refine(series[i].first, series[i - 1].first)
                                       : series[i].first;
            break;
        }
    }
    return rep;
}

}  // namespace

EsdReport detect_esd(const std::vector<std::pair<double, double>>& series) {
    return detect_esd_impl(series, nullptr);
}

EsdReport detect_esd(const std::vector<std::pair<double, double>>& series,
                     const std::function<double(double)>& evaluator) {
    return detect_esd_impl(series, &evaluator);
}

}  // namespace cvpt
