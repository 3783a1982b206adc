#include "cvpt/precise.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <thread>

#include "cvpt/detail/small_linalg.hpp"
#include "cvpt/propagator.hpp"

namespace cvpt {

namespace {

using f50 = boost::multiprecision::cpp_bin_float_50;
using f100 = boost::multiprecision::cpp_bin_float_100;

// max |V_ij| above which a given precision stops resolving O(1) symplectic
// eigenvalues (roughly eps_T * ||V|| <= 1e-14).
constexpr double kDoubleLimit = 1e6;
constexpr double kF50Limit = 1e30;

template <typename T>
PointObservation observe_with(const Mat4& m, const Mat4& d, const Mat4& v0, double t) {
    detail::SmallMat<T, 4> ms, ds, v0s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ms(i, j) = T(m(i, j));
            ds(i, j) = T(d(i, j));
            v0s(i, j) = T(v0(i, j));
        }
    const auto v = detail::covariance_closed_form<T>(ms, ds, v0s, T(t));
    const auto ln = detail::log_negativity_kernel(v);
    const T margin = detail::physicality_margin_kernel(v);

    PointObservation obs;
    obs.time = t;
    obs.entanglement = EntanglementReport{static_cast<double>(ln.eta),
                                          static_cast<double>(ln.e_n),
                                          static_cast<double>(ln.sigma),
                                          static_cast<double>(ln.det_v), ln.unphysical};
    obs.margin = static_cast<double>(margin);
    return obs;
}

}  // namespace

PointObservation observe_at(const Mat4& m, const Mat4& d, const Mat4& v0, double t) {
    const Mat4 v = evolve_covariance(m, d, v0, t);
    const double scale = v.cwiseAbs().maxCoeff();
    if (std::isfinite(scale) && scale <= kDoubleLimit) {
        PointObservation obs;
        obs.time = t;
        obs.entanglement = log_negativity(v);
        obs.margin = physicality_margin(v);
        return obs;
    }
    if (std::isfinite(scale) && scale <= kF50Limit) return observe_with<f50>(m, d, v0, t);
    return observe_with<f100>(m, d, v0, t);
}

EntanglementReport log_negativity_at(const Mat4& m, const Mat4& d, const Mat4& v0,
                                     double t) {
    return observe_at(m, d, v0, t).entanglement;
}

double physicality_margin_at(const Mat4& m, const Mat4& d, const Mat4& v0, double t) {
    return observe_at(m, d, v0, t).margin;
}

std::vector<PointObservation> observe_series(const Mat4& m, const Mat4& d, const Mat4& v0,
                                             const std::vector<double>& times,
                                             int threads) {
    std::vector<PointObservation> out(times.size());
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min<int>(threads, std::max<std::size_t>(times.size(), 1));

    auto worker = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < times.size();
             i += static_cast<std::size_t>(threads))
            out[i] = observe_at(m, d, v0, times[i]);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace cvpt
