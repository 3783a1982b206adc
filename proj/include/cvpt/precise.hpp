#pragma once

// Entanglement and physicality evaluated directly from (M, D, V0, t) with
// automatic precision escalation. Once the covariance entries reach ~1e15 the
// smallest partial-transpose symplectic eigenvalue (an O(1) quantity) is no
// longer representable through a double-precision matrix: additive roundoff
// eps*||V|| swamps it. These entry points recompute the propagation in
// 50- or 100-digit floats when the double-precision result would be
// meaningless, and fall back to plain doubles when it is accurate.

#include <vector>

#include "cvpt/model.hpp"
#include "cvpt/observables.hpp"

namespace cvpt {

struct PointObservation {
    double time = 0.0;
    EntanglementReport entanglement;
    double margin = 0.0;  ///< min eig(V + i Omega)
};

EntanglementReport log_negativity_at(const Mat4& m, const Mat4& d, const Mat4& v0,
                                     double t);

double physicality_margin_at(const Mat4& m, const Mat4& d, const Mat4& v0, double t);

/// Both quantities from a single propagation at time t.
PointObservation observe_at(const Mat4& m, const Mat4& d, const Mat4& v0, double t);

/// observe_at over many times, evaluated in parallel. Output order matches
/// `times`; results are identical for any thread count.
std::vector<PointObservation> observe_series(const Mat4& m, const Mat4& d, const Mat4& v0,
                                             const std::vector<double>& times,
                                             int threads = 0);

}  // namespace cvpt
