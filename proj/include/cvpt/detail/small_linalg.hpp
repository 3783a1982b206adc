#pragma once

// Fixed-size dense kernels templated on the scalar type, so the same code
// runs in double and in extended precision (boost::multiprecision backends).
// Everything here is value-semantic and allocation-free.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace cvpt::detail {

template <typename T, int N>
struct SmallMat {
    std::array<T, static_cast<std::size_t>(N) * N> a{};

    T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

    static SmallMat zero() { return SmallMat{}; }

    static SmallMat identity() {
        SmallMat m;
        for (int i = 0; i < N; ++i) m(i, i) = T(1);
        return m;
    }

    SmallMat transpose() const {
        SmallMat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    SmallMat& operator+=(const SmallMat& o) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }

    friend SmallMat operator+(SmallMat x, const SmallMat& y) { return x += y; }

    friend SmallMat operator*(const SmallMat& x, const SmallMat& y) {
        SmallMat r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const T xik = x(i, k);
                for (int j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    SmallMat& scale(const T& s) {
        for (auto& v : a) v *= s;
        return *this;
    }
};

template <typename T, int N>
T one_norm(const SmallMat<T, N>& m) {
    using std::abs;
    T best(0);
    for (int j = 0; j < N; ++j) {
        T col(0);
        for (int i = 0; i < N; ++i) col += abs(m(i, j));
        if (col > best) best = col;
    }
    return best;
}

template <typename T, int N>
T max_abs(const SmallMat<T, N>& m) {
    using std::abs;
    T best(0);
    for (const auto& v : m.a)
        if (abs(v) > best) best = abs(v);
    return best;
}

// exp(A) by scaling and squaring of a truncated Taylor series. The series is
// summed at ||A/2^s||_1 <= theta until the term falls below the scalar type's
// epsilon, which keeps the routine valid for multiprecision scalars as well.
// No eigendecomposition anywhere, so defective inputs are handled exactly the
// same as diagonalizable ones.
template <typename T, int N>
SmallMat<T, N> matrix_exp_taylor(const SmallMat<T, N>& m) {
    using std::ceil;
    using std::log2;
    const double theta = 0.25;
    const double nrm = static_cast<double>(one_norm(m));
    int squarings = 0;
    if (nrm > theta) squarings = static_cast<int>(ceil(log2(nrm / theta)));

    SmallMat<T, N> b = m;
    T scale(1);
    for (int k = 0; k < squarings; ++k) scale /= T(2);
    b.scale(scale);

    SmallMat<T, N> sum = SmallMat<T, N>::identity();
    SmallMat<T, N> term = SmallMat<T, N>::identity();
    const T eps = std::numeric_limits<T>::epsilon();
    for (int k = 1; k <= 120; ++k) {
        term = term * b;
        term.scale(T(1) / T(k));
        sum += term;
        if (max_abs(term) <= eps * max_abs(sum)) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

// Determinant by Gaussian elimination with partial pivoting.
template <typename T, int N>
T lu_det(SmallMat<T, N> m) {
    using std::abs;
    T det(1);
    for (int c = 0; c < N; ++c) {
        int piv = c;
        for (int r = c + 1; r < N; ++r)
            if (abs(m(r, c)) > abs(m(piv, c))) piv = r;
        if (piv != c) {
            for (int j = 0; j < N; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        if (m(c, c) == T(0)) return T(0);
        det *= m(c, c);
        for (int r = c + 1; r < N; ++r) {
            const T f = m(r, c) / m(c, c);
            for (int j = c; j < N; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

// Smallest eigenvalue of a symmetric matrix by the cyclic Jacobi method.
template <typename T, int N>
T jacobi_min_eigenvalue(SmallMat<T, N> s) {
    using std::abs;
    using std::sqrt;
    const T eps = std::numeric_limits<T>::epsilon();
    for (int sweep = 0; sweep < 60; ++sweep) {
        T off(0);
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += abs(s(p, q));
        T diag(0);
        for (int p = 0; p < N; ++p) diag += abs(s(p, p));
        if (off <= eps * (diag + off)) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                if (abs(s(p, q)) == T(0)) continue;
                const T tau = (s(q, q) - s(p, p)) / (T(2) * s(p, q));
                T t;
                if (tau >= T(0))
                    t = T(1) / (tau + sqrt(T(1) + tau * tau));
                else
                    t = T(-1) / (-tau + sqrt(T(1) + tau * tau));
                const T c = T(1) / sqrt(T(1) + t * t);
                const T sn = t * c;
                for (int k = 0; k < N; ++k) {
                    const T skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < N; ++k) {
                    const T spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
    }
    T best = s(0, 0);
    for (int p = 1; p < N; ++p)
        if (s(p, p) < best) best = s(p, p);
    return best;
}

// V(t) = e^{Mt} V0 e^{M^T t} + \int_0^t e^{M(t-s)} D e^{M^T(t-s)} ds evaluated
// in closed form from one exponential of the augmented matrix
// [[M, D], [0, -M^T]] (the integral block comes out as F12 F11^T).
template <typename T>
SmallMat<T, 4> covariance_closed_form(const SmallMat<T, 4>& m, const SmallMat<T, 4>& d,
                                      const SmallMat<T, 4>& v0, const T& t) {
    SmallMat<T, 8> c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            c(i, j) = m(i, j) * t;
            c(i, 4 + j) = d(i, j) * t;
            c(4 + i, 4 + j) = -m(j, i) * t;
        }
    const SmallMat<T, 8> e = matrix_exp_taylor(c);
    SmallMat<T, 4> f11, f12;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            f11(i, j) = e(i, j);
            f12(i, j) = e(i, 4 + j);
        }
    const SmallMat<T, 4> v = f11 * v0 * f11.transpose() + f12 * f11.transpose();
    SmallMat<T, 4> sym;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sym(i, j) = (v(i, j) + v(j, i)) / T(2);
    return sym;
}

template <typename T>
struct LogNegResult {
    T eta;
    T e_n;  // -ln(eta) clamped at 0; may be +inf if eta underflows to 0
    T sigma;
    T det_v;
    bool unphysical = false;
};

// Logarithmic negativity from the 2x2 block invariants of the covariance
// matrix. eta^2 = (Sigma - sqrt(Sigma^2 - 4 det V))/2 is evaluated in the
// algebraically equivalent form 2 det V / (Sigma + sqrt(...)) which avoids the
// catastrophic cancellation of the textbook expression once Sigma^2 >> det V.
template <typename T>
LogNegResult<T> log_negativity_kernel(const SmallMat<T, 4>& v) {
    using std::log;
    using std::sqrt;
    LogNegResult<T> r{};
    const T det_a = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    const T det_b = v(2, 2) * v(3, 3) - v(2, 3) * v(3, 2);
    const T det_c = v(0, 2) * v(1, 3) - v(0, 3) * v(1, 2);
    r.sigma = det_a + det_b - T(2) * det_c;
    r.det_v = lu_det(v);

    const T flag_tol = T(1e-6);
    T disc = r.sigma * r.sigma - T(4) * r.det_v;
    if (disc < -flag_tol) r.unphysical = true;
    if (disc < T(0)) disc = T(0);
    const T den = r.sigma + sqrt(disc);

    T eta_sq(0);
    if (den > T(0)) {
        eta_sq = T(2) * r.det_v / den;
        if (T(2) * eta_sq < -flag_tol) r.unphysical = true;
        if (eta_sq < T(0)) eta_sq = T(0);
    } else {
        if (r.sigma - sqrt(disc) < -flag_tol) r.unphysical = true;
    }
    r.eta = sqrt(eta_sq);

    // Values of E_N below 1e-12 (eta within 1e-12 of 1) are reported as 0.
    const T zero_band = T(1) - T(1e-12);
    if (r.eta >= zero_band)
        r.e_n = T(0);
    else if (r.eta > T(0))
        r.e_n = -log(r.eta);
    else
        r.e_n = std::numeric_limits<T>::infinity();
    return r;
}

// Smallest eigenvalue of the Hermitian matrix V + i*Omega via the symmetric
// real embedding [[V, -Omega], [Omega, V]] (each eigenvalue appears twice).
template <typename T>
T physicality_margin_kernel(const SmallMat<T, 4>& v) {
    static constexpr int omega[4][4] = {
        {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    SmallMat<T, 8> s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            s(i, j) = v(i, j);
            s(4 + i, 4 + j) = v(i, j);
            s(i, 4 + j) = T(-omega[i][j]);
            s(4 + i, j) = T(omega[i][j]);
        }
    return jacobi_min_eigenvalue(s);
}

}  // namespace cvpt::detail
