// Hermitian spectral toolbox: cyclic Jacobi eigensolver plus the matrix
// functions built on it (unitary exponential, PSD square root).
//
// Jacobi is the right tool at this scale: every matrix in the library is
// 8x8 or smaller, and the sweep order is fixed, so the output is a
// deterministic function of the input bits.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qinfo/complex_matrix.hpp"

namespace qinfo {

namespace tol {
// Gate separating genuine input errors from float noise at this scale.
inline constexpr double hermiticity = 1e-10;
// Eigenvalues of nominally PSD matrices may dip this far below zero.
inline constexpr double psd_clip = 1e-10;
// Jacobi convergence: all off-diagonal magnitudes below this.
inline constexpr double jacobi_offdiag = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;
}  // namespace tol

/// Eigenvalues in non-decreasing order; column i of `vectors` is the
/// orthonormal eigenvector paired with values[i].
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps the strict upper triangle in row-major order, annihilating each
/// off-diagonal element with a complex Givens rotation, until every
/// off-diagonal magnitude is below tol::jacobi_offdiag. Eigenvalues are
/// sorted non-decreasing with the pre-sort position as tie-breaker, so the
/// result is bit-identical across runs.
///
/// Throws std::invalid_argument if max|h - h^dagger| exceeds tol::hermiticity,
/// std::runtime_error if 100 sweeps do not converge (does not happen for the
/// matrix sizes this library targets).
inline HermitianEigen hermitian_eig(const ComplexMatrix& h) {
    if (hermiticity_defect(h) > tol::hermiticity)
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within 1e-10");

    const std::size_t n = h.dim();

    // Work on the exactly-Hermitian average of h and h^dagger.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx{h(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    ComplexMatrix vec = ComplexMatrix::identity(n);

    auto max_offdiag = [&]() {
        double mx = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) mx = std::max(mx, std::abs(a(p, q)));
        return mx;
    };

    int sweep = 0;
    while (max_offdiag() >= tol::jacobi_offdiag) {
        if (++sweep > tol::jacobi_max_sweeps)
            throw std::runtime_error("hermitian_eig: Jacobi failed to converge in 100 sweeps");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx w = a(p, q);
                const double aw = std::abs(w);
                if (aw == 0.0) continue;
                // Phase of the pivot and the real rotation angle that
                // annihilates it: with e = w/|w|, the 2x2 block
                // [[app, |w|],[|w|, aqq]] is rotated like a real Jacobi step.
                const cplx e = w / aw;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * aw);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx se = s * e;         // G(p,q) = s*e
                const cplx sec = std::conj(se);  // -G(q,p)

                // A <- G^dagger A G with G = I except
                // G(p,p)=c, G(p,q)=s*e, G(q,p)=-s*conj(e), G(q,q)=c.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sec * akq;
                    a(k, q) = se * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - se * aqk;
                    a(q, k) = sec * apk + c * aqk;
                }
                // Restore the exact symmetry the rotation targets.
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx{a(p, p).real(), 0.0};
                a(q, q) = cplx{a(q, q).real(), 0.0};

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = vec(k, p), vkq = vec(k, q);
                    vec(k, p) = c * vkp - sec * vkq;
                    vec(k, q) = se * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(order[i], order[i]).real();
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = vec(k, order[i]);
    }
    return out;
}

/// sum_i f(values[i]) v_i v_i^dagger.
template <typename Fn>
ComplexMatrix spectral_apply(const HermitianEigen& eig, Fn&& f) {
    const std::size_t n = eig.values.size();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx fi = f(eig.values[i]);
        if (fi == cplx{0.0, 0.0}) continue;
        for (std::size_t rr = 0; rr < n; ++rr) {
            const cplx vr = eig.vectors(rr, i);
            if (vr == cplx{0.0, 0.0}) continue;
            for (std::size_t cc = 0; cc < n; ++cc)
                r(rr, cc) += fi * vr * std::conj(eig.vectors(cc, i));
        }
    }
    return r;
}

/// e^{i s h} for Hermitian h, via the spectral decomposition.
inline ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s) {
    const HermitianEigen eig = hermitian_eig(h);
    return spectral_apply(eig, [s](double lam) {
        const double phase = s * lam;
        return cplx{std::cos(phase), std::sin(phase)};
    });
}

/// PSD Hermitian square root. Eigenvalues in [-1e-10, 0) are treated as 0;
/// anything below that is a genuine error, not noise.
inline ComplexMatrix sqrtm_psd(const ComplexMatrix& rho) {
    const HermitianEigen eig = hermitian_eig(rho);
    for (double lam : eig.values)
        if (lam < -tol::psd_clip)
            throw std::invalid_argument("sqrtm_psd: eigenvalue below -1e-10, input not PSD");
    return spectral_apply(eig, [](double lam) { return cplx{std::sqrt(std::max(lam, 0.0)), 0.0}; });
}

}  // namespace qinfo
