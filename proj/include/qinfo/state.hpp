// Quantum states and the entanglement / entropy measures computed on them.
//
// All entropies are in bits (log base 2).

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/hermitian.hpp"
#include "qinfo/tensor.hpp"

namespace qinfo {

namespace tol {
inline constexpr double state_norm = 1e-12;
inline constexpr double trace_one = 1e-10;
// Eigenvalues below this contribute nothing to an entropy (0 log 0 = 0).
inline constexpr double entropy_floor = 1e-12;
}  // namespace tol

/// Normalized pure state on a tensor product of subsystems.
class PureState {
  public:
    PureState(Dims dims, std::vector<cplx> amplitudes)
        : dims_(std::move(dims)), amp_(std::move(amplitudes)) {
        if (detail::dims_product(dims_) != amp_.size())
            throw std::invalid_argument("PureState: amplitude count does not match dims");
        double n2 = 0.0;
        for (cplx a : amp_) {
            if (!is_finite(a)) throw std::invalid_argument("PureState: non-finite amplitude");
            n2 += std::norm(a);
        }
        if (std::abs(std::sqrt(n2) - 1.0) > tol::state_norm)
            throw std::invalid_argument("PureState: not normalized within 1e-12");
    }

    const Dims& dims() const { return dims_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    cplx amplitude(std::size_t i) const { return amp_[i]; }

  private:
    Dims dims_;
    std::vector<cplx> amp_;
};

/// Validated density operator: Hermitian, unit trace, positive semidefinite
/// (all within the library tolerances). Construction runs the full check.
class DensityMatrix {
  public:
    DensityMatrix(Dims dims, ComplexMatrix mat) : dims_(std::move(dims)), mat_(std::move(mat)) {
        if (detail::dims_product(dims_) != mat_.dim())
            throw std::invalid_argument("DensityMatrix: dims product does not match matrix");
        if (hermiticity_defect(mat_) > tol::hermiticity)
            throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
        if (std::abs(mat_.trace() - cplx{1.0, 0.0}) > tol::trace_one)
            throw std::invalid_argument("DensityMatrix: trace not 1 within 1e-10");
        for (double lam : hermitian_eig(mat_).values)
            if (lam < -tol::psd_clip)
                throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
    }

    static DensityMatrix maximally_mixed(std::size_t d) {
        return DensityMatrix({d}, cplx{1.0 / static_cast<double>(d), 0.0} *
                                      ComplexMatrix::identity(d));
    }

    const Dims& dims() const { return dims_; }
    std::size_t dim() const { return mat_.dim(); }
    const ComplexMatrix& mat() const { return mat_; }

  private:
    Dims dims_;
    ComplexMatrix mat_;
};

/// Schmidt-form two-qubit state
///   e^{-i phi/2} cos(theta/2) |0>|1>  +  e^{+i phi/2} sin(theta/2) |1>|0>
/// on dims [2, 2]. theta in [0, pi] sets the entanglement; the relative
/// phase phi can be absorbed into the local bases and defaults to 0.
inline PureState schmidt_state(double theta, double phi = 0.0) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::invalid_argument("schmidt_state: theta must be in [0, pi]");
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    std::vector<cplx> amp(4, cplx{0.0, 0.0});
    amp[1] = c * cplx{std::cos(0.5 * phi), -std::sin(0.5 * phi)};  // |0>_A |1>_B
    amp[2] = s * cplx{std::cos(0.5 * phi), +std::sin(0.5 * phi)};  // |1>_A |0>_B
    return PureState({2, 2}, std::move(amp));
}

/// |psi><psi|.
inline DensityMatrix density_from_pure(const PureState& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        const cplx ar = psi.amplitude(r);
        if (ar == cplx{0.0, 0.0}) continue;
        for (std::size_t c = 0; c < n; ++c) m(r, c) = ar * std::conj(psi.amplitude(c));
    }
    return DensityMatrix(psi.dims(), std::move(m));
}

/// Swap the two halves of a bipartite pure state: |a>|b> -> |b>|a>.
inline PureState swap_bipartite(const PureState& psi) {
    if (psi.dims().size() != 2)
        throw std::invalid_argument("swap_bipartite: state must have exactly two subsystems");
    const std::size_t da = psi.dims()[0], db = psi.dims()[1];
    std::vector<cplx> amp(psi.dim());
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < db; ++b) amp[b * da + a] = psi.amplitude(a * db + b);
    return PureState({db, da}, std::move(amp));
}

/// Binary (Shannon) entropy h(x) in bits, with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

/// Von Neumann entropy -Tr rho log2 rho in bits. Eigenvalues below 1e-12
/// contribute zero (continuity of x log x at 0); the result is clamped to
/// the exact range [0, log2 dim].
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lam : hermitian_eig(rho.mat()).values)
        if (lam >= tol::entropy_floor) s -= lam * std::log2(lam);
    const double smax = std::log2(static_cast<double>(rho.dim()));
    return std::min(std::max(s, 0.0), smax);
}

/// Wootters concurrence of a two-qubit state:
/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) over the non-increasing
/// eigenvalues l_i of rho * rho_tilde, with rho_tilde the spin-flipped
/// conjugate (sy (x) sy) rho* (sy (x) sy); conjugation in the computational
/// basis.
///
/// The sqrt(l_i) are taken as the singular values of
///   B = sqrt(rho) (sy (x) sy) sqrt(rho)*,
/// since B B^dagger = sqrt(rho) rho_tilde sqrt(rho) shares the spectrum of
/// rho * rho_tilde. Reading them from the Hermitian block matrix
/// [[0, B], [B^dagger, 0]] keeps everything inside the Jacobi solver and,
/// unlike eigenvalues of the product itself, costs only first-order noise in
/// the vanishing part of the spectrum (rho is rank-deficient for every pure
/// or dephased input, where squared routes lose half the digits).
inline double concurrence(const DensityMatrix& rho) {
    if (rho.dims() != Dims{2, 2})
        throw std::invalid_argument("concurrence: state must be two qubits (dims [2, 2])");

    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const ComplexMatrix root = sqrtm_psd(rho.mat());
    const ComplexMatrix b = root * yy * conjugate(root);

    ComplexMatrix aug(8);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            aug(r, 4 + c) = b(r, c);
            aug(4 + r, c) = std::conj(b(c, r));
        }
    const HermitianEigen eig = hermitian_eig(aug);  // spectrum {+-sigma_i}

    // Non-decreasing order: entries 4..7 are the singular values, largest last.
    double c = 0.0;
    for (std::size_t i = 4; i < 8; ++i)
        c += (i == 7 ? 1.0 : -1.0) * std::max(eig.values[i], 0.0);
    return std::max(c, 0.0);
}

/// <psi| rho |psi>. The overlap of a state with a Hermitian operator is real;
/// an imaginary residue above 1e-10 signals inconsistent inputs.
inline double state_fidelity(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dims() != rho.dims())
        throw std::invalid_argument("state_fidelity: subsystem dimensions do not match");
    const std::size_t n = psi.dim();
    cplx v = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const cplx ar = psi.amplitude(r);
        if (ar == cplx{0.0, 0.0}) continue;
        cplx row = 0.0;
        for (std::size_t c = 0; c < n; ++c) row += rho.mat()(r, c) * psi.amplitude(c);
        v += std::conj(ar) * row;
    }
    if (std::abs(v.imag()) > 1e-10)
        throw std::runtime_error("state_fidelity: imaginary residue above 1e-10");
    return v.real();
}

}  // namespace qinfo
