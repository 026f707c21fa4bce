// Trace-preserving quantum operations in operator-sum form, and the channel
// metrics computed on them: entropy exchange (extrinsic and intrinsic routes),
// coherent information, modified entanglement fidelity, and the quantum Fano
// inequality.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/hermitian.hpp"
#include "qinfo/state.hpp"
#include "qinfo/tensor.hpp"

namespace qinfo {

namespace tol {
inline constexpr double kraus_completeness = 1e-10;
// The two entropy-exchange routes must agree at least this well; a larger
// gap means one of them is computing the wrong thing.
inline constexpr double se_route_agreement = 1e-9;
}  // namespace tol

/// Trace-preserving map rho -> sum_j E_j rho E_j^dagger on a fixed input
/// dimension. Completeness sum_j E_j^dagger E_j = I is enforced on
/// construction.
class KrausChannel {
  public:
    explicit KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
        if (ops_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
        dim_ = ops_.front().dim();
        for (const auto& e : ops_)
            if (e.dim() != dim_)
                throw std::invalid_argument("KrausChannel: operators of mixed dimension");
        ComplexMatrix sum(dim_);
        for (const auto& e : ops_) sum = sum + adjoint(e) * e;
        if (max_abs_diff(sum, ComplexMatrix::identity(dim_)) > tol::kraus_completeness)
            throw std::invalid_argument(
                "KrausChannel: sum E^dagger E != I within 1e-10 (not trace preserving)");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

    /// Operator-sum action on a state of matching dimension.
    DensityMatrix apply(const DensityMatrix& rho) const {
        if (rho.dim() != dim_)
            throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
        ComplexMatrix out(dim_);
        for (const auto& e : ops_) out = out + e * rho.mat() * adjoint(e);
        return DensityMatrix(rho.dims(), std::move(out));
    }

    /// Action of I_R (x) channel on a bipartite state with subsystem order
    /// (R, Q), R most significant; the channel acts on Q.
    DensityMatrix apply_extended(const DensityMatrix& rho_rq) const {
        if (rho_rq.dims().size() != 2)
            throw std::invalid_argument("apply_extended: state must be bipartite (R, Q)");
        const std::size_t d_r = rho_rq.dims()[0];
        if (rho_rq.dims()[1] != dim_)
            throw std::invalid_argument("apply_extended: Q dimension does not match channel");
        const ComplexMatrix id_r = ComplexMatrix::identity(d_r);
        ComplexMatrix out(rho_rq.dim());
        for (const auto& e : ops_) {
            const ComplexMatrix lifted = kron(id_r, e);
            out = out + lifted * rho_rq.mat() * adjoint(lifted);
        }
        return DensityMatrix(rho_rq.dims(), std::move(out));
    }

  private:
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> ops_;
};

/// Kraus operators of the channel obtained by coupling Q to an environment E
/// in state rho_env through the joint unitary u (subsystem order (Q, E),
/// Q most significant) and discarding E.
///
/// One operator per computational-basis index j of the environment output:
///   E_j = sum_i sqrt(p_i) <j| u |i>,
/// with {p_i, |i>} the eigensystem of rho_env. The resulting set is always
/// complete; the choice of output basis is one representative of the usual
/// unitary freedom among Kraus sets.
inline KrausChannel kraus_from_dilation(const ComplexMatrix& u, const DensityMatrix& rho_env) {
    const std::size_t d_e = rho_env.dim();
    if (u.dim() % d_e != 0)
        throw std::invalid_argument("kraus_from_dilation: unitary dim not divisible by env dim");
    const std::size_t d_q = u.dim() / d_e;
    if (max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.dim())) > tol::hermiticity)
        throw std::invalid_argument("kraus_from_dilation: u is not unitary within 1e-10");

    const HermitianEigen env = hermitian_eig(rho_env.mat());

    std::vector<ComplexMatrix> ops;
    ops.reserve(d_e);
    for (std::size_t j = 0; j < d_e; ++j) {
        ComplexMatrix ej(d_q);
        for (std::size_t i = 0; i < d_e; ++i) {
            const double w = std::sqrt(std::max(env.values[i], 0.0));
            if (w == 0.0) continue;
            // <j| u |i> as an operator on Q: contract the environment input
            // leg with eigenvector i and fix the output leg at j.
            for (std::size_t a = 0; a < d_q; ++a)
                for (std::size_t b = 0; b < d_q; ++b) {
                    cplx block = 0.0;
                    for (std::size_t e = 0; e < d_e; ++e)
                        block += u(a * d_e + j, b * d_e + e) * env.vectors(e, i);
                    ej(a, b) += w * block;
                }
        }
        ops.push_back(std::move(ej));
    }
    return KrausChannel(std::move(ops));
}

/// Intrinsic environment-side state W_ij = Tr(E_i rho E_j^dagger) over the
/// Kraus indices; a k x k density matrix whose entropy is the entropy
/// exchange.
inline DensityMatrix w_matrix(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim())
        throw std::invalid_argument("w_matrix: dimension mismatch");
    const std::size_t k = ch.size();
    ComplexMatrix w(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            w(i, j) = (ch.ops()[i] * rho.mat() * adjoint(ch.ops()[j])).trace();
    return DensityMatrix({k}, std::move(w));
}

/// Choi matrix sum_{kl} |k><l| (x) E(|k><l|); two Kraus sets generate the
/// same channel iff their Choi matrices coincide.
inline ComplexMatrix choi_matrix(const KrausChannel& ch) {
    const std::size_t d = ch.dim();
    ComplexMatrix out(d * d);
    for (const auto& e : ch.ops())
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        out(k * d + a, l * d + b) += e(a, k) * std::conj(e(b, l));
    return out;
}

namespace detail {

// S(rho_RQ') with the S(W) cross-check, reusing an already-evolved state.
inline double entropy_exchange_checked(const KrausChannel& ch, const DensityMatrix& rho_rq,
                                       const DensityMatrix& rho_rq_out) {
    const double extrinsic = von_neumann_entropy(rho_rq_out);
    const DensityMatrix rho_q{{ch.dim()},
                              partial_trace(rho_rq.mat(), rho_rq.dims(), {1})};
    const double intrinsic = von_neumann_entropy(w_matrix(ch, rho_q));
    if (std::abs(extrinsic - intrinsic) > tol::se_route_agreement)
        throw std::runtime_error("entropy_exchange: S(rho_RQ') and S(W) disagree beyond 1e-9");
    return extrinsic;
}

}  // namespace detail

/// Entropy exchange of the channel on a jointly pure (R, Q) input: the
/// entropy of the evolved joint state. Computed both ways -- extrinsically
/// as S(rho_RQ') and intrinsically as S(W) on the reduced input -- and
/// cross-checked to 1e-9 before the extrinsic value is returned.
inline double entropy_exchange(const KrausChannel& ch, const DensityMatrix& rho_rq) {
    return detail::entropy_exchange_checked(ch, rho_rq, ch.apply_extended(rho_rq));
}

/// Coherent information S(rho_Q') - S(rho_RQ'); negative values are allowed
/// (and are the classical regime).
inline double coherent_information(const KrausChannel& ch, const DensityMatrix& rho_rq) {
    const DensityMatrix rho_out = ch.apply_extended(rho_rq);
    const DensityMatrix rho_q_out{{ch.dim()},
                                  partial_trace(rho_out.mat(), rho_out.dims(), {1})};
    return von_neumann_entropy(rho_q_out) -
           detail::entropy_exchange_checked(ch, rho_rq, rho_out);
}

namespace detail {

// <psi| (1 (x) U) rho (1 (x) U)^dagger |psi> for a qubit-side unitary given
// by ZYZ angles; evaluated as <w| rho |w> with w = (1 (x) U^dagger) psi.
struct MefObjective {
    const DensityMatrix& rho_out;
    const PureState& psi;

    double operator()(double alpha, double beta, double gamma) const {
        // U = e^{i alpha sz/2} e^{i beta sy/2} e^{i gamma sz/2}
        const double ca = std::cos(0.5 * alpha), sa = std::sin(0.5 * alpha);
        const double cb = std::cos(0.5 * beta), sb = std::sin(0.5 * beta);
        const double cg = std::cos(0.5 * gamma), sg = std::sin(0.5 * gamma);
        const cplx ea{ca, sa}, eg{cg, sg};
        // u = [[ea*cb*eg, ea*sb*conj(eg)], [-conj(ea)*sb*eg, conj(ea)*cb*conj(eg)]]
        const cplx u00 = ea * cb * eg;
        const cplx u01 = ea * sb * std::conj(eg);
        const cplx u10 = -std::conj(ea) * sb * eg;
        const cplx u11 = std::conj(ea) * cb * std::conj(eg);

        const std::size_t d_r = psi.dims()[0];
        const std::size_t n = psi.dim();
        std::vector<cplx> w(n);
        for (std::size_t r = 0; r < d_r; ++r) {
            const cplx a0 = psi.amplitude(2 * r), a1 = psi.amplitude(2 * r + 1);
            // U^dagger block action
            w[2 * r] = std::conj(u00) * a0 + std::conj(u10) * a1;
            w[2 * r + 1] = std::conj(u01) * a0 + std::conj(u11) * a1;
        }
        cplx v = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            cplx row = 0.0;
            for (std::size_t c = 0; c < n; ++c) row += rho_out.mat()(r, c) * w[c];
            v += std::conj(w[r]) * row;
        }
        return v.real();
    }
};

// Deterministic maximization: 24^3 ZYZ-angle grid, then coordinate descent
// with step halving down to 1e-7. The grid contains (0,0,0) = identity.
inline double mef_over_unitaries(const DensityMatrix& rho_out, const PureState& psi) {
    const MefObjective f{rho_out, psi};

    constexpr int kGrid = 24;
    const double two_pi = 2.0 * std::numbers::pi;
    double best = -1.0, ba = 0.0, bb = 0.0, bg = 0.0;
    for (int ia = 0; ia < kGrid; ++ia)
        for (int ib = 0; ib < kGrid; ++ib)
            for (int ig = 0; ig < kGrid; ++ig) {
                const double a = two_pi * ia / kGrid;
                const double b = std::numbers::pi * ib / kGrid;
                const double g = two_pi * ig / kGrid;
                const double v = f(a, b, g);
                if (v > best) {
                    best = v;
                    ba = a;
                    bb = b;
                    bg = g;
                }
            }

    double angle[3] = {ba, bb, bg};
    double step = two_pi / kGrid;
    while (step >= 1e-7) {
        bool improved = false;
        for (double& x : angle) {
            const double x0 = x;
            x = x0 + step;
            const double vp = f(angle[0], angle[1], angle[2]);
            x = x0 - step;
            const double vm = f(angle[0], angle[1], angle[2]);
            if (vp > best && vp >= vm) {
                best = vp;
                x = x0 + step;
                improved = true;
            } else if (vm > best) {
                best = vm;
                improved = true;  // x already holds x0 - step
            } else {
                x = x0;
            }
        }
        if (!improved) step *= 0.5;
    }

    if (best > 1.0 + 1e-12)
        throw std::runtime_error("mef: fidelity above 1, inputs are inconsistent");
    return std::min(best, 1.0);
}

}  // namespace detail

/// Modified entanglement fidelity: max over single-qubit unitaries U of
///   <psi| (1 (x) U) rho_RQ' (1 (x) U)^dagger |psi>.
///
/// The maximization runs over SU(2) (a global phase cancels in the
/// conjugation), parameterized by ZYZ angles. Deterministic: a 24^3 coarse
/// grid followed by coordinate descent with step halving down to 1e-7.
/// U = I is on the grid, so the result never falls below the plain
/// entanglement fidelity.
inline double mef(const KrausChannel& ch, const PureState& psi_rq) {
    if (ch.dim() != 2)
        throw std::invalid_argument("mef: optimizer is defined for qubit channels only");
    if (psi_rq.dims().size() != 2 || psi_rq.dims()[1] != 2)
        throw std::invalid_argument("mef: state must be bipartite with a qubit Q side");
    return detail::mef_over_unitaries(ch.apply_extended(density_from_pure(psi_rq)), psi_rq);
}

struct FanoBound {
    double lhs;    // h(F_e) + (1 - F_e) log2(d^2 - 1), bits
    double slack;  // lhs - S_e; the Fano inequality says this is >= 0
};

/// Both sides of the quantum Fano inequality for Hilbert dimension d.
inline FanoBound fano_check(double f_e, double s_e, std::size_t d) {
    if (!(f_e >= 0.0 && f_e <= 1.0))
        throw std::invalid_argument("fano_check: fidelity outside [0, 1]");
    if (!(s_e >= 0.0)) throw std::invalid_argument("fano_check: negative entropy exchange");
    if (d < 2) throw std::invalid_argument("fano_check: dimension must be >= 2");
    const double dd = static_cast<double>(d);
    const double lhs = binary_entropy(f_e) + (1.0 - f_e) * std::log2(dd * dd - 1.0);
    return {lhs, lhs - s_e};
}

/// One configuration's full metric bundle.
struct ChannelMetrics {
    double entropy_exchange;     // bits
    double coherent_information;  // bits
    double mef;                  // in [0, 1]
    double fano_lhs;             // bits
    double fano_slack;           // bits, >= 0 up to float noise
};

/// All five metrics for a channel on a pure (R, Q) input, sharing a single
/// extended-channel evaluation.
inline ChannelMetrics metrics(const KrausChannel& ch, const PureState& psi_rq) {
    const DensityMatrix rho_in = density_from_pure(psi_rq);
    const DensityMatrix rho_out = ch.apply_extended(rho_in);

    const double s_e = detail::entropy_exchange_checked(ch, rho_in, rho_out);
    const DensityMatrix rho_q_out{{ch.dim()},
                                  partial_trace(rho_out.mat(), rho_out.dims(), {1})};
    const double i_e = von_neumann_entropy(rho_q_out) - s_e;
    if (ch.dim() != 2)
        throw std::invalid_argument("metrics: MEF optimizer requires a qubit channel");
    const double f_e = detail::mef_over_unitaries(rho_out, psi_rq);
    const FanoBound fano = fano_check(f_e, s_e, ch.dim());
    if (fano.slack < -1e-9)
        throw std::runtime_error("metrics: Fano inequality violated beyond float noise");
    return {s_e, i_e, f_e, fano.lhs, fano.slack};
}

}  // namespace qinfo
