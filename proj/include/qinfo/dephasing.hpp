// Two entangled qubits A and B, with A coupled to a control qubit C that
// starts maximally mixed. The coupling commutes with sigma_z on A, so A
// dephases: populations are fixed and coherences shrink by cos(lambda t).
//
// Everything observable here exists twice: a closed-form expression and a
// brute-force route through the tripartite evolution. evaluate_point computes
// both and refuses to return if they disagree, which is the library's main
// self-check.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qinfo/channel.hpp"
#include "qinfo/complex_matrix.hpp"
#include "qinfo/hermitian.hpp"
#include "qinfo/state.hpp"
#include "qinfo/tensor.hpp"

namespace qinfo {

namespace tol {
// Closed-form vs brute-force agreement; two orders above the linear-algebra
// noise floor.
inline constexpr double analytic_numeric = 1e-9;
}  // namespace tol

/// Model configuration. Only the product lambda*t enters any result, so it
/// is stored as the single dimensionless field lambda_t.
struct ModelParams {
    double theta;         // entanglement angle, in [0, pi]
    double phi = 0.0;     // relative phase of the initial state
    double lambda_t = 0.0;

    void validate() const {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw std::invalid_argument("ModelParams: theta must be in [0, pi]");
        if (!std::isfinite(phi) || !std::isfinite(lambda_t))
            throw std::invalid_argument("ModelParams: non-finite parameter");
    }
};

/// One grid point with every metric computed along both routes.
struct ModelPoint {
    ModelParams params;
    double concurrence_analytic = 0.0;
    double concurrence_numeric = 0.0;
    double se_analytic = 0.0;   // bits
    double se_numeric = 0.0;    // bits
    double ie_analytic = 0.0;   // bits
    double ie_numeric = 0.0;    // bits
    double mef_numeric = 0.0;   // NaN when the MEF optimization was skipped
    double fano_lhs = 0.0;      // bits; NaN when MEF was skipped
    double fano_slack = 0.0;    // bits; NaN when MEF was skipped
};

/// Initial state of (A, B).
inline PureState initial_state(const ModelParams& p) {
    p.validate();
    return schmidt_state(p.theta, p.phi);
}

/// Joint unitary on (A, C): e^{-i lambda t (sigma_z (x) sigma_z) / 2},
/// diagonal phases (e^{-i lt/2}, e^{+i lt/2}, e^{+i lt/2}, e^{-i lt/2}).
/// Built through the spectral exponential rather than hand-coded, so the
/// brute-force route exercises the full pipeline.
inline ComplexMatrix interaction_unitary(double lambda_t) {
    return expm_i_hermitian(kron(pauli_z(), pauli_z()), -0.5 * lambda_t);
}

/// Brute-force evolution: build the tripartite state on (A, B, C), apply the
/// (A, C) unitary embedded into the full space, trace out C.
inline DensityMatrix evolve_numeric(const ModelParams& p) {
    p.validate();
    const DensityMatrix rho_ab = density_from_pure(initial_state(p));
    const Dims dims{2, 2, 2};  // (A, B, C)
    const ComplexMatrix lam = kron(rho_ab.mat(), cplx{0.5, 0.0} * ComplexMatrix::identity(2));
    const ComplexMatrix u_full = embed(interaction_unitary(p.lambda_t), dims, {0, 2});
    const ComplexMatrix evolved = u_full * lam * adjoint(u_full);
    return DensityMatrix({2, 2}, partial_trace(evolved, dims, {0, 1}));
}

/// Closed form of the evolved (A, B) state: populations cos^2(theta/2) and
/// sin^2(theta/2) on |01>, |10>, coherence
/// cos(lt) cos(theta/2) sin(theta/2) e^{-i phi}.
inline DensityMatrix rho_ab_analytic(const ModelParams& p) {
    p.validate();
    const double c = std::cos(0.5 * p.theta), s = std::sin(0.5 * p.theta);
    const cplx phase{std::cos(p.phi), -std::sin(p.phi)};
    const cplx coherence = std::cos(p.lambda_t) * c * s * phase;
    ComplexMatrix m(4);
    m(1, 1) = c * c;
    m(2, 2) = s * s;
    m(1, 2) = coherence;
    m(2, 1) = std::conj(coherence);
    return DensityMatrix({2, 2}, std::move(m));
}

/// The dephasing Kraus pair in closed form:
///   E_0 = (1/sqrt 2) e^{-i sigma_z lt/2},  E_1 = (1/sqrt 2) e^{+i sigma_z lt/2}.
inline std::vector<ComplexMatrix> dephasing_kraus_pair(double lambda_t) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const cplx lo{std::cos(0.5 * lambda_t), -std::sin(0.5 * lambda_t)};
    return {ComplexMatrix::from({{inv_sqrt2 * lo, 0.0}, {0.0, inv_sqrt2 * std::conj(lo)}}),
            ComplexMatrix::from({{inv_sqrt2 * std::conj(lo), 0.0}, {0.0, inv_sqrt2 * lo}})};
}

/// The channel seen by qubit A, generated from the unitary dilation with the
/// maximally mixed control and cross-checked (as a map, via Choi matrices)
/// against the closed-form Kraus pair.
inline KrausChannel model_channel(double lambda_t) {
    const KrausChannel ch =
        kraus_from_dilation(interaction_unitary(lambda_t), DensityMatrix::maximally_mixed(2));
    const KrausChannel closed(dephasing_kraus_pair(lambda_t));
    if (max_abs_diff(choi_matrix(ch), choi_matrix(closed)) > 1e-12)
        throw std::runtime_error("model_channel: dilation disagrees with the closed form");
    return ch;
}

/// C = sin(theta) |cos(lambda t)|.
inline double concurrence_analytic(const ModelParams& p) {
    p.validate();
    return std::sin(p.theta) * std::abs(std::cos(p.lambda_t));
}

/// Closed form of the intrinsic environment-side state W for the model.
inline DensityMatrix w_analytic(const ModelParams& p) {
    p.validate();
    const cplx off =
        0.5 * cplx{std::cos(p.lambda_t), -std::sin(p.lambda_t) * std::cos(p.theta)};
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = off;
    m(1, 0) = std::conj(off);
    return DensityMatrix({2}, std::move(m));
}

/// Closed form of the entropy exchange, in bits: the binary entropy of
/// (1 +- r)/2 with r = sqrt(cos^2(lt) + cos^2(theta) sin^2(lt)), written out
/// as the explicit two-term sum.
inline double se_analytic(const ModelParams& p) {
    p.validate();
    const double cl = std::cos(p.lambda_t), sl = std::sin(p.lambda_t);
    const double ct = std::cos(p.theta);
    const double r = std::sqrt(cl * cl + ct * ct * sl * sl);
    const double lo = 0.5 * (1.0 - r), hi = 0.5 * (1.0 + r);
    double s = 0.0;
    if (lo > 0.0) s -= lo * std::log2(lo);
    if (hi > 0.0 && hi < 1.0) s -= hi * std::log2(hi);
    return s;
}

/// Closed form of the coherent information: h(cos^2(theta/2)) - S_e; the
/// first term is time independent because the reduced state of A stays
/// diagonal.
inline double ie_analytic(const ModelParams& p) {
    p.validate();
    const double c = std::cos(0.5 * p.theta);
    return binary_entropy(c * c) - se_analytic(p);
}

/// Evaluate one grid point along both routes and cross-check them.
///
/// The numeric route runs the brute-force tripartite evolution for the
/// concurrence and the channel machinery (with the B qubit as the reference
/// side) for the entropy metrics. Throws if any analytic/numeric pair
/// disagrees beyond 1e-9. MEF is the only expensive part; with_mef = false
/// leaves the mef and Fano fields NaN.
inline ModelPoint evaluate_point(const ModelParams& p, bool with_mef = true) {
    p.validate();
    ModelPoint pt;
    pt.params = p;
    pt.concurrence_analytic = concurrence_analytic(p);
    pt.se_analytic = se_analytic(p);
    pt.ie_analytic = ie_analytic(p);

    pt.concurrence_numeric = concurrence(evolve_numeric(p));

    // Channel route wants subsystem order (R, Q) = (B, A).
    const PureState psi_rq = swap_bipartite(initial_state(p));
    const KrausChannel ch = model_channel(p.lambda_t);
    if (with_mef) {
        const ChannelMetrics m = metrics(ch, psi_rq);
        pt.se_numeric = m.entropy_exchange;
        pt.ie_numeric = m.coherent_information;
        pt.mef_numeric = m.mef;
        pt.fano_lhs = m.fano_lhs;
        pt.fano_slack = m.fano_slack;
    } else {
        const DensityMatrix rho_in = density_from_pure(psi_rq);
        pt.se_numeric = entropy_exchange(ch, rho_in);
        pt.ie_numeric = coherent_information(ch, rho_in);
        pt.mef_numeric = std::numeric_limits<double>::quiet_NaN();
        pt.fano_lhs = std::numeric_limits<double>::quiet_NaN();
        pt.fano_slack = std::numeric_limits<double>::quiet_NaN();
    }

    const auto check = [](double analytic, double numeric, const char* what) {
        if (std::abs(analytic - numeric) > tol::analytic_numeric)
            throw std::runtime_error(std::string("evaluate_point: analytic and numeric ") +
                                     what + " disagree beyond 1e-9");
    };
    check(pt.concurrence_analytic, pt.concurrence_numeric, "concurrence");
    check(pt.se_analytic, pt.se_numeric, "entropy exchange");
    check(pt.ie_analytic, pt.ie_numeric, "coherent information");
    return pt;
}

}  // namespace qinfo
