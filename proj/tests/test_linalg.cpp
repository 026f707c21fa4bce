#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/hermitian.hpp"
#include "qinfo/tensor.hpp"
#include "qinfo/verify.hpp"  // SplitMix64, random_unitary

#include "test_helpers.hpp"

using namespace qinfo;
using Catch::Approx;

namespace {
const cplx kI{0.0, 1.0};
}

TEST_CASE("matrix product", "[linalg]") {
    const ComplexMatrix id = ComplexMatrix::identity(2);

    SECTION("identity is neutral") {
        REQUIRE(max_abs_diff(id * pauli_z(), pauli_z()) == 0.0);
    }
    SECTION("Pauli involution") {
        REQUIRE(max_abs_diff(pauli_x() * pauli_x(), id) == 0.0);
    }
    SECTION("Pauli algebra: sx sy = i sz") {
        REQUIRE(max_abs_diff(pauli_x() * pauli_y(), kI * pauli_z()) == 0.0);
    }
    SECTION("dimension mismatch throws") {
        REQUIRE_THROWS_AS(id * ComplexMatrix::identity(3), std::invalid_argument);
    }
}

TEST_CASE("adjoint", "[linalg]") {
    SECTION("diagonal phases conjugate") {
        const double lt = 0.73;
        const cplx e{std::cos(0.5 * lt), -std::sin(0.5 * lt)};
        const ComplexMatrix u = ComplexMatrix::from({{e, 0.0}, {0.0, std::conj(e)}});
        const ComplexMatrix expected =
            ComplexMatrix::from({{std::conj(e), 0.0}, {0.0, e}});
        REQUIRE(max_abs_diff(adjoint(u), expected) == 0.0);
    }
    SECTION("Hermitian matrices are fixed points") {
        SplitMix64 rng(11);
        for (int it = 0; it < 20; ++it) {
            const ComplexMatrix h = testgen::random_hermitian(4, rng);
            REQUIRE(max_abs_diff(adjoint(h), h) == 0.0);
        }
    }
    SECTION("(AB)^dagger = B^dagger A^dagger") {
        SplitMix64 rng(12);
        for (int it = 0; it < 20; ++it) {
            const ComplexMatrix a = testgen::random_matrix(4, rng);
            const ComplexMatrix b = testgen::random_matrix(4, rng);
            REQUIRE(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) < 1e-13);
        }
    }
}

TEST_CASE("kron", "[linalg]") {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);

    SECTION("identity factors") {
        REQUIRE(max_abs_diff(kron(id2, id2), ComplexMatrix::identity(4)) == 0.0);
    }
    SECTION("sz (x) I") {
        ComplexMatrix expected(4);
        expected(0, 0) = 1.0;
        expected(1, 1) = 1.0;
        expected(2, 2) = -1.0;
        expected(3, 3) = -1.0;
        REQUIRE(max_abs_diff(kron(pauli_z(), id2), expected) == 0.0);
    }
    SECTION("trace is multiplicative") {
        SplitMix64 rng(13);
        const ComplexMatrix a = testgen::random_matrix(2, rng);
        const ComplexMatrix b = testgen::random_matrix(3, rng);
        REQUIRE(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-14);
    }
    SECTION("associativity") {
        SplitMix64 rng(14);
        const ComplexMatrix a = testgen::random_matrix(2, rng);
        const ComplexMatrix b = testgen::random_matrix(2, rng);
        const ComplexMatrix c = testgen::random_matrix(2, rng);
        REQUIRE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
    }
}

TEST_CASE("partial trace", "[linalg]") {
    SplitMix64 rng(15);

    SECTION("product state factorizes") {
        const DensityMatrix rho_a = testgen::random_density({2}, rng);
        const DensityMatrix rho_b = testgen::random_density({2}, rng);
        const ComplexMatrix joint = kron(rho_a.mat(), rho_b.mat());
        REQUIRE(max_abs_diff(partial_trace(joint, {2, 2}, {0}), rho_a.mat()) < 1e-14);
        REQUIRE(max_abs_diff(partial_trace(joint, {2, 2}, {1}), rho_b.mat()) < 1e-14);
    }
    SECTION("unit-trace environment factor drops out") {
        const DensityMatrix rho_ab = testgen::random_density({2, 2}, rng);
        const ComplexMatrix lam =
            kron(rho_ab.mat(), cplx{0.5, 0.0} * ComplexMatrix::identity(2));
        REQUIRE(max_abs_diff(partial_trace(lam, {2, 2, 2}, {0, 1}), rho_ab.mat()) < 1e-14);
    }
    SECTION("reduced state of the Schmidt family is diagonal") {
        const double theta = std::numbers::pi / 3.0;
        const DensityMatrix rho = density_from_pure(schmidt_state(theta));
        const ComplexMatrix red = partial_trace(rho.mat(), {2, 2}, {0});
        const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
        REQUIRE(red(0, 0).real() == Approx(c2).margin(1e-15));
        REQUIRE(red(1, 1).real() == Approx(1.0 - c2).margin(1e-15));
        REQUIRE(std::abs(red(0, 1)) == 0.0);
    }
    SECTION("trace is preserved") {
        for (int it = 0; it < 10; ++it) {
            const ComplexMatrix m = testgen::random_matrix(8, rng);
            const cplx t = m.trace();
            REQUIRE(std::abs(partial_trace(m, {2, 2, 2}, {1}).trace() - t) < 1e-13);
            REQUIRE(std::abs(partial_trace(m, {2, 4}, {0}).trace() - t) < 1e-13);
        }
    }
    SECTION("bad arguments throw") {
        const ComplexMatrix m = testgen::random_matrix(4, rng);
        REQUIRE_THROWS_AS(partial_trace(m, {2, 3}, {0}), std::invalid_argument);
        REQUIRE_THROWS_AS(partial_trace(m, {2, 2}, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(partial_trace(m, {2, 2}, {2}), std::invalid_argument);
        REQUIRE_THROWS_AS(partial_trace(m, {2, 2}, {1, 0}), std::invalid_argument);
    }
}

TEST_CASE("hermitian eigendecomposition", "[linalg]") {
    SECTION("identity") {
        const HermitianEigen eig = hermitian_eig(ComplexMatrix::identity(4));
        for (double v : eig.values) REQUIRE(v == Approx(1.0).margin(1e-15));
    }
    SECTION("sigma_z") {
        const HermitianEigen eig = hermitian_eig(pauli_z());
        REQUIRE(eig.values[0] == Approx(-1.0).margin(1e-15));
        REQUIRE(eig.values[1] == Approx(1.0).margin(1e-15));
    }
    SECTION("dephasing W matrix spectrum") {
        // Eigenvalues (1 -+ r)/2 with r = sqrt(cos^2 lt + cos^2 th sin^2 lt);
        // frozen from independent high-precision evaluation at (pi/3, 0.8).
        const ModelParams p{std::numbers::pi / 3.0, 0.0, 0.8};
        const HermitianEigen eig = hermitian_eig(w_analytic(p).mat());
        REQUIRE(eig.values[0] == Approx(0.108193230298078972).margin(1e-14));
        REQUIRE(eig.values[1] == Approx(0.891806769701921028).margin(1e-14));
    }
    SECTION("reconstruction and orthonormality") {
        SplitMix64 rng(16);
        for (std::size_t n : {2u, 3u, 4u, 8u}) {
            const ComplexMatrix h = testgen::random_hermitian(n, rng);
            const HermitianEigen eig = hermitian_eig(h);
            const ComplexMatrix rebuilt =
                spectral_apply(eig, [](double lam) { return cplx{lam, 0.0}; });
            REQUIRE(max_abs_diff(rebuilt, h) < 1e-12);
            REQUIRE(max_abs_diff(adjoint(eig.vectors) * eig.vectors,
                                 ComplexMatrix::identity(n)) < 1e-12);
            for (std::size_t i = 1; i < n; ++i) REQUIRE(eig.values[i - 1] <= eig.values[i]);
        }
    }
    SECTION("bit-identical reruns") {
        SplitMix64 rng(17);
        const ComplexMatrix h = testgen::random_hermitian(6, rng);
        const HermitianEigen a = hermitian_eig(h);
        const HermitianEigen b = hermitian_eig(h);
        REQUIRE(a.values == b.values);
        REQUIRE(max_abs_diff(a.vectors, b.vectors) == 0.0);
    }
    SECTION("non-Hermitian input is rejected") {
        ComplexMatrix m = ComplexMatrix::identity(2);
        m(0, 1) = cplx{1e-6, 0.0};
        REQUIRE_THROWS_AS(hermitian_eig(m), std::invalid_argument);
    }
}

TEST_CASE("unitary exponential", "[linalg]") {
    SECTION("zero scale gives identity") {
        SplitMix64 rng(18);
        const ComplexMatrix h = testgen::random_hermitian(4, rng);
        REQUIRE(max_abs_diff(expm_i_hermitian(h, 0.0), ComplexMatrix::identity(4)) < 1e-14);
    }
    SECTION("sigma_z/2 generates diagonal phases") {
        const double lt = 1.234;
        const ComplexMatrix u = expm_i_hermitian(cplx{0.5, 0.0} * pauli_z(), -lt);
        const cplx lo{std::cos(0.5 * lt), -std::sin(0.5 * lt)};
        REQUIRE(std::abs(u(0, 0) - lo) < 1e-14);
        REQUIRE(std::abs(u(1, 1) - std::conj(lo)) < 1e-14);
        REQUIRE(std::abs(u(0, 1)) < 1e-15);
    }
    SECTION("result is unitary") {
        SplitMix64 rng(19);
        for (int it = 0; it < 10; ++it) {
            const ComplexMatrix h = testgen::random_hermitian(4, rng);
            const ComplexMatrix u = expm_i_hermitian(h, rng.uniform(-3.0, 3.0));
            REQUIRE(max_abs_diff(u * adjoint(u), ComplexMatrix::identity(4)) < 1e-12);
        }
    }
    SECTION("group law e^{i s1 h} e^{i s2 h} = e^{i (s1+s2) h}") {
        SplitMix64 rng(20);
        for (int it = 0; it < 10; ++it) {
            const ComplexMatrix h = testgen::random_hermitian(3, rng);
            const double s1 = rng.uniform(-2.0, 2.0), s2 = rng.uniform(-2.0, 2.0);
            REQUIRE(max_abs_diff(expm_i_hermitian(h, s1) * expm_i_hermitian(h, s2),
                                 expm_i_hermitian(h, s1 + s2)) < 1e-11);
        }
    }
}

TEST_CASE("PSD square root", "[linalg]") {
    SECTION("identity") {
        REQUIRE(max_abs_diff(sqrtm_psd(ComplexMatrix::identity(4)),
                             ComplexMatrix::identity(4)) < 1e-14);
    }
    SECTION("diagonal") {
        const ComplexMatrix m = ComplexMatrix::from({{4.0, 0.0}, {0.0, 1.0}});
        const ComplexMatrix expected = ComplexMatrix::from({{2.0, 0.0}, {0.0, 1.0}});
        REQUIRE(max_abs_diff(sqrtm_psd(m), expected) < 1e-14);
    }
    SECTION("square of the root restores the input") {
        SplitMix64 rng(21);
        for (int it = 0; it < 10; ++it) {
            const ComplexMatrix g = testgen::random_matrix(4, rng);
            const ComplexMatrix psd = g * adjoint(g);
            const ComplexMatrix root = sqrtm_psd(psd);
            REQUIRE(max_abs_diff(root * root, psd) < 1e-10);
        }
    }
    SECTION("genuinely negative spectrum is rejected") {
        REQUIRE_THROWS_AS(sqrtm_psd(pauli_z()), std::invalid_argument);
    }
}

TEST_CASE("embed", "[linalg]") {
    SECTION("single-target embedding is a kron") {
        REQUIRE(max_abs_diff(embed(pauli_z(), {2, 2}, {0}),
                             kron(pauli_z(), ComplexMatrix::identity(2))) == 0.0);
        REQUIRE(max_abs_diff(embed(pauli_z(), {2, 2}, {1}),
                             kron(ComplexMatrix::identity(2), pauli_z())) == 0.0);
    }
    SECTION("non-adjacent targets against the index-permutation oracle") {
        // embed(U, [2,2,2], {0,2}) must match P^T kron(U, I) P where P
        // permutes |a,b,c> -> |a,c,b>; checked column by column over all
        // eight basis vectors.
        SplitMix64 rng(22);
        const ComplexMatrix u = random_unitary(4, rng);
        const ComplexMatrix embedded = embed(u, {2, 2, 2}, {0, 2});

        const ComplexMatrix lifted = kron(u, ComplexMatrix::identity(2));  // order (A, C, B)
        auto perm = [](std::size_t a, std::size_t b, std::size_t c) {
            return (a << 2) | (c << 1) | b;  // index in (A, C, B) ordering
        };
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t c = 0; c < 2; ++c) {
                    const std::size_t col = (a << 2) | (b << 1) | c;
                    for (std::size_t a2 = 0; a2 < 2; ++a2)
                        for (std::size_t b2 = 0; b2 < 2; ++b2)
                            for (std::size_t c2 = 0; c2 < 2; ++c2) {
                                const std::size_t row = (a2 << 2) | (b2 << 1) | c2;
                                REQUIRE(embedded(row, col) ==
                                        lifted(perm(a2, b2, c2), perm(a, b, c)));
                            }
                }
    }
    SECTION("all-subsystem embedding is the operator itself") {
        SplitMix64 rng(23);
        const ComplexMatrix u = testgen::random_matrix(4, rng);
        REQUIRE(max_abs_diff(embed(u, {2, 2}, {0, 1}), u) == 0.0);
        REQUIRE(max_abs_diff(embed(ComplexMatrix::identity(8), {2, 2, 2}, {0, 1, 2}),
                             ComplexMatrix::identity(8)) == 0.0);
    }
    SECTION("bad arguments throw") {
        REQUIRE_THROWS_AS(embed(pauli_z(), {2, 2}, {2}), std::invalid_argument);
        REQUIRE_THROWS_AS(embed(ComplexMatrix::identity(4), {2, 2}, {0}),
                          std::invalid_argument);
    }
}

TEST_CASE("embed / partial trace composition", "[linalg]") {
    // Evolving (A, C) and tracing out the untouched B commutes with the
    // direct two-subsystem computation.
    SplitMix64 rng(24);
    const ComplexMatrix u_ac = random_unitary(4, rng);
    const DensityMatrix rho_ac = testgen::random_density({2, 2}, rng);
    const DensityMatrix rho_b = testgen::random_density({2}, rng);

    // full state on (A, B, C): rho_ac (x) rho_b, reordered via embed of swaps
    // is overkill -- build it directly entrywise instead.
    ComplexMatrix full(8);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t a2 = 0; a2 < 2; ++a2)
                    for (std::size_t b2 = 0; b2 < 2; ++b2)
                        for (std::size_t c2 = 0; c2 < 2; ++c2)
                            full((a << 2) | (b << 1) | c, (a2 << 2) | (b2 << 1) | c2) =
                                rho_ac.mat()(2 * a + c, 2 * a2 + c2) * rho_b.mat()(b, b2);

    const ComplexMatrix u_full = embed(u_ac, {2, 2, 2}, {0, 2});
    const ComplexMatrix evolved = u_full * full * adjoint(u_full);
    const ComplexMatrix reduced = partial_trace(evolved, {2, 2, 2}, {0, 2});

    const ComplexMatrix direct = u_ac * rho_ac.mat() * adjoint(u_ac);
    REQUIRE(max_abs_diff(reduced, direct) < 1e-12);
}
