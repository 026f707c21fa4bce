// Dense complex matrices for small quantum systems.
//
// Everything here is a plain value type: construction validates, operations
// return fresh matrices, nothing is mutated in place after construction.
// Dimensions stay single digits in practice (2, 4, 8), so all algorithms are
// the naive O(n^3) ones.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qinfo {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// Zero matrix of dimension n (n >= 1).
    explicit ComplexMatrix(std::size_t n) : dim_(n), a_(n * n, cplx{0.0, 0.0}) {
        if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    }

    ComplexMatrix(std::size_t n, std::vector<cplx> entries) : dim_(n), a_(std::move(entries)) {
        if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
        if (a_.size() != n * n)
            throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(n * n) +
                                        " entries, got " + std::to_string(a_.size()));
        check_finite();
    }

    /// Row-major brace construction, e.g. ComplexMatrix::from({{a,b},{c,d}}).
    static ComplexMatrix from(std::initializer_list<std::initializer_list<cplx>> rows) {
        const std::size_t n = rows.size();
        ComplexMatrix m(n);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != n)
                throw std::invalid_argument("ComplexMatrix::from: rows must form a square matrix");
            std::size_t c = 0;
            for (cplx v : row) m.a_[r * n + c++] = v;
            ++r;
        }
        m.check_finite();
        return m;
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    cplx operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }

    const std::vector<cplx>& entries() const { return a_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        require_same_dim(o, "operator+");
        ComplexMatrix r(dim_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    ComplexMatrix operator-(const ComplexMatrix& o) const {
        require_same_dim(o, "operator-");
        ComplexMatrix r(dim_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const {
        require_same_dim(o, "operator*");
        const std::size_t n = dim_;
        ComplexMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a_[i * n + k];
                if (aik == cplx{0.0, 0.0}) continue;  // keep exact zeros exact
                for (std::size_t j = 0; j < n; ++j) r.a_[i * n + j] += aik * o.a_[k * n + j];
            }
        return r;
    }

    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) {
        ComplexMatrix r(m.dim_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
        return t;
    }

    void check_finite() const {
        for (cplx v : a_)
            if (!is_finite(v)) throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }

  private:
    void require_same_dim(const ComplexMatrix& o, const char* op) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument(std::string("ComplexMatrix::") + op +
                                        ": dimension mismatch (" + std::to_string(dim_) + " vs " +
                                        std::to_string(o.dim_) + ")");
    }

    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

/// Entrywise complex conjugate (no transpose).
inline ComplexMatrix conjugate(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(m(i, j));
    return r;
}

/// Kronecker product; the left factor is the most significant index:
/// row r of the result decomposes as r = r_a * b.dim() + r_b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix r(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t ca = 0; ca < na; ++ca) {
            const cplx v = a(ra, ca);
            if (v == cplx{0.0, 0.0}) continue;
            for (std::size_t rb = 0; rb < nb; ++rb)
                for (std::size_t cb = 0; cb < nb; ++cb)
                    r(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
        }
    return r;
}

inline double max_abs(const ComplexMatrix& m) {
    double mx = 0.0;
    for (cplx v : m.entries()) mx = std::max(mx, std::abs(v));
    return mx;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        mx = std::max(mx, std::abs(a.entries()[i] - b.entries()[i]));
    return mx;
}

/// max |m - m^dagger| over entries; 0 for exactly Hermitian input.
inline double hermiticity_defect(const ComplexMatrix& m) {
    double mx = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
    return mx;
}

// Pauli matrices and friends.
inline ComplexMatrix pauli_x() { return ComplexMatrix::from({{0.0, 1.0}, {1.0, 0.0}}); }
inline ComplexMatrix pauli_y() {
    return ComplexMatrix::from({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}});
}
inline ComplexMatrix pauli_z() { return ComplexMatrix::from({{1.0, 0.0}, {0.0, -1.0}}); }

}  // namespace qinfo
