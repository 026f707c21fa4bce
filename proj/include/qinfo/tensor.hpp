// Multipartite index plumbing: partial traces and embedding operators into
// a larger tensor-product space.
//
// Convention throughout the library: subsystem 0 is the most significant
// tensor factor, i.e. a basis index decomposes as
//   b = sum_k b_k * prod_{j>k} dims[j],
// matching the kron() ordering (left factor most significant).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinfo/complex_matrix.hpp"

namespace qinfo {

using Dims = std::vector<std::size_t>;

namespace detail {

inline std::size_t dims_product(const Dims& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw std::invalid_argument("subsystem dimensions must be >= 1");
        p *= d;
    }
    return p;
}

// stride[k] = product of dims after k; index = sum digit[k] * stride[k].
inline std::vector<std::size_t> strides(const Dims& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

inline void check_subsystem_list(const std::vector<std::size_t>& subs, std::size_t count,
                                 const char* who) {
    if (subs.empty()) throw std::invalid_argument(std::string(who) + ": empty subsystem list");
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i] >= count)
            throw std::invalid_argument(std::string(who) + ": subsystem index out of range");
        if (i > 0 && subs[i] <= subs[i - 1])
            throw std::invalid_argument(std::string(who) +
                                        ": subsystem list must be strictly increasing");
    }
}

}  // namespace detail

/// Trace out every subsystem not listed in `keep`; `keep` must be a
/// non-empty strictly increasing list of subsystem indices. Preserves the
/// total trace exactly (the sum is reordered, never rescaled).
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                                   const std::vector<std::size_t>& keep) {
    const std::size_t total = detail::dims_product(dims);
    if (total != rho.dim())
        throw std::invalid_argument("partial_trace: dims product " + std::to_string(total) +
                                    " != matrix dimension " + std::to_string(rho.dim()));
    detail::check_subsystem_list(keep, dims.size(), "partial_trace");

    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        bool kept = false;
        for (std::size_t t : keep) kept |= (t == k);
        if (!kept) traced.push_back(k);
    }

    const auto stride = detail::strides(dims);
    std::size_t keep_dim = 1, traced_dim = 1;
    for (std::size_t k : keep) keep_dim *= dims[k];
    for (std::size_t k : traced) traced_dim *= dims[k];

    // Offset of each kept (resp. traced) multi-index into the full index.
    auto offsets = [&](const std::vector<std::size_t>& subs, std::size_t count) {
        std::vector<std::size_t> off(count, 0);
        for (std::size_t flat = 0; flat < count; ++flat) {
            std::size_t rest = flat, o = 0;
            for (std::size_t j = subs.size(); j-- > 0;) {
                const std::size_t d = dims[subs[j]];
                o += (rest % d) * stride[subs[j]];
                rest /= d;
            }
            off[flat] = o;
        }
        return off;
    };
    const auto keep_off = offsets(keep, keep_dim);
    const auto traced_off = offsets(traced, traced_dim);

    ComplexMatrix out(keep_dim);
    for (std::size_t r = 0; r < keep_dim; ++r)
        for (std::size_t c = 0; c < keep_dim; ++c) {
            cplx sum = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t)
                sum += rho(keep_off[r] + traced_off[t], keep_off[c] + traced_off[t]);
            out(r, c) = sum;
        }
    return out;
}

/// Lift `op` (acting on the subsystems listed in `targets`, in that order)
/// to the full space, acting as identity elsewhere. targets must be strictly
/// increasing; op.dim() must equal the product of the target dimensions.
inline ComplexMatrix embed(const ComplexMatrix& op, const Dims& dims,
                           const std::vector<std::size_t>& targets) {
    const std::size_t total = detail::dims_product(dims);
    detail::check_subsystem_list(targets, dims.size(), "embed");

    std::size_t target_dim = 1;
    for (std::size_t t : targets) target_dim *= dims[t];
    if (op.dim() != target_dim)
        throw std::invalid_argument("embed: operator dimension " + std::to_string(op.dim()) +
                                    " != product of target dimensions " +
                                    std::to_string(target_dim));

    const auto stride = detail::strides(dims);

    // Split a full index into (target flat index, spectator offset).
    auto split = [&](std::size_t x) {
        std::size_t tflat = 0, spect = x;
        for (std::size_t t : targets) {
            const std::size_t digit = (x / stride[t]) % dims[t];
            tflat = tflat * dims[t] + digit;
            spect -= digit * stride[t];
        }
        return std::pair<std::size_t, std::size_t>{tflat, spect};
    };

    ComplexMatrix out(total);
    for (std::size_t r = 0; r < total; ++r) {
        const auto [tr, sr] = split(r);
        for (std::size_t c = 0; c < total; ++c) {
            const auto [tc, sc] = split(c);
            if (sr == sc) out(r, c) = op(tr, tc);
        }
    }
    return out;
}

}  // namespace qinfo
