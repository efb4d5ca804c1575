// Test-only oracles, kept independent of the decoder implementations they
// check: a plain bit-by-bit SC list decoder over the factor graph, explicit
// generator-matrix encoding, and brute-force ML helpers.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sprld/rm_code.hpp"
#include "sprld/sc_kernels.hpp"

namespace sprld::testing {

// Row i of G^{(x)m} has support {j : j & ~i == 0}.
inline std::vector<HardVec> kronecker_matrix(int m) {
    const int n = 1 << m;
    std::vector<HardVec> rows(static_cast<std::size_t>(n), HardVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<Bit>((j & ~i) == 0);
    return rows;
}

inline HardVec matrix_encode(int m, const HardVec& u) {
    const auto rows = kronecker_matrix(m);
    const std::size_t n = u.size();
    HardVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (u[i])
            for (std::size_t j = 0; j < n; ++j)
                x[j] ^= rows[i][j];
    return x;
}

inline double correlation_of(const HardVec& x, const LlrVec& alpha) {
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        c += x[i] ? -alpha[i] : alpha[i];
    return c;
}

// Codeword-domain penalty: sum of |alpha_i| over positions where x disagrees
// with the hard decision.
inline double disagreement_penalty(const HardVec& x, const LlrVec& alpha) {
    double pen = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != hard_bit(alpha[i]))
            pen += std::fabs(alpha[i]);
    return pen;
}

struct RefPath {
    LlrVec alpha;
    double pm = 0.0;
    HardVec x;
    int org = 0;
};

// Plain SCL over the full binary tree down to single bits, path metric
// penalizing decisions against the LLR sign. frozen points at the u-domain
// mask slice for this subtree.
inline std::vector<RefPath> ref_scl_recurse(std::vector<RefPath> paths,
                                            const std::vector<bool>& frozen, std::size_t base,
                                            int L) {
    const std::size_t n = paths[0].alpha.size();
    if (n == 1) {
        std::vector<RefPath> out;
        if (frozen[base]) {
            out.reserve(paths.size());
            for (std::size_t q = 0; q < paths.size(); ++q) {
                RefPath p;
                p.pm = pm_update(paths[q].pm, paths[q].alpha[0], 0);
                p.x = {0};
                p.org = static_cast<int>(q);
                out.push_back(std::move(p));
            }
        } else {
            out.reserve(2 * paths.size());
            for (std::size_t q = 0; q < paths.size(); ++q) {
                for (Bit u : {Bit{0}, Bit{1}}) {
                    RefPath p;
                    p.pm = pm_update(paths[q].pm, paths[q].alpha[0], u);
                    p.x = {u};
                    p.org = static_cast<int>(q);
                    out.push_back(std::move(p));
                }
            }
            std::stable_sort(out.begin(), out.end(),
                             [](const RefPath& a, const RefPath& b) { return a.pm < b.pm; });
            if (static_cast<int>(out.size()) > L)
                out.resize(static_cast<std::size_t>(L));
        }
        return out;
    }

    std::vector<RefPath> left(paths.size());
    for (std::size_t q = 0; q < paths.size(); ++q) {
        left[q].alpha = f_stage(paths[q].alpha);
        left[q].pm = paths[q].pm;
        left[q].org = static_cast<int>(q);
    }
    std::vector<RefPath> left_out = ref_scl_recurse(std::move(left), frozen, base, L);

    std::vector<RefPath> right(left_out.size());
    std::vector<int> parent_of(left_out.size());
    std::vector<HardVec> left_x(left_out.size());
    for (std::size_t j = 0; j < left_out.size(); ++j) {
        const int i = left_out[j].org;
        parent_of[j] = i;
        left_x[j] = left_out[j].x;
        right[j].alpha = g_stage(paths[static_cast<std::size_t>(i)].alpha, left_out[j].x);
        right[j].pm = left_out[j].pm;
        right[j].org = static_cast<int>(j);
    }
    std::vector<RefPath> right_out = ref_scl_recurse(std::move(right), frozen, base + n / 2, L);

    std::vector<RefPath> out(right_out.size());
    for (std::size_t k = 0; k < right_out.size(); ++k) {
        const int j = right_out[k].org;
        out[k].pm = right_out[k].pm;
        out[k].x = combine(left_x[static_cast<std::size_t>(j)], right_out[k].x);
        out[k].org = parent_of[static_cast<std::size_t>(j)];
    }
    return out;
}

inline std::vector<RefPath> ref_scl_decode(const RmCode& code, const LlrVec& alpha, int L) {
    if (static_cast<int>(alpha.size()) != code.N)
        throw std::invalid_argument("ref_scl_decode: length mismatch");
    std::vector<RefPath> start(1);
    start[0].alpha = alpha;
    return ref_scl_recurse(std::move(start), code.frozen, 0, L);
}

}  // namespace sprld::testing
