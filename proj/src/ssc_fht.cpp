#include "sprld/ssc_fht.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sprld/leaf_decoders.hpp"
#include "sprld/sc_kernels.hpp"

namespace sprld {

namespace {

HardVec fht_single(const LlrVec& alpha, double& pm, CostLedger& ledger) {
    const std::size_t n = alpha.size();
    int s = 0;
    while ((std::size_t{1} << s) < n)
        ++s;
    const std::vector<double> spectrum = fht(alpha);
    double sum_abs = 0.0;
    for (double a : alpha)
        sum_abs += std::fabs(a);
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (std::fabs(spectrum[k]) > std::fabs(spectrum[best]))
            best = k;
    const Bit comp = hard_bit(spectrum[best]);
    pm += 0.5 * (sum_abs - std::fabs(spectrum[best]));
    ledger.charge_fht_single(s);

    HardVec x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = static_cast<Bit>(
            (std::popcount(static_cast<unsigned>(best) & static_cast<unsigned>(j)) & 1) ^ comp);
    return x;
}

HardVec spc_single(const LlrVec& alpha, double& pm, CostLedger& ledger) {
    const std::size_t n = alpha.size();
    HardVec x(n);
    Bit gamma = 0;
    std::size_t i_min = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = hard_bit(alpha[i]);
        gamma ^= x[i];
        if (std::fabs(alpha[i]) < std::fabs(alpha[i_min]))
            i_min = i;
    }
    if (gamma) {
        pm += std::fabs(alpha[i_min]);
        x[i_min] ^= 1;
    }
    ledger.charge_spc_single(static_cast<int>(n));
    return x;
}

HardVec ssc_recurse(const LlrVec& alpha, int order, int stage, double& pm, CostLedger& ledger) {
    if (order == 1)
        return fht_single(alpha, pm, ledger);
    if (order == stage - 1)
        return spc_single(alpha, pm, ledger);
    if (order < 1 || order > stage - 1)
        throw std::invalid_argument("ssc_fht_decode: unsupported node");

    const int half = 1 << (stage - 1);
    LlrVec alpha_left = f_stage(alpha);
    ledger.charge_f_stage(half, 1);
    HardVec left = ssc_recurse(alpha_left, order - 1, stage - 1, pm, ledger);

    LlrVec alpha_right = g_stage(alpha, left);
    ledger.charge_g_stage(half, 1);
    HardVec right = ssc_recurse(alpha_right, order, stage - 1, pm, ledger);

    return combine(left, right);
}

}  // namespace

DecodeResult ssc_fht_decode(const LlrVec& alpha, const RmCode& code, CostLedger& ledger) {
    if (code.r < 1 || code.r > code.m - 1)
        throw std::invalid_argument("ssc_fht_decode requires 1 <= r <= m-1");
    if (static_cast<int>(alpha.size()) != code.N)
        throw std::invalid_argument("ssc_fht_decode: LLR length mismatch");
    DecodeResult res;
    res.pm = 0.0;
    res.x_hat = ssc_recurse(alpha, code.r, code.m, res.pm, ledger);
    return res;
}

DecodeResult aut_ssc_fht_decode(const LlrVec& alpha_channel, const RmCode& code, int P,
                                std::uint64_t seed, CostLedger& ledger) {
    if (P < 1)
        throw std::invalid_argument("aut_ssc_fht_decode: P must be >= 1");
    Rng rng(mix_seed(seed, 0x4155'5443ull));
    std::vector<CostLedger> branch_ledgers(static_cast<std::size_t>(P));
    DecodeResult best;
    bool have_best = false;
    for (int p = 0; p < P; ++p) {
        const AffinePerm perm =
            p == 0 ? AffinePerm::identity(code.m) : AffinePerm::sample_affine(code.m, rng);
        const LlrVec permuted =
            perm.is_identity() ? alpha_channel : permute_vector(perm, alpha_channel);
        DecodeResult res =
            ssc_fht_decode(permuted, code, branch_ledgers[static_cast<std::size_t>(p)]);
        if (!perm.is_identity())
            res.x_hat = permute_vector(invert(perm), res.x_hat);
        if (!have_best || res.pm < best.pm) {
            best = std::move(res);
            have_best = true;
        }
    }
    ledger.merge_parallel_branches(branch_ledgers.data(), P);
    ledger.charge_best_path_select(P);
    return best;
}

}  // namespace sprld
