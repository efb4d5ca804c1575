#include "sprld/sp_rld.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sprld/sc_kernels.hpp"

namespace sprld {

double perm_metric(const LlrVec& alpha_lambda, int child_order) {
    if (child_order == 1) {
        double best = -std::numeric_limits<double>::infinity();
        for (double c : fht(alpha_lambda))
            best = std::max(best, std::fabs(c));
        return best;
    }
    double sum = 0.0;
    for (double a : alpha_lambda)
        sum += std::fabs(a);
    return sum;
}

std::pair<AffinePerm, LlrVec> select_permutation(const DecodePath& path, NodeRef node,
                                                 const std::vector<AffinePerm>& candidates) {
    if (candidates.empty())
        throw std::invalid_argument("select_permutation: no candidates");
    const int child_order = node.order - 1;
    double best_metric = -std::numeric_limits<double>::infinity();
    AffinePerm best_perm;
    LlrVec best_alpha;
    for (const AffinePerm& cand : candidates) {
        LlrVec alpha_tmp =
            cand.is_identity() ? path.alpha : permute_vector(cand, path.alpha);
        LlrVec alpha_child = f_stage(alpha_tmp);
        const double metric = perm_metric(alpha_child, child_order);
        if (metric > best_metric) {
            best_metric = metric;
            best_perm = cand;
            best_alpha = std::move(alpha_child);
        }
    }
    return {best_perm, std::move(best_alpha)};
}

std::pair<AffinePerm, LlrVec> select_permutation(const DecodePath& path, NodeRef node,
                                                 const SpConfig& cfg, Rng& rng) {
    const int count = cfg.candidates_per_node > 0 ? cfg.candidates_per_node : node.stage;
    std::vector<AffinePerm> candidates;
    candidates.reserve(static_cast<std::size_t>(count));
    candidates.push_back(AffinePerm::identity(node.stage));
    for (int p = 1; p < count; ++p)
        candidates.push_back(AffinePerm::sample_affine(node.stage, rng));
    return select_permutation(path, node, candidates);
}

std::vector<DecodePath> sp_rld_recurse(std::vector<DecodePath> paths, NodeRef node,
                                       const SpConfig& cfg, long long& sp_budget, Rng& rng,
                                       CostLedger& ledger, bool spectrum_reused) {
    if (node.order == 1)
        return fht_list(paths, cfg.L, ledger, spectrum_reused);
    if (node.order == node.stage - 1)
        return spc_list(paths, cfg.L, ledger);
    if (node.order < 1 || node.order > node.stage - 1)
        throw std::invalid_argument("sp_rld_recurse: unsupported node RM(" +
                                    std::to_string(node.order) + "," +
                                    std::to_string(node.stage) + ")");

    const int half = 1 << (node.stage - 1);
    const int child_order = node.order - 1;
    const bool use_sp = sp_budget > 0;
    if (use_sp) {
        --sp_budget;  // one left-child visit, shared across paths
        if (cfg.sp_trace)
            cfg.sp_trace->push_back(node);
    }

    // Left-child inputs; keep each parent path's permuted alpha for the g step.
    std::vector<LlrVec> alpha_perm(paths.size());
    std::vector<DecodePath> left(paths.size());
    for (std::size_t l = 0; l < paths.size(); ++l) {
        DecodePath& parent = paths[l];
        parent.pi_sp = AffinePerm::identity(node.stage);
        if (use_sp) {
            auto [perm, alpha_child] = select_permutation(parent, node, cfg, rng);
            parent.pi_sp = perm;
            alpha_perm[l] = perm.is_identity() ? parent.alpha : permute_vector(perm, parent.alpha);
            left[l].alpha = std::move(alpha_child);
        } else {
            alpha_perm[l] = parent.alpha;
            left[l].alpha = f_stage(alpha_perm[l]);
        }
        left[l].pm = parent.pm;
        left[l].pi_init = parent.pi_init;
        left[l].l_org = static_cast<int>(l);
    }
    if (use_sp) {
        const int count = cfg.candidates_per_node > 0 ? cfg.candidates_per_node : node.stage;
        ledger.charge_sp_block(node.stage, child_order, count, static_cast<int>(paths.size()));
    } else {
        ledger.charge_f_stage(half, static_cast<int>(paths.size()));
    }

    const bool left_spectrum_ready = use_sp && child_order == 1;
    std::vector<DecodePath> left_out =
        sp_rld_recurse(std::move(left), {child_order, node.stage - 1}, cfg, sp_budget, rng,
                       ledger, left_spectrum_ready);

    // Right-child inputs from the surviving left paths.
    std::vector<DecodePath> right(left_out.size());
    std::vector<int> parent_of(left_out.size());
    for (std::size_t j = 0; j < left_out.size(); ++j) {
        const int i = left_out[j].l_org;
        parent_of[j] = i;
        right[j].alpha = g_stage(alpha_perm[static_cast<std::size_t>(i)], left_out[j].x_hat);
        right[j].pm = left_out[j].pm;
        right[j].pi_init = left_out[j].pi_init;
        right[j].l_org = static_cast<int>(j);
    }
    ledger.charge_g_stage(half, static_cast<int>(right.size()));

    std::vector<DecodePath> right_out = sp_rld_recurse(
        std::move(right), {node.order, node.stage - 1}, cfg, sp_budget, rng, ledger, false);

    // Reassemble and undo the node permutation.
    std::vector<DecodePath> out(right_out.size());
    for (std::size_t k = 0; k < right_out.size(); ++k) {
        const int j = right_out[k].l_org;
        const int i = parent_of[static_cast<std::size_t>(j)];
        const AffinePerm& pi_sp = paths[static_cast<std::size_t>(i)].pi_sp;
        HardVec whole = combine(left_out[static_cast<std::size_t>(j)].x_hat, right_out[k].x_hat);
        out[k].x_hat = pi_sp.is_identity() ? std::move(whole)
                                           : permute_vector(invert(pi_sp), whole);
        out[k].pm = right_out[k].pm;
        out[k].pi_init = right_out[k].pi_init;
        out[k].pi_sp = pi_sp;
        out[k].l_org = i;
    }
    return out;
}

namespace {

DecodeResult run_rld(const LlrVec& alpha_channel, const RmCode& code, const SpConfig& cfg,
                     long long sp_budget, CostLedger& ledger) {
    if (code.r < 1 || code.r > code.m - 1)
        throw std::invalid_argument("decoder requires 1 <= r <= m-1");
    if (static_cast<int>(alpha_channel.size()) != code.N)
        throw std::invalid_argument("decode: LLR length mismatch");
    if (cfg.L < 1)
        throw std::invalid_argument("decode: list size must be positive");

    Rng rng(mix_seed(cfg.seed, 0x5052'4c44ull));
    std::vector<DecodePath> paths(static_cast<std::size_t>(cfg.L));
    for (int l = 0; l < cfg.L; ++l) {
        DecodePath& path = paths[static_cast<std::size_t>(l)];
        path.pi_init = l == 0 ? AffinePerm::identity(code.m) : AffinePerm::sample_affine(code.m, rng);
        path.alpha = l == 0 ? alpha_channel : permute_vector(path.pi_init, alpha_channel);
        path.pm = 0.0;
        path.pi_sp = AffinePerm::identity(code.m);
        path.l_org = l;
    }

    std::vector<DecodePath> out = sp_rld_recurse(std::move(paths), {code.r, code.m}, cfg,
                                                 sp_budget, rng, ledger);
    ledger.charge_best_path_select(static_cast<int>(out.size()));
    std::size_t best = 0;
    for (std::size_t l = 1; l < out.size(); ++l)
        if (out[l].pm < out[best].pm)
            best = l;
    const AffinePerm& pi_init = out[best].pi_init;
    HardVec x_hat = pi_init.is_identity() ? std::move(out[best].x_hat)
                                          : permute_vector(invert(pi_init), out[best].x_hat);
    return {std::move(x_hat), out[best].pm};
}

}  // namespace

DecodeResult sp_rld_decode(const LlrVec& alpha_channel, const RmCode& code, const SpConfig& cfg,
                           CostLedger& ledger) {
    return run_rld(alpha_channel, code, cfg, kUnboundedSp, ledger);
}

DecodeResult ssp_rld_decode(const LlrVec& alpha_channel, const RmCode& code, const SpConfig& cfg,
                            CostLedger& ledger) {
    if (cfg.S < 0)
        throw std::invalid_argument("ssp_rld_decode: S must be >= 0");
    return run_rld(alpha_channel, code, cfg, cfg.S, ledger);
}

DecodeResult ens_ssp_rld_decode(const LlrVec& alpha_channel, const RmCode& code,
                                const SpConfig& cfg, CostLedger& ledger) {
    if (cfg.T < 1)
        throw std::invalid_argument("ens_ssp_rld_decode: T must be >= 1");
    std::vector<CostLedger> branch_ledgers(static_cast<std::size_t>(cfg.T));
    DecodeResult best;
    bool have_best = false;
    for (int t = 0; t < cfg.T; ++t) {
        SpConfig branch_cfg = cfg;
        branch_cfg.L = cfg.L_prime;
        branch_cfg.seed = cfg.T == 1
                              ? cfg.seed  // T=1 reverts to plain SSP-RLD
                              : mix_seed(cfg.seed, 0x454e'5342ull + static_cast<std::uint64_t>(t));
        DecodeResult res =
            ssp_rld_decode(alpha_channel, code, branch_cfg, branch_ledgers[static_cast<std::size_t>(t)]);
        if (!have_best || res.pm < best.pm) {
            best = std::move(res);
            have_best = true;
        }
    }
    ledger.merge_parallel_branches(branch_ledgers.data(), cfg.T);
    ledger.charge_best_path_select(cfg.T);
    return best;
}

}  // namespace sprld
