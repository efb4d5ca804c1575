#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "sprld/cost_model.hpp"
#include "sprld/gf2_perm.hpp"
#include "sprld/leaf_decoders.hpp"
#include "sprld/rm_code.hpp"

namespace sprld {

inline constexpr long long kUnboundedSp = std::numeric_limits<long long>::max();

// Order and stage of the constituent code currently decoded.
struct NodeRef {
    int order = 0;
    int stage = 0;
};

struct SpConfig {
    int L = 1;                    // list size
    long long S = kUnboundedSp;   // left-child visits that run SP
    int T = 1;                    // ensemble size
    int L_prime = 1;              // per-branch list size (ensemble)
    int candidates_per_node = 0;  // 0 = node stage s
    SpMode sp_mode = SpMode::kSequential;  // reporting only; decode is identical
    std::uint64_t seed = 1;
    std::vector<NodeRef>* sp_trace = nullptr;  // records nodes where SP ran
};

struct DecodeResult {
    HardVec x_hat;
    double pm = 0.0;
};

// Permutation metric of a candidate: the best first-order correlation (via
// the spectrum) when the left child has order 1, the abs-sum otherwise.
double perm_metric(const LlrVec& alpha_lambda, int child_order);

// Evaluates the given candidate permutations of the node, keeping the one
// whose left-child LLR vector maximizes the permutation metric; ties keep the
// earliest candidate, so the identity wins when listed first. Returns the
// winner and its left-child vector; ledger ops are charged by the caller.
std::pair<AffinePerm, LlrVec> select_permutation(const DecodePath& path, NodeRef node,
                                                 const std::vector<AffinePerm>& candidates);

// rng-driven variant per the decode schedule: candidate 0 is the identity,
// the rest are sampled from the node's full symmetry group.
std::pair<AffinePerm, LlrVec> select_permutation(const DecodePath& path, NodeRef node,
                                                 const SpConfig& cfg, Rng& rng);

std::vector<DecodePath> sp_rld_recurse(std::vector<DecodePath> paths, NodeRef node,
                                       const SpConfig& cfg, long long& sp_budget, Rng& rng,
                                       CostLedger& ledger, bool spectrum_reused = false);

// Recursive list decode with unbounded SP. Requires 1 <= r <= m-1.
DecodeResult sp_rld_decode(const LlrVec& alpha_channel, const RmCode& code, const SpConfig& cfg,
                           CostLedger& ledger);

// SP limited to the first cfg.S left-child visits of the recursion.
DecodeResult ssp_rld_decode(const LlrVec& alpha_channel, const RmCode& code, const SpConfig& cfg,
                            CostLedger& ledger);

// cfg.T independent SSP-RLD branches with list cfg.L_prime; smallest final
// path metric wins.
DecodeResult ens_ssp_rld_decode(const LlrVec& alpha_channel, const RmCode& code,
                                const SpConfig& cfg, CostLedger& ledger);

}  // namespace sprld
