#pragma once

#include <cstdint>

#include "sprld/rm_code.hpp"

namespace sprld {

enum class SpMode { kSequential, kParallel };

// Floating-point op and time-step accounting. One f/g/compare counts as one
// op; hard decisions, XORs and index permutations are free. Time steps assume
// unbounded concurrency inside a stage: a whole f or g stage, a path-metric
// batch, or one permutation-metric reduction each take a single step. A merge
// sort of n elements costs ceil(log2 n) steps and n*ceil(log2 n) comparisons.
//
// Both time-step conventions are tracked at once. The sequential SP scheme
// evaluates the candidates of a stage-s node one after another (s steps for
// an order>=2 left child, s^2 when the metric needs the child FHT); the
// parallel scheme evaluates them concurrently (1 and s steps respectively)
// and keeps the winning spectrum around, so a first-order left child never
// recomputes its FHT. Op counts assume that spectrum reuse as well, which is
// why a leaf FHT below an FHT-metric SP node charges no ops.
class CostLedger {
public:
    std::uint64_t adds = 0;
    std::uint64_t compares = 0;
    std::uint64_t steps_seq = 0;
    std::uint64_t steps_par = 0;

    std::uint64_t flops() const { return adds + compares; }
    std::uint64_t time_steps(SpMode mode) const {
        return mode == SpMode::kSequential ? steps_seq : steps_par;
    }

    void charge_f_stage(int half, int n_paths) {
        adds += 0;
        compares += static_cast<std::uint64_t>(half) * n_paths;
        step(1, 1);
    }
    void charge_g_stage(int half, int n_paths) {
        adds += static_cast<std::uint64_t>(half) * n_paths;
        step(1, 1);
    }

    // Permutation-selection block at a stage-s node. Per candidate and path:
    // half f-ops plus the metric (abs-sum for child_order >= 2, child FHT and
    // spectrum max for child_order == 1) plus the running-max compare.
    void charge_sp_block(int stage, int child_order, int n_candidates, int n_paths) {
        const std::uint64_t half = 1ull << (stage - 1);
        std::uint64_t per_candidate = half;  // f ops (compares)
        if (child_order == 1) {
            per_candidate += static_cast<std::uint64_t>(stage - 1) * half;  // child FHT
            per_candidate += half - 1;                                      // spectrum max
        } else {
            per_candidate += half - 1;  // abs-sum
        }
        per_candidate += 1;  // metric running max
        const std::uint64_t total =
            per_candidate * static_cast<std::uint64_t>(n_candidates) * n_paths;
        // ops are a mix of compares (f, maxes) and adds; the totals only feed
        // the combined flop count, so book the f part as compares and the rest
        // as adds.
        compares += static_cast<std::uint64_t>(half + (child_order == 1 ? half : 0)) *
                    n_candidates * n_paths;
        adds += total - static_cast<std::uint64_t>(half + (child_order == 1 ? half : 0)) *
                            n_candidates * n_paths;
        if (child_order == 1)
            step(static_cast<std::uint64_t>(stage) * stage, stage);
        else
            step(stage, 1);
    }

    // FHT-List over a stage-s leaf: per path the FHT (skipped entirely when
    // the parent SP block already produced the spectrum), the abs-sum, the
    // spectrum sort ranking the candidates and the batched metric update for
    // the retained ones. The global candidate merge is charged by the prune.
    void charge_fht_list(int stage, int n_paths, int list_size, bool spectrum_reused) {
        const std::uint64_t n = 1ull << stage;
        if (!spectrum_reused) {
            adds += static_cast<std::uint64_t>(stage) * n * n_paths;
            step(stage, stage);
        } else {
            step(stage, 0);  // sequential SP does not keep the spectrum
        }
        adds += (n - 1) * n_paths;  // abs-sum
        step(1, 1);
        compares += static_cast<std::uint64_t>(stage) * n * n_paths;  // spectrum sort
        step(stage, stage);
        const std::uint64_t retained = std::min<std::uint64_t>(list_size, 2 * n);
        adds += 2 * retained * n_paths;  // pm batch for retained candidates
        step(1, 1);
    }

    // SPC-List over a length-n leaf: per path the reliability sort and the
    // parity penalty, then one pm batch per split. The per-split pruning sort
    // is charged by the prune itself.
    void charge_spc_list(int n, int n_paths, int list_size, int splits) {
        (void)list_size;
        const int log_n = ceil_log2(n);
        compares += static_cast<std::uint64_t>(n) * log_n * n_paths;
        step(log_n, log_n);
        adds += static_cast<std::uint64_t>(n_paths);  // parity penalty
        step(1, 1);
        for (int t = 0; t < splits; ++t) {
            adds += 2ull * n_paths;  // flip-branch pm updates
            step(1, 1);
        }
    }

    // Single-path SSC-FHT leaf charges: spectrum max instead of a sort.
    void charge_fht_single(int stage) {
        const std::uint64_t n = 1ull << stage;
        adds += static_cast<std::uint64_t>(stage) * n;
        step(stage, stage);
        adds += n - 1;      // abs-sum
        compares += n - 1;  // spectrum max
        adds += 2;          // pm update
        step(3, 3);
    }
    void charge_spc_single(int n) {
        compares += static_cast<std::uint64_t>(n) - 1;  // argmin scan
        adds += 1;                                      // parity penalty
        step(2, 2);
    }

    // Merge-sort prune of n candidates down to the list size; free when the
    // list already fits.
    void charge_sort(std::uint64_t n, int list_size) {
        if (n <= static_cast<std::uint64_t>(list_size))
            return;
        const int log_n = ceil_log2(n);
        compares += n * log_n;
        step(log_n, log_n);
    }

    void charge_best_path_select(int n_paths) {
        if (n_paths > 1) {
            compares += static_cast<std::uint64_t>(n_paths) - 1;
            step(1, 1);
        }
    }

    // Fold a branch that runs concurrently with other branches (ensemble
    // members, permutation decodes): ops and sequential steps accumulate,
    // parallel steps take the widest branch.
    void merge_parallel_branches(const CostLedger* branches, int count) {
        std::uint64_t widest = 0;
        for (int i = 0; i < count; ++i) {
            adds += branches[i].adds;
            compares += branches[i].compares;
            steps_seq += branches[i].steps_seq;
            widest = std::max(widest, branches[i].steps_par);
        }
        steps_par += widest;
    }

    static int ceil_log2(std::uint64_t n) {
        int log = 0;
        while ((1ull << log) < n)
            ++log;
        return log;
    }

private:
    void step(std::uint64_t seq, std::uint64_t par) {
        steps_seq += seq;
        steps_par += par;
    }
};

// Memory footprint in bits per the decoder's storage layout. T > 1 gives the
// ensemble figure ((per-branch storage) * T plus the NQ staging buffer); T = 1
// reduces exactly to the single-decoder rows.
std::uint64_t memory_bits(const RmCode& code, int L, int Q, SpMode mode, int T);

}  // namespace sprld
