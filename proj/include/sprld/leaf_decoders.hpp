#pragma once

#include <algorithm>
#include <vector>

#include "sprld/cost_model.hpp"
#include "sprld/gf2_perm.hpp"
#include "sprld/rm_code.hpp"

namespace sprld {

// One active decoding path. alpha and x_hat live in the path's local permuted
// domain; pi_init is the code-level initial permutation carried through the
// whole decode, pi_sp the permutation selected at the current node (identity
// when SP is off). l_org points back at the input path of the enclosing node
// call this path descends from.
struct DecodePath {
    LlrVec alpha;
    double pm = 0.0;
    HardVec x_hat;
    AffinePerm pi_init;
    AffinePerm pi_sp;
    int l_org = 0;
};

// Walsh-Hadamard spectrum via log2(n) in-place butterfly stages. Entry k is
// the correlation of alpha with the bipolar evaluation of the linear Boolean
// function with coefficient mask k.
std::vector<double> fht(LlrVec alpha);

// ML list decoding of a first-order node: every input path contributes all
// 2^(s+1) affine codewords with pm increment (sum|alpha| - c)/2, where c is
// the signed spectrum correlation of the chosen word; the merged candidates
// are pruned to the L smallest metrics. Ties break on (parent, candidate)
// order. spectrum_reused marks that the enclosing SP block already computed
// the spectra (ledger model only).
std::vector<DecodePath> fht_list(const std::vector<DecodePath>& paths, int L,
                                 CostLedger& ledger, bool spectrum_reused = false);

// List decoding of a single parity-check node: per path, hard decisions with
// the least-reliable bit flipped when parity fails, then min(L-1, n-1)
// synchronized splits over the next least-reliable positions, pruning to L
// after each. Flipping position j toggles the least-reliable bit as well to
// keep parity even, at cost |alpha_j| + (1-2*gamma')|alpha_imin|.
std::vector<DecodePath> spc_list(const std::vector<DecodePath>& paths, int L,
                                 CostLedger& ledger);

// Keeps the L smallest-key entries of v, sorted; charges the merge sort when
// the list overflows. Key must expose pm/parent/seq fields for tie-breaking.
template <typename T>
void prune_candidates(std::vector<T>& v, int L, CostLedger& ledger) {
    if (static_cast<int>(v.size()) > L) {
        ledger.charge_sort(v.size(), L);
        std::sort(v.begin(), v.end(), [](const T& a, const T& b) {
            if (a.pm != b.pm)
                return a.pm < b.pm;
            if (a.parent != b.parent)
                return a.parent < b.parent;
            return a.seq < b.seq;
        });
        v.resize(static_cast<std::size_t>(L));
    } else {
        std::sort(v.begin(), v.end(), [](const T& a, const T& b) {
            if (a.pm != b.pm)
                return a.pm < b.pm;
            if (a.parent != b.parent)
                return a.parent < b.parent;
            return a.seq < b.seq;
        });
    }
}

}  // namespace sprld
